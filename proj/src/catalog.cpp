#include "fusion/catalog.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <functional>
#include <numbers>

namespace fusion {
namespace {

// Dense r^3 tensor with a setter, to keep the table definitions readable.
class Rules {
 public:
  explicit Rules(std::size_t r) : r_(r), n_(r * r * r, 0) {}
  void set(Index i, Index j, Index k, Multiplicity m = 1) { n_[(i * r_ + j) * r_ + k] = m; }
  void symmetric(Index i, Index j, Index k, Multiplicity m = 1) {
    set(i, j, k, m);
    set(j, i, k, m);
  }
  std::vector<Multiplicity> take() && { return std::move(n_); }

 private:
  std::size_t r_;
  std::vector<Multiplicity> n_;
};

std::vector<std::string> power_labels(unsigned n) {
  std::vector<std::string> labels{"1"};
  if (n > 1) labels.push_back("g");
  for (unsigned a = 2; a < n; ++a) labels.push_back("g^" + std::to_string(a));
  return labels;
}

std::string spin_label(unsigned twice_spin) {
  return twice_spin % 2 == 0 ? std::to_string(twice_spin / 2) : std::to_string(twice_spin) + "/2";
}

// Parses "<prefix><n>" or "<alt_prefix><n>)" into n.
std::optional<unsigned> parse_param(std::string_view name, std::string_view prefix, std::string_view alt_prefix) {
  std::string_view digits;
  if (name.starts_with(alt_prefix) && name.ends_with(")")) {
    digits = name.substr(alt_prefix.size(), name.size() - alt_prefix.size() - 1);
  } else if (name.starts_with(prefix)) {
    digits = name.substr(prefix.size());
  } else {
    return std::nullopt;
  }
  unsigned value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return value;
}

CatalogEntry make_entry(std::string name, FusionRing ring, std::optional<Eigen::MatrixXcd> s, std::string notes) {
  const auto report = validate(ring);
  if (!report.valid()) {
    throw Error(ErrorCode::InternalInconsistency, "built-in '" + name + "' fails validation");
  }
  std::optional<ModularData> md;
  if (s) {
    md.emplace(ModularData::create(std::move(*s), ring));
    check_verlinde_round_trip(*md);
  }
  return CatalogEntry{std::move(name), std::move(ring), std::move(md), std::move(notes)};
}

}  // namespace

FusionRing trivial_ring() { return FusionRing("trivial", {"1"}, {0}, {1}); }

FusionRing pointed_cyclic_ring(unsigned n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclic group order must be >= 1");
  Rules rules(n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) rules.set(a, b, (a + b) % n);
  return FusionRing::from_structure("pointed_z" + std::to_string(n), power_labels(n), std::move(rules).take());
}

FusionRing group_ring_s3() {
  // Permutations of {0,1,2} as images; identity first.
  using Perm = std::array<int, 3>;
  const std::vector<Perm> elems{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  const std::vector<std::string> labels{"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  auto index_of = [&](const Perm& p) {
    return static_cast<Index>(std::find(elems.begin(), elems.end(), p) - elems.begin());
  };
  Rules rules(6);
  for (Index g = 0; g < 6; ++g)
    for (Index h = 0; h < 6; ++h) {
      Perm gh{};
      for (int x = 0; x < 3; ++x) gh[x] = elems[g][elems[h][x]];
      rules.set(g, h, index_of(gh));
    }
  return FusionRing::from_structure("vec_s3", labels, std::move(rules).take());
}

FusionRing rep_s3_ring() {
  enum : Index { kOne, kSign, kV };
  Rules rules(3);
  for (Index x = 0; x < 3; ++x) rules.symmetric(kOne, x, x);
  rules.set(kSign, kSign, kOne);
  rules.symmetric(kSign, kV, kV);
  rules.set(kV, kV, kOne);
  rules.set(kV, kV, kSign);
  rules.set(kV, kV, kV);
  return FusionRing::from_structure("rep_s3", {"1", "sgn", "V"}, std::move(rules).take());
}

FusionRing rep_q8_ring() {
  // 1, a, b, ab form Z2 x Z2 (bit masks 0..3); V is the 2-dimensional irrep.
  constexpr Index kV = 4;
  Rules rules(5);
  for (Index x = 0; x < 4; ++x) {
    for (Index y = 0; y < 4; ++y) rules.set(x, y, x ^ y);
    rules.symmetric(x, kV, kV);
    rules.set(kV, kV, x);
  }
  return FusionRing::from_structure("rep_q8", {"1", "a", "b", "ab", "V"}, std::move(rules).take());
}

FusionRing fibonacci_ring() {
  Rules rules(2);
  rules.set(0, 0, 0);
  rules.symmetric(0, 1, 1);
  rules.set(1, 1, 0);
  rules.set(1, 1, 1);
  return FusionRing::from_structure("fibonacci", {"1", "tau"}, std::move(rules).take());
}

FusionRing ising_ring() {
  enum : Index { kOne, kPsi, kSigma };
  Rules rules(3);
  for (Index x = 0; x < 3; ++x) rules.symmetric(kOne, x, x);
  rules.set(kPsi, kPsi, kOne);
  rules.symmetric(kPsi, kSigma, kSigma);
  rules.set(kSigma, kSigma, kOne);
  rules.set(kSigma, kSigma, kPsi);
  return FusionRing::from_structure("ising", {"1", "psi", "sigma"}, std::move(rules).take());
}

FusionRing tambara_yamagami_ring(unsigned n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "group order must be >= 1");
  const Index m = n;
  Rules rules(n + 1);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) rules.set(a, b, (a + b) % n);
    rules.symmetric(a, m, m);
    rules.set(m, m, a);
  }
  auto labels = power_labels(n);
  labels.push_back("m");
  return FusionRing::from_structure("tambara_yamagami_z" + std::to_string(n), std::move(labels), std::move(rules).take());
}

FusionRing su2_ring(unsigned k) {
  const Index r = k + 1;
  Rules rules(r);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j) {
      const Index lo = i > j ? i - j : j - i;
      const Index hi = std::min(i + j, 2 * k - i - j);
      for (Index l = lo; l <= hi; l += 2) rules.set(i, j, l);
    }
  std::vector<std::string> labels;
  for (unsigned a = 0; a <= k; ++a) labels.push_back(spin_label(a));
  return FusionRing::from_structure("su2_" + std::to_string(k), std::move(labels), std::move(rules).take());
}

Eigen::MatrixXcd fibonacci_smatrix() {
  const double phi = std::numbers::phi;
  Eigen::MatrixXcd s(2, 2);
  s << 1.0, phi, phi, -1.0;
  return s / std::sqrt(2.0 + phi);
}

Eigen::MatrixXcd ising_smatrix() {
  // Basis (1, psi, sigma).
  const double r2 = std::numbers::sqrt2;
  Eigen::MatrixXcd s(3, 3);
  s << 1.0, 1.0, r2, 1.0, 1.0, -r2, r2, -r2, 0.0;
  return s / 2.0;
}

Eigen::MatrixXcd pointed_cyclic_smatrix(unsigned n) {
  Eigen::MatrixXcd s(n, n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      s(a, b) = std::polar(1.0 / std::sqrt(static_cast<double>(n)),
                           2.0 * std::numbers::pi * static_cast<double>((a * b) % n) / n);
  return s;
}

Eigen::MatrixXcd su2_smatrix(unsigned k) {
  const unsigned r = k + 1;
  const double scale = std::sqrt(2.0 / (k + 2));
  Eigen::MatrixXcd s(r, r);
  for (unsigned a = 0; a < r; ++a)
    for (unsigned b = 0; b < r; ++b)
      s(a, b) = scale * std::sin(std::numbers::pi * (a + 1) * (b + 1) / (k + 2));
  return s;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names{"trivial"};
  for (unsigned n = 1; n <= 24; ++n) names.push_back("pointed_z" + std::to_string(n));
  for (const char* fixed : {"vec_s3", "rep_s3", "rep_q8", "fibonacci", "ising"}) names.emplace_back(fixed);
  for (unsigned n = 1; n <= 12; ++n) names.push_back("tambara_yamagami_z" + std::to_string(n));
  for (unsigned k = 1; k <= 10; ++k) names.push_back("su2_" + std::to_string(k));
  return names;
}

CatalogEntry builtin(std::string_view name) {
  if (name == "trivial") return make_entry("trivial", trivial_ring(), Eigen::MatrixXcd::Ones(1, 1), "unit ring");
  if (name == "vec_s3") return make_entry("vec_s3", group_ring_s3(), std::nullopt, "group ring of S3 (noncommutative)");
  if (name == "rep_s3") {
    return make_entry("rep_s3", rep_s3_ring(), std::nullopt, "character ring of S3: sgn^2 = 1, V^2 = 1 + sgn + V");
  }
  if (name == "rep_q8") {
    return make_entry("rep_q8", rep_q8_ring(), std::nullopt, "character ring of Q8: V^2 = 1 + a + b + ab");
  }
  if (name == "fibonacci") {
    return make_entry("fibonacci", fibonacci_ring(), fibonacci_smatrix(), "tau^2 = 1 + tau");
  }
  if (name == "ising") {
    return make_entry("ising", ising_ring(), ising_smatrix(), "sigma^2 = 1 + psi, sigma psi = sigma, psi^2 = 1");
  }
  if (auto n = parse_param(name, "pointed_z", "pointed_zn("); n && *n >= 1 && *n <= 24) {
    return make_entry("pointed_z" + std::to_string(*n), pointed_cyclic_ring(*n), pointed_cyclic_smatrix(*n),
                      "group ring of Z_" + std::to_string(*n));
  }
  if (auto n = parse_param(name, "tambara_yamagami_z", "tambara_yamagami_zn("); n && *n >= 1 && *n <= 12) {
    return make_entry("tambara_yamagami_z" + std::to_string(*n), tambara_yamagami_ring(*n), std::nullopt,
                      "Z_" + std::to_string(*n) + " plus m with g m = m g = m, m^2 = sum of g");
  }
  if (auto k = parse_param(name, "su2_", "su2_k("); k && *k >= 1 && *k <= 10) {
    return make_entry("su2_" + std::to_string(*k), su2_ring(*k), su2_smatrix(*k),
                      "truncated Clebsch-Gordan rule at level " + std::to_string(*k));
  }
  throw Error(ErrorCode::UnknownName, "no built-in ring named '" + std::string(name) + "'");
}

void check_verlinde_round_trip(const ModularData& md) {
  FusionRing rebuilt = [&] {
    try {
      return verlinde_ring(md.s(), md.ring().labels(), md.ring().name());
    } catch (const Error& e) {
      throw Error(ErrorCode::VerlindeMismatch, std::string("S-matrix does not reconstruct a ring: ") + e.what());
    }
  }();
  if (!(rebuilt == md.ring())) {
    throw Error(ErrorCode::VerlindeMismatch, "Verlinde fusion rules differ from ring '" + md.ring().name() + "'");
  }
}

FusionRing resolve_ring(const std::string& name_or_path, bool check) {
  try {
    return builtin(name_or_path).ring;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnknownName) throw;
  }
  if (!std::filesystem::exists(name_or_path)) {
    throw Error(ErrorCode::UnknownName, "'" + name_or_path + "' is neither a built-in nor an existing file");
  }
  return load_ring(name_or_path, check);
}

}  // namespace fusion
