#include "fusion/ring.hpp"

#include <algorithm>
#include <set>

#include "fusion/compute.hpp"

namespace fusion {

FusionRing::FusionRing(std::string name, std::vector<std::string> labels, std::vector<Index> dual,
                       std::vector<Multiplicity> structure)
    : name_(std::move(name)), labels_(std::move(labels)), dual_(std::move(dual)), structure_(std::move(structure)) {
  const std::size_t r = labels_.size();
  if (r == 0) throw Error(ErrorCode::DimensionMismatch, "fusion ring must have rank >= 1");
  if (structure_.size() != r * r * r) {
    throw Error(ErrorCode::DimensionMismatch, "structure tensor has " + std::to_string(structure_.size()) +
                                                  " entries, rank " + std::to_string(r) + " needs " +
                                                  std::to_string(r * r * r));
  }
  if (dual_.size() != r) {
    throw Error(ErrorCode::DimensionMismatch, "dual has " + std::to_string(dual_.size()) +
                                                  " entries, expected " + std::to_string(r));
  }
  std::vector<bool> hit(r, false);
  for (Index d : dual_) {
    if (d >= r || hit[d]) throw Error(ErrorCode::InvalidArgument, "dual is not a permutation");
    hit[d] = true;
  }
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != r) {
    throw Error(ErrorCode::InvalidArgument, "labels must be distinct");
  }
  if (std::any_of(structure_.begin(), structure_.end(), [](Multiplicity m) { return m < 0; })) {
    throw Error(ErrorCode::InvalidArgument, "structure constants must be nonnegative");
  }
}

FusionRing FusionRing::from_structure(std::string name, std::vector<std::string> labels,
                                      std::vector<Multiplicity> structure) {
  const std::size_t r = labels.size();
  if (structure.size() != r * r * r) {
    throw Error(ErrorCode::DimensionMismatch, "structure tensor size does not match rank " + std::to_string(r));
  }
  auto dual = dual_from_structure(structure, r, 0);
  return FusionRing(std::move(name), std::move(labels), std::move(dual), std::move(structure));
}

std::optional<Index> FusionRing::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Index>(it - labels_.begin());
}

FusionRing FusionRing::renamed(std::string name) const {
  FusionRing copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

ClassVector ClassVector::basis(std::size_t rank, Index i) {
  if (i >= rank) throw Error(ErrorCode::InvalidArgument, "basis index out of range");
  ClassVector v = zero(rank);
  v[i] = 1;
  return v;
}

bool ClassVector::is_zero() const noexcept {
  return std::all_of(coefficients.begin(), coefficients.end(), [](Multiplicity c) { return c == 0; });
}

bool ClassVector::is_nonnegative() const noexcept {
  return std::all_of(coefficients.begin(), coefficients.end(), [](Multiplicity c) { return c >= 0; });
}

std::vector<Index> ClassVector::support() const {
  std::vector<Index> out;
  for (Index i = 0; i < coefficients.size(); ++i)
    if (coefficients[i] != 0) out.push_back(i);
  return out;
}

ClassVector operator+(const ClassVector& a, const ClassVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "class vectors differ in length");
  ClassVector out = a;
  for (Index i = 0; i < a.size(); ++i) {
    if (__builtin_add_overflow(out[i], b[i], &out[i])) throw Error(ErrorCode::Overflow, "class vector sum");
  }
  return out;
}

const Violation* ValidationReport::find(std::string_view axiom) const {
  for (const auto& v : violations)
    if (v.axiom == axiom) return &v;
  return nullptr;
}

bool ValidationReport::violates(std::string_view axiom) const { return find(axiom) != nullptr; }

namespace {

std::string describe(const ValidationReport& report) {
  std::string msg = "ring violates";
  for (const auto& v : report.violations) msg += " " + v.axiom;
  return msg;
}

// Collects the first witness and the count of one axiom's failures.
class ViolationTally {
 public:
  explicit ViolationTally(std::string_view axiom) : violation_{std::string(axiom), {}, 0} {}

  void fail(std::vector<Index> witness) {
    if (violation_.occurrences++ == 0) violation_.witness = std::move(witness);
  }
  void flush(ValidationReport& report) {
    if (violation_.occurrences > 0) report.violations.push_back(std::move(violation_));
  }

 private:
  Violation violation_;
};

}  // namespace

ValidationError::ValidationError(ValidationReport report)
    : Error(ErrorCode::ValidationFailed, describe(report)), report_(std::move(report)) {}

ValidationReport validate(const FusionRing& ring) {
  const std::size_t r = ring.rank();
  const Index one = FusionRing::unit();
  ValidationReport report;

  ViolationTally involution(axiom::kInvolution);
  if (ring.dual(one) != one) involution.fail({one});
  for (Index i = 0; i < r; ++i)
    if (ring.dual(ring.dual(i)) != i) involution.fail({i});
  involution.flush(report);

  // Witness (i, j, k) with i == unit (left law) or j == unit (right law).
  ViolationTally unit(axiom::kUnit);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j)
      for (Index k = 0; k < r; ++k) {
        const bool left_bad = i == one && ring(one, j, k) != (j == k ? 1 : 0);
        const bool right_bad = j == one && ring(i, one, k) != (i == k ? 1 : 0);
        if (left_bad || right_bad) unit.fail({i, j, k});
      }
  unit.flush(report);

  ViolationTally duality(axiom::kDuality);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j)
      if (ring(i, j, one) != (j == ring.dual(i) ? 1 : 0)) duality.fail({i, j});
  duality.flush(report);

  ViolationTally frobenius(axiom::kFrobeniusReciprocity);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j)
      for (Index k = 0; k < r; ++k) {
        const Multiplicity n = ring(i, j, k);
        if (n != ring(ring.dual(i), k, j) || n != ring(k, ring.dual(j), i)) frobenius.fail({i, j, k});
      }
  frobenius.flush(report);

  const auto scan = compute::associativity(ring.structure(), r);
  if (scan.violations > 0) {
    const auto& w = *scan.first;
    report.violations.push_back(
        Violation{std::string(axiom::kAssociativity), {w[0], w[1], w[2], w[3]}, scan.violations});
  }
  return report;
}

std::vector<Index> dual_from_structure(std::span<const Multiplicity> structure, std::size_t rank, Index unit) {
  if (structure.size() != rank * rank * rank) {
    throw Error(ErrorCode::DimensionMismatch, "structure tensor size does not match rank");
  }
  if (unit >= rank) throw Error(ErrorCode::InvalidArgument, "unit index out of range");
  std::vector<Index> dual(rank);
  for (Index i = 0; i < rank; ++i) {
    std::optional<Index> found;
    for (Index j = 0; j < rank; ++j) {
      const Multiplicity m = structure[(i * rank + j) * rank + unit];
      if (m == 0) continue;
      if (m > 1 || found) throw Error(ErrorCode::AmbiguousDual, "simple " + std::to_string(i) + " has several duals");
      found = j;
    }
    if (!found) throw Error(ErrorCode::NoDual, "simple " + std::to_string(i) + " has no dual");
    dual[i] = *found;
  }
  for (Index i = 0; i < rank; ++i) {
    if (dual[dual[i]] != i) {
      throw Error(ErrorCode::AmbiguousDual, "duals of " + std::to_string(i) + " are not mutually inverse");
    }
  }
  return dual;
}

IntMatrix fusion_matrix(const FusionRing& ring, Index i) {
  const std::size_t r = ring.rank();
  if (i >= r) throw Error(ErrorCode::InvalidArgument, "simple index out of range");
  IntMatrix a(r, r);
  for (Index j = 0; j < r; ++j)
    for (Index k = 0; k < r; ++k) a(k, j) = ring(i, j, k);
  return a;
}

ClassVector multiply(const FusionRing& ring, const ClassVector& u, const ClassVector& v) {
  return ClassVector(compute::multiply(ring.structure(), ring.rank(), u.coefficients, v.coefficients));
}

ClassVector tensor_power_class(const FusionRing& ring, Index i, unsigned n) {
  const std::size_t r = ring.rank();
  const ClassVector x = ClassVector::basis(r, i);
  ClassVector acc = ClassVector::basis(r, FusionRing::unit());
  for (unsigned step = 0; step < n; ++step) acc = multiply(ring, x, acc);
  return acc;
}

Support unit_support(std::size_t rank) {
  Support s(rank, false);
  s[FusionRing::unit()] = true;
  return s;
}

Support multiply_support(const FusionRing& ring, Index i, const Support& s) {
  const std::size_t r = ring.rank();
  Support out(r, false);
  for (Index j = 0; j < r; ++j) {
    if (!s[j]) continue;
    for (Index k = 0; k < r; ++k)
      if (ring(i, j, k) > 0) out[k] = true;
  }
  return out;
}

Support power_support(const FusionRing& ring, Index i, unsigned n) {
  if (i >= ring.rank()) throw Error(ErrorCode::InvalidArgument, "simple index out of range");
  Support s = unit_support(ring.rank());
  for (unsigned step = 0; step < n; ++step) s = multiply_support(ring, i, s);
  return s;
}

}  // namespace fusion
