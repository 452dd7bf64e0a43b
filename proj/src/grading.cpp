#include "fusion/grading.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>

namespace fusion {
namespace {

struct Restriction {
  Subcategory members;
  FusionRing ring;
  Index position;  // index of the generator inside `ring`
};

Restriction restrict_to_generated(const FusionRing& ring, Index i) {
  if (i >= ring.rank()) throw Error(ErrorCode::InvalidArgument, "simple index out of range");
  Subcategory d = generated_subcategory(ring, {i});
  FusionRing sub = restrict(ring, d);
  const auto pos = static_cast<Index>(std::lower_bound(d.members.begin(), d.members.end(), i) - d.members.begin());
  return Restriction{std::move(d), std::move(sub), pos};
}

std::string assignment_string(const FusionRing& ring, const std::map<Index, unsigned>& grades) {
  std::string out;
  for (const auto& [j, g] : grades) out += (out.empty() ? "" : ", ") + ring.label(j) + "->" + std::to_string(g);
  return "{" + out + "}";
}

}  // namespace

unsigned object_index(const FusionRing& ring, Index i) {
  const Restriction res = restrict_to_generated(ring, i);
  const IntMatrix a = fusion_matrix(res.ring, res.position);
  if (!is_indecomposable_matrix(a)) {
    throw Error(ErrorCode::InternalInconsistency, ring.label(i) + " is not faithful in the subcategory it generates");
  }
  const auto n = static_cast<std::size_t>(a.rows());
  std::vector<long> level(n, -1);
  std::deque<std::size_t> queue{FusionRing::unit()};
  level[FusionRing::unit()] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < n; ++v) {
      if (a(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) > 0 && level[v] < 0) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
  }
  long period = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (a(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) > 0)
        period = std::gcd(period, std::labs(level[u] + 1 - level[v]));
  return static_cast<unsigned>(period);
}

unsigned default_order_cap(const FusionRing& ring, Index i) {
  const auto r = static_cast<unsigned>(generated_subcategory(ring, {i}).size());
  return r * r * object_index(ring, i) + r;
}

unsigned object_order(const FusionRing& ring, Index i, std::optional<unsigned> cap) {
  if (i >= ring.rank()) throw Error(ErrorCode::InvalidArgument, "simple index out of range");
  const unsigned limit = cap.value_or(default_order_cap(ring, i));
  if (limit < 1) throw Error(ErrorCode::InvalidArgument, "order cap must be >= 1");
  Support s = unit_support(ring.rank());
  for (unsigned n = 1; n <= limit; ++n) {
    s = multiply_support(ring, i, s);
    if (s[FusionRing::unit()]) return n;
  }
  throw Error(ErrorCode::CapExceeded, "unit not found in " + ring.label(i) + "^n for n <= " + std::to_string(limit));
}

std::map<Index, unsigned> grades_by_exponent(const FusionRing& ring, Index i, unsigned index) {
  const Subcategory d = generated_subcategory(ring, {i});
  std::map<Index, unsigned> grades;
  Support s = unit_support(ring.rank());
  // First appearances are BFS distances, so at most |C(X)| - 1 steps.
  for (unsigned n = 0; n <= d.size() && grades.size() < d.size(); ++n) {
    if (n > 0) s = multiply_support(ring, i, s);
    for (Index j = 0; j < ring.rank(); ++j)
      if (s[j]) grades.emplace(j, n % index);
  }
  if (grades.size() != d.size()) {
    throw Error(ErrorCode::InternalInconsistency, "some simple of C(" + ring.label(i) + ") is not in any power");
  }
  return grades;
}

GradingData universal_grading(const FusionRing& ring, Index i, const FPData& fp, const CharacterTable* table,
                              const SpectralOptions& options) {
  GradingData data;
  data.object = i;
  data.index = object_index(ring, i);
  data.order = object_order(ring, i);
  data.grades = grades_by_exponent(ring, i, data.index);
  data.components.assign(data.index, {});
  for (const auto& [j, g] : data.grades) data.components[g].push_back(j);

  const Restriction res = restrict_to_generated(ring, i);
  const std::vector<Index>& members = res.members.members;

  // Characters of C(X), indexed by ambient simples.
  std::vector<Character> chars;
  if (table != nullptr && table->size() == ring.rank() && is_commutative(ring)) {
    for (const auto& mu : table->characters) chars.push_back(mu);
  } else if (is_commutative(res.ring)) {
    for (const auto& nu : character_table(res.ring, options).characters) {
      Character mu;
      mu.values.assign(ring.rank(), Complex{0.0, 0.0});
      for (Index a = 0; a < members.size(); ++a) mu.values[members[a]] = nu[a];
      chars.push_back(std::move(mu));
    }
  } else {
    data.character_check_skipped = true;
    return data;
  }

  const double eps = options.tolerance.equality;
  const Complex xi = std::polar(1.0, 2.0 * std::numbers::pi / data.index);
  const Character* generator = nullptr;
  for (const auto& mu : chars) {
    if (std::abs(mu[i] - xi * fp[i]) < eps) {
      generator = &mu;
      break;
    }
  }
  if (generator == nullptr) {
    throw Error(ErrorCode::MethodDisagreement, "no character takes exp(2 pi i/" + std::to_string(data.index) +
                                                   ") FPdim on " + ring.label(i));
  }

  std::map<Index, unsigned> by_character;
  for (Index j : members) {
    const Complex ratio = (*generator)[j] / fp[j];
    for (unsigned a = 0; a < data.index; ++a) {
      if (std::abs(ratio - std::polar(1.0, 2.0 * std::numbers::pi * a / data.index)) < eps) {
        by_character.emplace(j, a);
        break;
      }
    }
  }
  if (by_character != data.grades) {
    throw Error(ErrorCode::MethodDisagreement, "exponent grades " + assignment_string(ring, data.grades) +
                                                   " vs character grades " + assignment_string(ring, by_character));
  }
  return data;
}

}  // namespace fusion
