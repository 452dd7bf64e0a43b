#include "fusion/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "fusion/grading.hpp"

namespace fusion {
namespace {

void check_genuine(const ClassVector& x, std::size_t rank) {
  if (x.size() != rank) throw Error(ErrorCode::DimensionMismatch, "class vector length differs from ring rank");
  if (!x.is_nonnegative()) throw Error(ErrorCode::InvalidArgument, "class has negative coefficients");
  if (x.is_zero()) throw Error(ErrorCode::ZeroClass, "kernel of the zero class is undefined");
}

std::string set_string(const FusionRing& ring, const std::vector<Index>& s) {
  std::string out = "{";
  for (Index i : s) out += (out.size() > 1 ? "," : "") + ring.label(i);
  return out + "}";
}

}  // namespace

bool KernelSet::contains(std::size_t t) const {
  return std::binary_search(character_indices.begin(), character_indices.end(), t);
}

KernelSet intersect(const KernelSet& a, const KernelSet& b) {
  KernelSet out;
  std::set_intersection(a.character_indices.begin(), a.character_indices.end(), b.character_indices.begin(),
                        b.character_indices.end(), std::back_inserter(out.character_indices));
  return out;
}

Subcategory kernel_of_character(const FusionRing& ring, const FPData& fp, const Character& mu, const Tolerance& tol) {
  Subcategory sub;
  for (Index j = 0; j < ring.rank(); ++j)
    if (std::abs(mu[j] - fp[j]) < tol.equality) sub.members.push_back(j);
  if (!is_closed(ring, sub.members)) {
    throw Error(ErrorCode::ClosureViolation, "kernel " + set_string(ring, sub.members) +
                                                 " is not closed; the tolerance misclassified a value");
  }
  return sub;
}

Subcategory kernel_of_character(const FusionRing& ring, const FPData& fp, const CharacterTable& table, std::size_t t,
                                const Tolerance& tol) {
  if (t >= table.size()) throw Error(ErrorCode::InvalidArgument, "character index out of range");
  return kernel_of_character(ring, fp, table[t], tol);
}

KernelSet kernel_of_class(const FusionRing& ring, const FPData& fp, const CharacterTable& table, const ClassVector& x,
                          const Tolerance& tol) {
  check_genuine(x, ring.rank());
  const double dim = fp_evaluate(fp, x);
  KernelSet out;
  for (std::size_t t = 0; t < table.size(); ++t)
    if (std::abs(table[t](x) - dim) < tol.equality) out.character_indices.push_back(t);
  return out;
}

KernelSet center_of_class(const FusionRing& ring, const FPData& fp, const CharacterTable& table, const ClassVector& x,
                          const Tolerance& tol) {
  check_genuine(x, ring.rank());
  const double dim = fp_evaluate(fp, x);
  KernelSet out;
  for (std::size_t t = 0; t < table.size(); ++t)
    if (std::abs(std::abs(table[t](x)) - dim) < tol.equality) out.character_indices.push_back(t);
  return out;
}

BrauerCapExceeded::BrauerCapExceeded(BrauerReport report)
    : Error(ErrorCode::CapExceeded,
            "trivial kernel but not every simple occurs in X^0..X^" + std::to_string(report.cap_used) +
                (report.faithful ? " (object is faithful: raise the cap)" : " (object is not faithful)")),
      report_(std::move(report)) {}

unsigned default_brauer_cap(const FusionRing& ring, Index i) {
  const auto r = static_cast<unsigned>(generated_subcategory(ring, {i}).size());
  return (r - 1) * (r - 1) + 1 + object_index(ring, i);
}

BrauerReport verify_brauer(const FusionRing& ring, const FPData& fp, const CharacterTable& table, Index i,
                           std::optional<unsigned> cap, const Tolerance& tol) {
  const std::size_t r = ring.rank();
  if (i >= r) throw Error(ErrorCode::InvalidArgument, "simple index out of range");
  if (cap && *cap < 1) throw Error(ErrorCode::InvalidArgument, "Brauer cap must be >= 1");

  BrauerReport report;
  report.object = i;
  report.cap_used = cap.value_or(default_brauer_cap(ring, i));
  report.faithful_expected = kernel_of_class(ring, fp, table, ClassVector::basis(r, i), tol).trivial();
  report.faithful = is_faithful(ring, i);

  Support s = unit_support(r);
  for (unsigned n = 0; n <= report.cap_used; ++n) {
    if (n > 0) s = multiply_support(ring, i, s);
    for (Index j = 0; j < r; ++j)
      if (s[j]) report.exponents.emplace(j, n);
    if (report.all_found(r)) break;
  }

  const bool all = report.all_found(r);
  if (report.faithful_expected && !all) throw BrauerCapExceeded(std::move(report));
  if (report.faithful_expected != all || all != report.faithful) {
    throw Error(ErrorCode::TheoremViolation, "trivial kernel, exhaustion by powers and faithfulness disagree for " +
                                                 ring.label(i));
  }
  return report;
}

KernelSet kernel_via_subring_idempotents(const FusionRing& ring, const FPData& fp, const CharacterTable& table,
                                         Index i, const SpectralOptions& options) {
  const Subcategory d = generated_subcategory(ring, {i});
  // restrict() asserts closure; FPdims of D are the ambient ones.
  static_cast<void>(restrict(ring, d));
  double dim_d = 0.0;
  for (Index j : d.members) dim_d += fp[j] * fp[j];

  ComplexVector e(ring.rank(), Complex{0.0, 0.0});
  for (Index j : d.members) e[j] = fp[j] / dim_d;

  KernelSet out;
  for (std::size_t t = 0; t < table.size(); ++t) {
    const Complex value = table[t](e);
    const bool one = std::abs(value - 1.0) < options.tolerance.equality;
    if (!one && std::abs(value) >= options.tolerance.equality) {
      throw Error(ErrorCode::InternalInconsistency, "idempotent of C(" + ring.label(i) + ") evaluates to neither 0 nor 1");
    }
    if (one) out.character_indices.push_back(t);
  }
  return out;
}

}  // namespace fusion
