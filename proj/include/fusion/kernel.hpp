#pragma once

// Kernels and centers of characters and objects, and the Brauer-type
// tensor-power test for faithful objects.

#include <map>
#include <optional>
#include <vector>

#include "fusion/spectral.hpp"
#include "fusion/subcat.hpp"

namespace fusion {

/// Indices into a CharacterTable, sorted. Always contains the FP character.
struct KernelSet {
  std::vector<std::size_t> character_indices;

  std::size_t size() const noexcept { return character_indices.size(); }
  bool contains(std::size_t t) const;
  bool trivial() const noexcept { return character_indices.size() == 1; }
  bool operator==(const KernelSet&) const = default;
};

KernelSet intersect(const KernelSet& a, const KernelSet& b);

/// Simples j with mu_t(j) = FPdim(j) (no modulus). Throws ClosureViolation if
/// the set is not a subcategory, which means the tolerance misclassified.
Subcategory kernel_of_character(const FusionRing& ring, const FPData& fp, const CharacterTable& table,
                                std::size_t t, const Tolerance& tol = {});

/// Same, for a character given by its values.
Subcategory kernel_of_character(const FusionRing& ring, const FPData& fp, const Character& mu,
                                const Tolerance& tol = {});

/// Characters t with mu_t(x) = FPdim(x). x must be a nonzero genuine class.
KernelSet kernel_of_class(const FusionRing& ring, const FPData& fp, const CharacterTable& table,
                          const ClassVector& x, const Tolerance& tol = {});

/// Characters t with |mu_t(x)| = FPdim(x).
KernelSet center_of_class(const FusionRing& ring, const FPData& fp, const CharacterTable& table,
                          const ClassVector& x, const Tolerance& tol = {});

struct BrauerReport {
  Index object = 0;
  bool faithful_expected = false;  // kernel of the object is trivial
  bool faithful = false;           // C(X) is the whole ring
  std::map<Index, unsigned> exponents;  // least n with the simple a constituent of X^n
  unsigned cap_used = 0;

  bool all_found(std::size_t rank) const noexcept { return exponents.size() == rank; }
};

/// Raised when the kernel is trivial but some simple is missing from every
/// power up to the cap. The partial report tells a small cap (faithful) from a
/// genuine counterexample (not faithful).
class BrauerCapExceeded : public Error {
 public:
  explicit BrauerCapExceeded(BrauerReport report);
  const BrauerReport& report() const noexcept { return report_; }

 private:
  BrauerReport report_;
};

/// (r - 1)^2 + 1 + ind(X), r the rank of C(X).
unsigned default_brauer_cap(const FusionRing& ring, Index i);

/// Searches powers X^0..X^cap and checks trivial kernel <=> every simple
/// occurs <=> X faithful. Throws BrauerCapExceeded, or TheoremViolation on
/// any other disagreement.
BrauerReport verify_brauer(const FusionRing& ring, const FPData& fp, const CharacterTable& table, Index i,
                           std::optional<unsigned> cap = std::nullopt, const Tolerance& tol = {});

/// Characters t with mu_t(R_D / FPdim(D)) = 1 where D = C(X_i); the
/// idempotent side of the kernel.
KernelSet kernel_via_subring_idempotents(const FusionRing& ring, const FPData& fp, const CharacterTable& table,
                                         Index i, const SpectralOptions& options = {});

}  // namespace fusion
