#pragma once

// Imprimitivity index, order and the universal cyclic grading of C(X).

#include <map>
#include <optional>
#include <vector>

#include "fusion/spectral.hpp"
#include "fusion/subcat.hpp"

namespace fusion {

struct GradingData {
  Index object = 0;
  unsigned index = 1;
  unsigned order = 1;
  std::map<Index, unsigned> grades;          // simple of C(X) (ambient index) -> residue mod index
  std::vector<std::vector<Index>> components;  // components[a] = simples of grade a
  bool character_check_skipped = false;      // C(X) noncommutative
};

/// Period of the fusion digraph of X on C(X): gcd over edges u -> v of
/// level(u) + 1 - level(v), levels from a BFS at the unit. Exact.
unsigned object_index(const FusionRing& ring, Index i);

/// rank(C(X))^2 * ind(X) + rank(C(X)).
unsigned default_order_cap(const FusionRing& ring, Index i);

/// Least n >= 1 with the unit a constituent of X^n. Throws CapExceeded.
unsigned object_order(const FusionRing& ring, Index i, std::optional<unsigned> cap = std::nullopt);

/// Grade of each simple of C(X) by the first power of X containing it.
std::map<Index, unsigned> grades_by_exponent(const FusionRing& ring, Index i, unsigned index);

/// Universal grading computed from tensor-power exponents and, when C(X) is
/// commutative, cross-checked against the character with mu(X) =
/// exp(2 pi i / ind) FPdim(X). `table` may be the ambient table or null; the
/// characters of C(X) are the restrictions of ambient characters.
GradingData universal_grading(const FusionRing& ring, Index i, const FPData& fp, const CharacterTable* table,
                              const SpectralOptions& options = {});

}  // namespace fusion
