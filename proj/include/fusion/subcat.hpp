#pragma once

// Fusion subcategories: generated closures, restriction of the ring, and
// faithfulness / matrix indecomposability.

#include <initializer_list>
#include <vector>

#include "fusion/ring.hpp"

namespace fusion {

/// Sorted set of simples closed under the unit, duals and constituents of
/// products.
struct Subcategory {
  std::vector<Index> members;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(Index i) const;
  bool operator==(const Subcategory&) const = default;
};

Subcategory generated_subcategory(const FusionRing& ring, const std::vector<Index>& generators);

bool is_closed(const FusionRing& ring, const std::vector<Index>& members);

bool is_faithful(const FusionRing& ring, Index i);

/// True iff the digraph with an edge j -> k whenever a(k, j) > 0 is strongly
/// connected, i.e. no partition of the index set makes the matrix decomposable.
bool is_indecomposable_matrix(const IntMatrix& a);

/// The fusion ring on `sub`, members renumbered in increasing order (so the
/// unit stays at 0). Throws NotClosed.
FusionRing restrict(const FusionRing& ring, const Subcategory& sub);

}  // namespace fusion
