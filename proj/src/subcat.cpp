#include "fusion/subcat.hpp"

#include <algorithm>
#include <deque>

namespace fusion {

bool Subcategory::contains(Index i) const { return std::binary_search(members.begin(), members.end(), i); }

Subcategory generated_subcategory(const FusionRing& ring, const std::vector<Index>& generators) {
  const std::size_t r = ring.rank();
  std::vector<bool> in(r, false);
  in[FusionRing::unit()] = true;
  for (Index g : generators) {
    if (g >= r) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
    in[g] = true;
  }
  for (bool grew = true; grew;) {
    grew = false;
    for (Index i = 0; i < r; ++i) {
      if (!in[i]) continue;
      if (!in[ring.dual(i)]) in[ring.dual(i)] = grew = true;
      for (Index j = 0; j < r; ++j) {
        if (!in[j]) continue;
        for (Index k = 0; k < r; ++k)
          if (!in[k] && ring(i, j, k) > 0) in[k] = grew = true;
      }
    }
  }
  Subcategory sub;
  for (Index i = 0; i < r; ++i)
    if (in[i]) sub.members.push_back(i);
  return sub;
}

bool is_closed(const FusionRing& ring, const std::vector<Index>& members) {
  const std::size_t r = ring.rank();
  std::vector<bool> in(r, false);
  for (Index m : members) {
    if (m >= r) return false;
    in[m] = true;
  }
  if (!in[FusionRing::unit()]) return false;
  for (Index i : members) {
    if (!in[ring.dual(i)]) return false;
    for (Index j : members)
      for (Index k = 0; k < r; ++k)
        if (ring(i, j, k) > 0 && !in[k]) return false;
  }
  return true;
}

bool is_faithful(const FusionRing& ring, Index i) {
  return generated_subcategory(ring, {i}).size() == ring.rank();
}

namespace {

std::vector<bool> reachable(const IntMatrix& a, bool forward) {
  const auto n = a.rows();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<Eigen::Index> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const Eigen::Index u = queue.front();
    queue.pop_front();
    for (Eigen::Index v = 0; v < n; ++v) {
      // Edge u -> v iff a(v, u) > 0.
      const Multiplicity w = forward ? a(v, u) : a(u, v);
      if (w > 0 && !seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        queue.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_indecomposable_matrix(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
  if (a.rows() <= 1) return true;
  const auto all = [](const std::vector<bool>& s) { return std::all_of(s.begin(), s.end(), [](bool b) { return b; }); };
  return all(reachable(a, true)) && all(reachable(a, false));
}

FusionRing restrict(const FusionRing& ring, const Subcategory& sub) {
  if (!std::is_sorted(sub.members.begin(), sub.members.end()) ||
      std::adjacent_find(sub.members.begin(), sub.members.end()) != sub.members.end() ||
      !is_closed(ring, sub.members)) {
    throw Error(ErrorCode::NotClosed, "member set is not a fusion subcategory of '" + ring.name() + "'");
  }
  const std::size_t s = sub.size();
  std::vector<Index> position(ring.rank(), 0);
  for (Index a = 0; a < s; ++a) position[sub.members[a]] = a;

  std::vector<std::string> labels;
  std::vector<Index> dual;
  std::vector<Multiplicity> n(s * s * s, 0);
  for (Index a = 0; a < s; ++a) {
    labels.push_back(ring.label(sub.members[a]));
    dual.push_back(position[ring.dual(sub.members[a])]);
    for (Index b = 0; b < s; ++b)
      for (Index c = 0; c < s; ++c) n[(a * s + b) * s + c] = ring(sub.members[a], sub.members[b], sub.members[c]);
  }
  return FusionRing(ring.name() + "|sub", std::move(labels), std::move(dual), std::move(n));
}

}  // namespace fusion
