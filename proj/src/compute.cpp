#include "fusion/compute.hpp"

#include <algorithm>
#include <limits>

#ifdef FUSION_HAVE_OPENMP
#include <omp.h>
#endif

namespace fusion::compute {
namespace {

// acc += a * b; returns false on overflow.
inline bool fma_checked(Multiplicity& acc, Multiplicity a, Multiplicity b) noexcept {
  Multiplicity prod = 0;
  if (__builtin_mul_overflow(a, b, &prod)) return false;
  return !__builtin_add_overflow(acc, prod, &acc);
}

[[noreturn]] void throw_overflow(const char* where) {
  throw Error(ErrorCode::Overflow, std::string("integer overflow in ") + where);
}

inline std::size_t at(std::size_t r, Index i, Index j, Index k) noexcept { return (i * r + j) * r + k; }

// Compares both bracketings of (i j k) on the l coordinate.
inline bool associative_at(std::span<const Multiplicity> n, std::size_t r, Index i, Index j, Index k,
                           Index l, bool& overflow) noexcept {
  Multiplicity lhs = 0;
  Multiplicity rhs = 0;
  for (Index m = 0; m < r; ++m) {
    if (!fma_checked(lhs, n[at(r, i, j, m)], n[at(r, m, k, l)])) overflow = true;
    if (!fma_checked(rhs, n[at(r, j, k, m)], n[at(r, i, m, l)])) overflow = true;
  }
  return lhs == rhs;
}

void check_sizes(std::span<const Multiplicity> n, std::size_t r) {
  if (n.size() != r * r * r) {
    throw Error(ErrorCode::DimensionMismatch, "structure tensor has " + std::to_string(n.size()) +
                                                  " entries, expected " + std::to_string(r * r * r));
  }
}

void check_vectors(std::size_t r, std::span<const Multiplicity> u, std::span<const Multiplicity> v) {
  if (u.size() != r || v.size() != r) {
    throw Error(ErrorCode::DimensionMismatch, "class vector length differs from ring rank");
  }
}

inline std::complex<double> verlinde_entry(std::span<const std::complex<double>> u, std::size_t r, Index i,
                                           Index j, Index k) noexcept {
  std::complex<double> sum{0.0, 0.0};
  for (Index m = 0; m < r; ++m) {
    sum += u[i * r + m] * u[j * r + m] * std::conj(u[k * r + m]) / u[m];
  }
  return sum;
}

}  // namespace

namespace serial {

AssociativityScan associativity(std::span<const Multiplicity> n, std::size_t r) {
  check_sizes(n, r);
  AssociativityScan scan;
  bool overflow = false;
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j)
      for (Index k = 0; k < r; ++k)
        for (Index l = 0; l < r; ++l) {
          if (associative_at(n, r, i, j, k, l, overflow)) continue;
          if (!scan.first) scan.first = std::array<Index, 4>{i, j, k, l};
          ++scan.violations;
        }
  if (overflow) throw_overflow("associativity check");
  return scan;
}

std::vector<Multiplicity> multiply(std::span<const Multiplicity> n, std::size_t r,
                                   std::span<const Multiplicity> u, std::span<const Multiplicity> v) {
  check_sizes(n, r);
  check_vectors(r, u, v);
  std::vector<Multiplicity> out(r, 0);
  for (Index i = 0; i < r; ++i) {
    if (u[i] == 0) continue;
    for (Index j = 0; j < r; ++j) {
      if (v[j] == 0) continue;
      Multiplicity uv = 0;
      if (__builtin_mul_overflow(u[i], v[j], &uv)) throw_overflow("multiply");
      for (Index k = 0; k < r; ++k) {
        if (!fma_checked(out[k], uv, n[at(r, i, j, k)])) throw_overflow("multiply");
      }
    }
  }
  return out;
}

ComplexTensor verlinde(std::span<const std::complex<double>> unitary, std::size_t r) {
  if (unitary.size() != r * r) throw Error(ErrorCode::DimensionMismatch, "S-matrix is not square");
  ComplexTensor out(r * r * r);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j)
      for (Index k = 0; k < r; ++k) out[at(r, i, j, k)] = verlinde_entry(unitary, r, i, j, k);
  return out;
}

}  // namespace serial

namespace omp {

AssociativityScan associativity(std::span<const Multiplicity> n, std::size_t r) {
  check_sizes(n, r);
  const auto rr = static_cast<std::ptrdiff_t>(r * r);
  std::size_t violations = 0;
  bool overflow = false;
  // Per-(i, j) first witness; the minimum over the flattened order is the
  // serial answer.
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> first(r * r, kNone);

#pragma omp parallel for schedule(dynamic) reduction(+ : violations) reduction(|| : overflow)
  for (std::ptrdiff_t ij = 0; ij < rr; ++ij) {
    const Index i = static_cast<Index>(ij) / r;
    const Index j = static_cast<Index>(ij) % r;
    for (Index k = 0; k < r; ++k)
      for (Index l = 0; l < r; ++l) {
        bool local_overflow = false;
        const bool ok = associative_at(n, r, i, j, k, l, local_overflow);
        overflow = overflow || local_overflow;
        if (ok) continue;
        if (first[static_cast<std::size_t>(ij)] == kNone) first[static_cast<std::size_t>(ij)] = k * r + l;
        ++violations;
      }
  }
  if (overflow) throw_overflow("associativity check");

  AssociativityScan scan;
  scan.violations = violations;
  for (std::size_t ij = 0; ij < r * r; ++ij) {
    if (first[ij] == kNone) continue;
    scan.first = std::array<Index, 4>{ij / r, ij % r, first[ij] / r, first[ij] % r};
    break;
  }
  return scan;
}

std::vector<Multiplicity> multiply(std::span<const Multiplicity> n, std::size_t r,
                                   std::span<const Multiplicity> u, std::span<const Multiplicity> v) {
  check_sizes(n, r);
  check_vectors(r, u, v);
  std::vector<Multiplicity> out(r, 0);
  bool overflow = false;
  const auto rs = static_cast<std::ptrdiff_t>(r);

#pragma omp parallel for reduction(|| : overflow)
  for (std::ptrdiff_t ks = 0; ks < rs; ++ks) {
    const auto k = static_cast<Index>(ks);
    Multiplicity acc = 0;
    bool bad = false;
    for (Index i = 0; i < r && !bad; ++i) {
      if (u[i] == 0) continue;
      for (Index j = 0; j < r; ++j) {
        const Multiplicity c = n[at(r, i, j, k)];
        if (c == 0 || v[j] == 0) continue;
        Multiplicity uv = 0;
        if (__builtin_mul_overflow(u[i], v[j], &uv) || !fma_checked(acc, uv, c)) {
          bad = true;
          break;
        }
      }
    }
    out[k] = acc;
    overflow = overflow || bad;
  }
  if (overflow) throw_overflow("multiply");
  return out;
}

ComplexTensor verlinde(std::span<const std::complex<double>> unitary, std::size_t r) {
  if (unitary.size() != r * r) throw Error(ErrorCode::DimensionMismatch, "S-matrix is not square");
  ComplexTensor out(r * r * r);
  const auto rr = static_cast<std::ptrdiff_t>(r * r);

#pragma omp parallel for
  for (std::ptrdiff_t ij = 0; ij < rr; ++ij) {
    const Index i = static_cast<Index>(ij) / r;
    const Index j = static_cast<Index>(ij) % r;
    for (Index k = 0; k < r; ++k) out[at(r, i, j, k)] = verlinde_entry(unitary, r, i, j, k);
  }
  return out;
}

}  // namespace omp

bool openmp_enabled() noexcept {
#ifdef FUSION_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

AssociativityScan associativity(std::span<const Multiplicity> n, std::size_t rank) {
  return rank < kParallelRankThreshold ? serial::associativity(n, rank) : omp::associativity(n, rank);
}

std::vector<Multiplicity> multiply(std::span<const Multiplicity> n, std::size_t rank,
                                   std::span<const Multiplicity> u, std::span<const Multiplicity> v) {
  return rank < kParallelRankThreshold ? serial::multiply(n, rank, u, v) : omp::multiply(n, rank, u, v);
}

ComplexTensor verlinde(std::span<const std::complex<double>> unitary, std::size_t rank) {
  return rank < kParallelRankThreshold ? serial::verlinde(unitary, rank) : omp::verlinde(unitary, rank);
}

}  // namespace fusion::compute
