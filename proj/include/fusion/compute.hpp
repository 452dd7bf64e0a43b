#pragma once

// Data-parallel inner loops of the library. Each kernel has a serial
// reference implementation and an OpenMP implementation with identical
// results; the public API dispatches to the OpenMP one when it is compiled in.
// The serial versions are kept for tests and the benchmark.

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fusion/ring.hpp"

namespace fusion::compute {

struct AssociativityScan {
  std::size_t violations = 0;
  std::optional<std::array<Index, 4>> first;  // lexicographically smallest (i, j, k, l)

  bool operator==(const AssociativityScan&) const = default;
};

/// Dense r^3 tensor of complex Verlinde sums, same layout as FusionRing.
using ComplexTensor = std::vector<std::complex<double>>;

namespace serial {

AssociativityScan associativity(std::span<const Multiplicity> n, std::size_t rank);

/// (u v)[k] = sum_{ij} u[i] v[j] N(i, j, k). Throws Overflow.
std::vector<Multiplicity> multiply(std::span<const Multiplicity> n, std::size_t rank,
                                   std::span<const Multiplicity> u, std::span<const Multiplicity> v);

/// N(i, j, k) = sum_m U(i, m) U(j, m) conj(U(k, m)) / U(0, m) for a unitary,
/// row-major rank x rank matrix U.
ComplexTensor verlinde(std::span<const std::complex<double>> unitary, std::size_t rank);

}  // namespace serial

namespace omp {

AssociativityScan associativity(std::span<const Multiplicity> n, std::size_t rank);
std::vector<Multiplicity> multiply(std::span<const Multiplicity> n, std::size_t rank,
                                   std::span<const Multiplicity> u, std::span<const Multiplicity> v);
ComplexTensor verlinde(std::span<const std::complex<double>> unitary, std::size_t rank);

}  // namespace omp

/// True when the omp:: kernels were compiled with OpenMP (otherwise they run
/// serially with the same loop structure).
bool openmp_enabled() noexcept;

/// Ranks below this run the serial kernels; thread start-up dominates there.
inline constexpr std::size_t kParallelRankThreshold = 12;

AssociativityScan associativity(std::span<const Multiplicity> n, std::size_t rank);
std::vector<Multiplicity> multiply(std::span<const Multiplicity> n, std::size_t rank,
                                   std::span<const Multiplicity> u, std::span<const Multiplicity> v);
ComplexTensor verlinde(std::span<const std::complex<double>> unitary, std::size_t rank);

}  // namespace fusion::compute
