#pragma once

// Frobenius-Perron dimensions, characters of commutative fusion rings,
// formal codegrees and primitive idempotents.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "fusion/ring.hpp"

namespace fusion {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

struct Tolerance {
  double equality = 1e-9;   // scalar comparisons (kernel membership, grades)
  double aggregate = 1e-8;  // sums over the whole ring (orthogonality, idempotents)
};

inline constexpr std::uint64_t kDefaultSeed = 20140301;

struct SpectralOptions {
  Tolerance tolerance{};
  std::uint64_t seed = kDefaultSeed;
  int max_retries = 8;
  // Power iteration stops once the relative change of every coordinate drops
  // below this; kept well under Tolerance::equality so FPdims are accurate
  // to that tolerance.
  double power_tolerance = 1e-14;
  int power_max_iterations = 10000;
};

struct FPData {
  std::vector<double> dims;
  double global = 0.0;  // sum of dims^2

  double operator[](Index j) const { return dims[j]; }
};

/// A ring homomorphism to C, stored by its values on the simples.
struct Character {
  ComplexVector values;

  Complex operator[](Index j) const { return values[j]; }
  Complex operator()(const ClassVector& x) const;
  Complex operator()(std::span<const Complex> x) const;
};

struct CharacterTable {
  std::vector<Character> characters;
  std::size_t fp_index = 0;
  std::vector<double> codegrees;

  std::size_t size() const noexcept { return characters.size(); }
  const Character& operator[](std::size_t t) const { return characters[t]; }
};

struct IdempotentSet {
  std::vector<ComplexVector> idempotents;
};

/// FPdim of each simple via power iteration on sum_i a(i)^T, started from the
/// all-ones vector and normalized at the unit.
FPData fp_character(const FusionRing& ring, const SpectralOptions& options = {});

double fp_evaluate(const FPData& fp, const ClassVector& x);

/// sum_j FPdim(j) e_j.
ComplexVector regular_element(const FusionRing& ring, const FPData& fp);

bool is_commutative(const FusionRing& ring);

/// All characters of a commutative ring as joint eigenvectors of the a(i)^T,
/// read off one random real combination (seeded, retried with seed+1 on an
/// eigenvalue collision). Ordered FP character first, then lexicographically
/// by (real, imaginary) values.
CharacterTable character_table(const FusionRing& ring, const SpectralOptions& options = {});

/// f = sum_j mu(j) mu(dual j); returned as a complex number so callers can
/// check it is real.
Complex formal_codegree(const FusionRing& ring, const Character& mu);

/// E_i with mu_j(E_i) = delta_ij, by inverting the character matrix.
IdempotentSet primitive_idempotents(const FusionRing& ring, const CharacterTable& table);

/// m_C extended bilinearly: simples are orthonormal.
Multiplicity bilinear_m(const FusionRing& ring, const ClassVector& u, const ClassVector& v);

/// sum over simples X of X X*.
ClassVector adjoint_class(const FusionRing& ring);

/// Ring product extended to complex coefficients.
ComplexVector multiply(const FusionRing& ring, std::span<const Complex> u, std::span<const Complex> v);

ComplexVector to_complex(const ClassVector& x);

/// Largest |mu(e_i) mu(e_j) - sum_k N(i,j,k) mu(e_k)| over all i, j.
double multiplicativity_residual(const FusionRing& ring, const Character& mu);

}  // namespace fusion
