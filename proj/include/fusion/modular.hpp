#pragma once

// S-matrices of pseudo-unitary modular categories: their characters, the
// Verlinde reconstruction of the fusion rules, and (projective) centralizers.

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "fusion/spectral.hpp"
#include "fusion/subcat.hpp"

namespace fusion {

/// A validated S-matrix bound to its fusion ring. Any overall scaling of S is
/// accepted; `global_dim` is FPdim(C) and `scale` the constant with
/// S conj(S) = scale * I.
class ModularData {
 public:
  /// Checks symmetry, nondegeneracy and pseudo-unitarity (row 0 positive and
  /// proportional to FPdims). Throws DimensionMismatch or InvariantFailed.
  static ModularData create(Eigen::MatrixXcd s, FusionRing ring, const SpectralOptions& options = {});

  const Eigen::MatrixXcd& s() const noexcept { return s_; }
  const FusionRing& ring() const noexcept { return ring_; }
  const FPData& fp() const noexcept { return fp_; }
  double global_dim() const noexcept { return global_dim_; }
  double scale() const noexcept { return scale_; }
  std::size_t rank() const noexcept { return ring_.rank(); }

 private:
  ModularData(Eigen::MatrixXcd s, FusionRing ring, FPData fp, double global_dim, double scale)
      : s_(std::move(s)), ring_(std::move(ring)), fp_(std::move(fp)), global_dim_(global_dim), scale_(scale) {}

  Eigen::MatrixXcd s_;
  FusionRing ring_;
  FPData fp_;
  double global_dim_;
  double scale_;
};

/// s_t(Y) = S(t, Y) / S(t, unit), one character per row, in row order (so the
/// FP character, from the unit row, is index 0). Throws ZeroEntry.
CharacterTable characters_from_smatrix(const ModularData& md, const Tolerance& tol = {});

/// Entries farther than this from an integer make verlinde_ring fail.
inline constexpr double kVerlindeIntegrality = 1e-6;

/// Fusion rules from S by the Verlinde formula. Labels default to "0".."r-1".
/// Throws NonIntegral or InvalidRing.
FusionRing verlinde_ring(const Eigen::MatrixXcd& s, std::optional<std::vector<std::string>> labels = std::nullopt,
                         std::string name = "verlinde");

/// Simples centralizing X_i: the kernel of s_i.
Subcategory centralizer(const ModularData& md, Index i, const Tolerance& tol = {});

/// Simples Y with |s_i(Y)| = FPdim(Y).
std::vector<Index> projective_centralizer(const ModularData& md, Index i, const Tolerance& tol = {});

/// Simples of FPdim 1, cross-checked exactly against X X* = 1.
std::vector<Index> invertibles(const FusionRing& ring, const FPData& fp, const Tolerance& tol = {});

}  // namespace fusion
