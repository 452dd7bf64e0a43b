#include "fusion/modular.hpp"

#include <cmath>

#include "fusion/compute.hpp"
#include "fusion/kernel.hpp"

namespace fusion {

ModularData ModularData::create(Eigen::MatrixXcd s, FusionRing ring, const SpectralOptions& options) {
  const auto r = static_cast<Eigen::Index>(ring.rank());
  if (s.rows() != r || s.cols() != r) {
    throw Error(ErrorCode::DimensionMismatch, "S-matrix is " + std::to_string(s.rows()) + "x" +
                                                  std::to_string(s.cols()) + " but ring '" + ring.name() +
                                                  "' has rank " + std::to_string(r));
  }
  const double tol = options.tolerance.aggregate;
  const double norm = std::max(1.0, s.cwiseAbs().maxCoeff());
  if ((s - s.transpose()).cwiseAbs().maxCoeff() > tol * norm) {
    throw Error(ErrorCode::InvariantFailed, "S-matrix is not symmetric");
  }

  const Eigen::MatrixXcd gram = s * s.conjugate();
  const double scale = gram(0, 0).real();
  if (!(scale > 0.0) ||
      (gram - scale * Eigen::MatrixXcd::Identity(r, r)).cwiseAbs().maxCoeff() > tol * scale) {
    throw Error(ErrorCode::InvariantFailed, "S-matrix is degenerate: S conj(S) is not a multiple of the identity");
  }

  FPData fp = fp_character(ring, options);
  const Complex s00 = s(0, 0);
  if (!(s00.real() > 0.0) || std::abs(s00.imag()) > tol * norm) {
    throw Error(ErrorCode::InvariantFailed, "S(unit, unit) is not real positive");
  }
  for (Eigen::Index j = 0; j < r; ++j) {
    const Complex q = s(0, j) / s00;
    if (std::abs(q - fp[static_cast<Index>(j)]) > tol * std::max(1.0, fp[static_cast<Index>(j)])) {
      throw Error(ErrorCode::InvariantFailed, "row unit of S is not proportional to FPdims (not pseudo-unitary) at " +
                                                  ring.label(static_cast<Index>(j)));
    }
  }
  const double global_dim = scale / (s00.real() * s00.real());
  return ModularData(std::move(s), std::move(ring), std::move(fp), global_dim, scale);
}

CharacterTable characters_from_smatrix(const ModularData& md, const Tolerance& tol) {
  const auto r = static_cast<Eigen::Index>(md.rank());
  CharacterTable table;
  table.fp_index = 0;
  for (Eigen::Index t = 0; t < r; ++t) {
    const Complex pivot = md.s()(t, 0);
    if (std::abs(pivot) < tol.equality * std::sqrt(md.scale())) {
      throw Error(ErrorCode::ZeroEntry, "S(" + md.ring().label(static_cast<Index>(t)) + ", unit) vanishes");
    }
    Character mu;
    for (Eigen::Index y = 0; y < r; ++y) mu.values.push_back(md.s()(t, y) / pivot);
    table.codegrees.push_back(formal_codegree(md.ring(), mu).real());
    table.characters.push_back(std::move(mu));
  }
  return table;
}

FusionRing verlinde_ring(const Eigen::MatrixXcd& s, std::optional<std::vector<std::string>> labels, std::string name) {
  const auto r = static_cast<Eigen::Index>(s.rows());
  if (r == 0 || s.cols() != r) throw Error(ErrorCode::InvalidRing, "S-matrix is not square");
  const double scale = (s * s.conjugate())(0, 0).real();
  if (!(scale > 0.0)) throw Error(ErrorCode::InvalidRing, "S-matrix has a zero unit row");
  const Eigen::MatrixXcd u = s / std::sqrt(scale);
  for (Eigen::Index m = 0; m < r; ++m) {
    if (std::abs(u(0, m)) < 1e-12) throw Error(ErrorCode::InvalidRing, "unit row of S vanishes at column " + std::to_string(m));
  }

  std::vector<Complex> flat(static_cast<std::size_t>(r * r));
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j) flat[static_cast<std::size_t>(i * r + j)] = u(i, j);
  const auto sums = compute::verlinde(flat, static_cast<std::size_t>(r));

  std::vector<Multiplicity> n(sums.size());
  for (std::size_t e = 0; e < sums.size(); ++e) {
    const double nearest = std::round(sums[e].real());
    if (std::abs(sums[e] - nearest) > kVerlindeIntegrality) {
      throw Error(ErrorCode::NonIntegral, "Verlinde coefficient " + std::to_string(sums[e].real()) + "+" +
                                              std::to_string(sums[e].imag()) + "i is not an integer");
    }
    if (nearest < 0) throw Error(ErrorCode::InvalidRing, "Verlinde coefficient is negative");
    n[e] = static_cast<Multiplicity>(nearest);
  }

  if (!labels) {
    labels.emplace();
    for (Eigen::Index i = 0; i < r; ++i) labels->push_back(std::to_string(i));
  }
  try {
    FusionRing ring = FusionRing::from_structure(std::move(name), std::move(*labels), std::move(n));
    const auto report = validate(ring);
    if (!report.valid()) throw ValidationError(report);
    return ring;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Overflow) throw;
    throw Error(ErrorCode::InvalidRing, std::string("Verlinde reconstruction is not a fusion ring: ") + e.what());
  }
}

Subcategory centralizer(const ModularData& md, Index i, const Tolerance& tol) {
  const CharacterTable table = characters_from_smatrix(md, tol);
  return kernel_of_character(md.ring(), md.fp(), table, i, tol);
}

std::vector<Index> projective_centralizer(const ModularData& md, Index i, const Tolerance& tol) {
  const CharacterTable table = characters_from_smatrix(md, tol);
  if (i >= table.size()) throw Error(ErrorCode::InvalidArgument, "simple index out of range");
  std::vector<Index> out;
  for (Index y = 0; y < md.rank(); ++y)
    if (std::abs(std::abs(table[i][y]) - md.fp()[y]) < tol.equality) out.push_back(y);
  return out;
}

std::vector<Index> invertibles(const FusionRing& ring, const FPData& fp, const Tolerance& tol) {
  const std::size_t r = ring.rank();
  std::vector<Index> out;
  for (Index j = 0; j < r; ++j) {
    const bool numeric = std::abs(fp[j] - 1.0) < tol.equality;
    const bool exact = multiply(ring, ClassVector::basis(r, j), ClassVector::basis(r, ring.dual(j))) ==
                       ClassVector::basis(r, FusionRing::unit());
    if (numeric != exact) {
      throw Error(ErrorCode::InternalInconsistency, "FPdim and X X* = 1 disagree on invertibility of " + ring.label(j));
    }
    if (exact) out.push_back(j);
  }
  return out;
}

}  // namespace fusion
