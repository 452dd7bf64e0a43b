#include "fusion/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

namespace fusion {
namespace {

// Values this close to zero are printed and compared as exact zeros; the
// eigensolver leaves ~1e-16 noise on entries that vanish exactly.
constexpr double kSnap = 1e-12;

double snap(double x) { return std::abs(x) < kSnap ? 0.0 : x; }

Complex snap(Complex z) { return {snap(z.real()), snap(z.imag())}; }

// Uniform in [1, 2) from raw 53-bit draws so the combination is identical on
// every standard library.
double unit_draw(std::mt19937_64& rng) { return 1.0 + static_cast<double>(rng() >> 11) * 0x1.0p-53; }

int compare_values(const Character& a, const Character& b, double tol) {
  for (Index j = 0; j < a.values.size(); ++j) {
    const Complex x = a.values[j];
    const Complex y = b.values[j];
    if (std::abs(x.real() - y.real()) > tol) return x.real() < y.real() ? -1 : 1;
    if (std::abs(x.imag() - y.imag()) > tol) return x.imag() < y.imag() ? -1 : 1;
  }
  return 0;
}

bool is_positive_real(const Character& mu, double tol) {
  return std::all_of(mu.values.begin(), mu.values.end(),
                     [tol](Complex z) { return z.real() > tol && std::abs(z.imag()) < tol; });
}

Eigen::MatrixXd random_combination(const FusionRing& ring, std::uint64_t seed) {
  const std::size_t r = ring.rank();
  std::mt19937_64 rng(seed);
  std::vector<double> c(r);
  for (auto& ci : c) ci = unit_draw(rng);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j)
      for (Index k = 0; k < r; ++k) {
        const Multiplicity n = ring(i, j, k);
        if (n != 0) m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) += c[i] * static_cast<double>(n);
      }
  return m;
}

// One attempt at reading all characters off a combination; empty on a
// collision or a multiplicativity failure.
std::vector<Character> characters_from_combination(const FusionRing& ring, const Eigen::MatrixXd& comb,
                                                   const Tolerance& tol) {
  const auto r = static_cast<Eigen::Index>(ring.rank());
  Eigen::EigenSolver<Eigen::MatrixXd> solver(comb, true);
  if (solver.info() != Eigen::Success) return {};
  const Eigen::VectorXcd lambda = solver.eigenvalues();
  const double scale = std::max(1.0, lambda.cwiseAbs().maxCoeff());
  for (Eigen::Index s = 0; s < r; ++s)
    for (Eigen::Index t = s + 1; t < r; ++t)
      if (std::abs(lambda(s) - lambda(t)) < 1e-7 * scale) return {};

  Eigen::MatrixXcd vecs = solver.eigenvectors();
  // One step of inverse iteration per eigenpair tightens the vectors to
  // near working precision.
  const Eigen::MatrixXcd combc = comb.cast<Complex>();
  for (Eigen::Index t = 0; t < r; ++t) {
    const Eigen::MatrixXcd shifted = combc - lambda(t) * Eigen::MatrixXcd::Identity(r, r);
    const Eigen::VectorXcd w = shifted.partialPivLu().solve(vecs.col(t));
    if (w.allFinite() && w.norm() > 0.0) vecs.col(t) = w / w.norm();
  }
  std::vector<Character> out;
  out.reserve(static_cast<std::size_t>(r));
  for (Eigen::Index t = 0; t < r; ++t) {
    const Complex pivot = vecs(0, t);
    if (std::abs(pivot) < 1e-10 * vecs.col(t).norm()) return {};
    Character mu;
    mu.values.resize(static_cast<std::size_t>(r));
    for (Eigen::Index j = 0; j < r; ++j) mu.values[static_cast<std::size_t>(j)] = snap(vecs(j, t) / pivot);
    mu.values[FusionRing::unit()] = 1.0;
    if (multiplicativity_residual(ring, mu) > tol.aggregate) return {};
    out.push_back(std::move(mu));
  }
  return out;
}

}  // namespace

Complex Character::operator()(const ClassVector& x) const {
  Complex sum{0.0, 0.0};
  for (Index j = 0; j < x.size(); ++j) sum += static_cast<double>(x[j]) * values[j];
  return sum;
}

Complex Character::operator()(std::span<const Complex> x) const {
  Complex sum{0.0, 0.0};
  for (Index j = 0; j < x.size(); ++j) sum += x[j] * values[j];
  return sum;
}

FPData fp_character(const FusionRing& ring, const SpectralOptions& options) {
  const std::size_t r = ring.rank();
  // m(j, k) = sum_i N(i, j, k); (m d)_j = (sum_i d_i) d_j at the FP vector.
  std::vector<double> m(r * r, 0.0);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j)
      for (Index k = 0; k < r; ++k) m[j * r + k] += static_cast<double>(ring(i, j, k));

  std::vector<double> d(r, 1.0);
  std::vector<double> next(r);
  for (int iter = 0; iter < options.power_max_iterations; ++iter) {
    for (Index j = 0; j < r; ++j) {
      double acc = 0.0;
      for (Index k = 0; k < r; ++k) acc += m[j * r + k] * d[k];
      next[j] = acc;
    }
    const double pivot = next[FusionRing::unit()];
    if (!(pivot > 0.0)) throw Error(ErrorCode::ConvergenceFailure, "power iteration lost positivity");
    double change = 0.0;
    for (Index j = 0; j < r; ++j) {
      next[j] /= pivot;
      change = std::max(change, std::abs(next[j] - d[j]) / std::abs(next[j]));
    }
    d.swap(next);
    if (change < options.power_tolerance) {
      FPData fp;
      fp.dims = d;
      fp.global = 0.0;
      for (double x : d) fp.global += x * x;
      return fp;
    }
  }
  throw Error(ErrorCode::ConvergenceFailure,
              "FP vector did not stabilize in " + std::to_string(options.power_max_iterations) + " iterations");
}

double fp_evaluate(const FPData& fp, const ClassVector& x) {
  double sum = 0.0;
  for (Index j = 0; j < x.size(); ++j) sum += static_cast<double>(x[j]) * fp.dims[j];
  return sum;
}

ComplexVector regular_element(const FusionRing& ring, const FPData& fp) {
  ComplexVector out(ring.rank());
  for (Index j = 0; j < ring.rank(); ++j) out[j] = fp.dims[j];
  return out;
}

bool is_commutative(const FusionRing& ring) {
  const std::size_t r = ring.rank();
  for (Index i = 0; i < r; ++i)
    for (Index j = i + 1; j < r; ++j)
      for (Index k = 0; k < r; ++k)
        if (ring(i, j, k) != ring(j, i, k)) return false;
  return true;
}

double multiplicativity_residual(const FusionRing& ring, const Character& mu) {
  const std::size_t r = ring.rank();
  double worst = 0.0;
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j) {
      Complex rhs{0.0, 0.0};
      for (Index k = 0; k < r; ++k) rhs += static_cast<double>(ring(i, j, k)) * mu.values[k];
      worst = std::max(worst, std::abs(mu.values[i] * mu.values[j] - rhs));
    }
  return worst;
}

Complex formal_codegree(const FusionRing& ring, const Character& mu) {
  Complex f{0.0, 0.0};
  for (Index j = 0; j < ring.rank(); ++j) f += mu.values[j] * mu.values[ring.dual(j)];
  return f;
}

CharacterTable character_table(const FusionRing& ring, const SpectralOptions& options) {
  if (!is_commutative(ring)) {
    throw Error(ErrorCode::NonCommutative, "ring '" + ring.name() + "' is not commutative");
  }
  const Tolerance& tol = options.tolerance;

  std::vector<Character> chars;
  for (int attempt = 0; attempt <= options.max_retries && chars.empty(); ++attempt) {
    const auto comb = random_combination(ring, options.seed + static_cast<std::uint64_t>(attempt));
    chars = characters_from_combination(ring, comb, tol);
  }
  if (chars.empty()) {
    throw Error(ErrorCode::DegenerateCombination,
                "no collision-free combination within " + std::to_string(options.max_retries) + " retries");
  }

  auto fp_it = std::find_if(chars.begin(), chars.end(), [&](const Character& c) { return is_positive_real(c, tol.equality); });
  if (fp_it == chars.end() ||
      std::count_if(chars.begin(), chars.end(), [&](const Character& c) { return is_positive_real(c, tol.equality); }) != 1) {
    throw Error(ErrorCode::InternalInconsistency, "could not single out the FP character");
  }
  std::iter_swap(chars.begin(), fp_it);
  for (auto& z : chars.front().values) z = {z.real(), 0.0};
  std::sort(chars.begin() + 1, chars.end(),
            [&](const Character& a, const Character& b) { return compare_values(a, b, tol.equality) < 0; });

  CharacterTable table;
  table.fp_index = 0;
  table.characters = std::move(chars);
  for (const auto& mu : table.characters) {
    const Complex f = formal_codegree(ring, mu);
    if (!(f.real() > 0.0) || std::abs(f.imag()) > tol.aggregate * std::max(1.0, f.real())) {
      throw Error(ErrorCode::InternalInconsistency, "formal codegree is not real positive");
    }
    table.codegrees.push_back(f.real());
  }
  return table;
}

IdempotentSet primitive_idempotents(const FusionRing& ring, const CharacterTable& table) {
  const auto r = static_cast<Eigen::Index>(ring.rank());
  if (static_cast<Eigen::Index>(table.size()) != r) {
    throw Error(ErrorCode::SingularCharacterMatrix, "character table is not square");
  }
  Eigen::MatrixXcd x(r, r);
  for (Eigen::Index t = 0; t < r; ++t)
    for (Eigen::Index k = 0; k < r; ++k) x(t, k) = table[static_cast<std::size_t>(t)][static_cast<Index>(k)];
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(x);
  lu.setThreshold(1e-10);
  if (!lu.isInvertible()) throw Error(ErrorCode::SingularCharacterMatrix, "character matrix is singular");
  const Eigen::MatrixXcd inv = lu.inverse();

  IdempotentSet out;
  for (Eigen::Index i = 0; i < r; ++i) {
    ComplexVector e(static_cast<std::size_t>(r));
    for (Eigen::Index k = 0; k < r; ++k) e[static_cast<std::size_t>(k)] = snap(inv(k, i));
    out.idempotents.push_back(std::move(e));
  }
  return out;
}

Multiplicity bilinear_m(const FusionRing& ring, const ClassVector& u, const ClassVector& v) {
  if (u.size() != ring.rank() || v.size() != ring.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "class vector length differs from ring rank");
  }
  Multiplicity sum = 0;
  for (Index j = 0; j < u.size(); ++j) {
    Multiplicity p = 0;
    if (__builtin_mul_overflow(u[j], v[j], &p) || __builtin_add_overflow(sum, p, &sum)) {
      throw Error(ErrorCode::Overflow, "bilinear form");
    }
  }
  return sum;
}

ClassVector adjoint_class(const FusionRing& ring) {
  const std::size_t r = ring.rank();
  ClassVector acc = ClassVector::zero(r);
  for (Index j = 0; j < r; ++j) {
    acc = acc + multiply(ring, ClassVector::basis(r, j), ClassVector::basis(r, ring.dual(j)));
  }
  return acc;
}

ComplexVector multiply(const FusionRing& ring, std::span<const Complex> u, std::span<const Complex> v) {
  const std::size_t r = ring.rank();
  if (u.size() != r || v.size() != r) throw Error(ErrorCode::DimensionMismatch, "vector length differs from ring rank");
  ComplexVector out(r, Complex{0.0, 0.0});
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j) {
      const Complex uv = u[i] * v[j];
      for (Index k = 0; k < r; ++k) {
        const Multiplicity n = ring(i, j, k);
        if (n != 0) out[k] += static_cast<double>(n) * uv;
      }
    }
  return out;
}

ComplexVector to_complex(const ClassVector& x) {
  ComplexVector out(x.size());
  for (Index j = 0; j < x.size(); ++j) out[j] = static_cast<double>(x[j]);
  return out;
}

}  // namespace fusion
