#pragma once

// Fusion rings given by structure constants: the based-ring axioms, the
// left-multiplication ("fusion") matrices and products of object classes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "fusion/error.hpp"

namespace fusion {

using Index = std::size_t;
using Multiplicity = std::int64_t;
using IntMatrix = Eigen::Matrix<Multiplicity, Eigen::Dynamic, Eigen::Dynamic>;

/// A fusion ring of rank r with basis of simples 0..r-1. Index 0 is always the
/// unit. N(i, j, k) is the multiplicity of simple k in (simple i)(simple j).
///
/// Construction only checks shapes (tensor size, dual is a permutation,
/// nonnegative entries); the ring axioms are checked by validate().
class FusionRing {
 public:
  FusionRing(std::string name, std::vector<std::string> labels, std::vector<Index> dual,
             std::vector<Multiplicity> structure);

  /// Same as the main constructor with the dual read off the structure
  /// constants (see dual_from_structure).
  static FusionRing from_structure(std::string name, std::vector<std::string> labels,
                                   std::vector<Multiplicity> structure);

  std::size_t rank() const noexcept { return labels_.size(); }
  static constexpr Index unit() noexcept { return 0; }

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Index i) const { return labels_.at(i); }
  std::optional<Index> index_of(std::string_view label) const;

  Index dual(Index i) const { return dual_.at(i); }
  std::span<const Index> duals() const noexcept { return dual_; }

  Multiplicity operator()(Index i, Index j, Index k) const noexcept {
    return structure_[(i * rank() + j) * rank() + k];
  }
  std::span<const Multiplicity> structure() const noexcept { return structure_; }

  FusionRing renamed(std::string name) const;

  /// Structural equality: labels, duals and structure constants. The name is
  /// metadata and not compared.
  bool operator==(const FusionRing& other) const {
    return labels_ == other.labels_ && dual_ == other.dual_ && structure_ == other.structure_;
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Index> dual_;
  std::vector<Multiplicity> structure_;
};

/// Integer (possibly virtual) combination of simples.
struct ClassVector {
  std::vector<Multiplicity> coefficients;

  ClassVector() = default;
  explicit ClassVector(std::vector<Multiplicity> c) : coefficients(std::move(c)) {}

  static ClassVector zero(std::size_t rank) { return ClassVector(std::vector<Multiplicity>(rank, 0)); }
  static ClassVector basis(std::size_t rank, Index i);

  std::size_t size() const noexcept { return coefficients.size(); }
  Multiplicity operator[](Index i) const { return coefficients[i]; }
  Multiplicity& operator[](Index i) { return coefficients[i]; }

  bool is_zero() const noexcept;
  bool is_nonnegative() const noexcept;
  std::vector<Index> support() const;

  bool operator==(const ClassVector&) const = default;
};

ClassVector operator+(const ClassVector& a, const ClassVector& b);

struct Violation {
  std::string axiom;
  std::vector<Index> witness;  // lexicographically first failing index tuple
  std::size_t occurrences = 0;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const noexcept { return violations.empty(); }
  bool violates(std::string_view axiom) const;
  const Violation* find(std::string_view axiom) const;
};

/// Thrown by loaders when a ring fails validate().
class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

namespace axiom {
inline constexpr std::string_view kInvolution = "involution";
inline constexpr std::string_view kUnit = "unit";
inline constexpr std::string_view kDuality = "duality";
inline constexpr std::string_view kFrobeniusReciprocity = "frobenius_reciprocity";
inline constexpr std::string_view kAssociativity = "associativity";
}  // namespace axiom

/// Checks every based-ring axiom and reports each violated one with the
/// first witness found in lexicographic order.
ValidationReport validate(const FusionRing& ring);

/// Reads the duality involution off N(i, j, unit). `structure` is r*r*r.
std::vector<Index> dual_from_structure(std::span<const Multiplicity> structure, std::size_t rank,
                                       Index unit = 0);

/// A with A(k, j) = N(i, j, k): column j is the decomposition of (i)(j), so
/// A * v is left multiplication of v by simple i.
IntMatrix fusion_matrix(const FusionRing& ring, Index i);

/// Product of classes; throws Overflow instead of wrapping.
ClassVector multiply(const FusionRing& ring, const ClassVector& u, const ClassVector& v);

/// [X_i]^n, with n = 0 giving the unit.
ClassVector tensor_power_class(const FusionRing& ring, Index i, unsigned n);

/// Constituent sets of tensor powers. Coefficients of [X]^n grow like
/// FPdim(X)^n, so long power sequences are tracked by support only.
using Support = std::vector<bool>;
Support unit_support(std::size_t rank);
Support multiply_support(const FusionRing& ring, Index i, const Support& s);
Support power_support(const FusionRing& ring, Index i, unsigned n);

}  // namespace fusion
