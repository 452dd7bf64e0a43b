#pragma once

// Whole-ring analysis: every invariant of every simple plus the theorem
// checks, rendered as text or JSON.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fusion/kernel.hpp"
#include "fusion/spectral.hpp"

namespace fusion {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first failure, empty on success
};

struct SimpleAnalysis {
  Index simple = 0;
  bool faithful = false;
  std::optional<KernelSet> kernel;  // commutative rings only
  std::optional<KernelSet> center;
  unsigned index = 1;
  unsigned order = 1;
  std::vector<std::vector<Index>> components;
};

struct AnalysisReport {
  FusionRing ring;
  bool commutative = false;
  FPData fp;
  std::optional<CharacterTable> table;
  std::vector<SimpleAnalysis> simples;
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

struct AnalysisOptions {
  SpectralOptions spectral{};
  bool verify = true;
};

AnalysisReport analyze(const FusionRing& ring, const AnalysisOptions& options = {});

/// The theorem checks alone (run by analyze unless verify is off).
std::vector<CheckResult> theorem_checks(const FusionRing& ring, const FPData& fp, const CharacterTable* table,
                                        const SpectralOptions& options);

namespace check {
inline constexpr const char* kBrauer = "brauer";
inline constexpr const char* kFaithfulIndecomposable = "faithful_iff_indecomposable";
inline constexpr const char* kResidueClasses = "power_residue_classes";
inline constexpr const char* kIndexDividesOrder = "index_divides_order";
inline constexpr const char* kCenterCardinality = "center_cardinality";
inline constexpr const char* kGradingProductRule = "grading_product_rule";
inline constexpr const char* kOrthogonality = "orthogonality";
inline constexpr const char* kCodegreeSum = "codegree_sum";
inline constexpr const char* kAdjointCodegree = "adjoint_codegree";
inline constexpr const char* kIdempotentKernel = "idempotent_kernel";
inline constexpr const char* kCenterKernel = "center_kernel";
inline constexpr const char* kAdjointIntersection = "adjoint_intersection";
}  // namespace check

nlohmann::json complex_to_json(Complex z);
nlohmann::json labels_json(const FusionRing& ring, const std::vector<Index>& simples);
nlohmann::json table_to_json(const FusionRing& ring, const CharacterTable& table);
nlohmann::json to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

/// Shortest round-trip decimal form of a double.
std::string format_number(double x);
std::string format_complex(Complex z);

}  // namespace fusion
