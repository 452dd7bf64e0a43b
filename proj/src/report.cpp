#include "fusion/report.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "fusion/grading.hpp"

namespace fusion {
namespace {

using nlohmann::json;

// Runs `body` and turns a library error into a failed check.
CheckResult run_check(const char* name, const std::function<std::string()>& body) {
  CheckResult result{name, true, {}};
  try {
    result.detail = body();
  } catch (const Error& e) {
    result.detail = e.what();
  }
  result.passed = result.detail.empty();
  return result;
}

std::string kernel_string(const KernelSet& k) {
  std::string out;
  for (auto t : k.character_indices) out += (out.empty() ? "" : ",") + std::to_string(t);
  return "{" + out + "}";
}

std::string residue_failure(const FusionRing& ring, Index i, unsigned ind) {
  const std::size_t r = ring.rank();
  const unsigned cap = 3 * static_cast<unsigned>(r) * ind;
  std::vector<int> residue(r, -1);
  Support s = unit_support(r);
  for (unsigned n = 0; n <= cap; ++n) {
    if (n > 0) s = multiply_support(ring, i, s);
    for (Index j = 0; j < r; ++j) {
      if (!s[j]) continue;
      const int res = static_cast<int>(n % ind);
      if (residue[j] < 0) residue[j] = res;
      if (residue[j] != res) {
        return ring.label(j) + " occurs in " + ring.label(i) + "^n for n in two residue classes mod " + std::to_string(ind);
      }
    }
  }
  return {};
}

std::string product_rule_failure(const FusionRing& ring, const GradingData& g) {
  for (const auto& [u, gu] : g.grades)
    for (const auto& [v, gv] : g.grades)
      for (Index k = 0; k < ring.rank(); ++k) {
        if (ring(u, v, k) == 0) continue;
        auto it = g.grades.find(k);
        if (it == g.grades.end() || it->second != (gu + gv) % g.index) {
          return ring.label(u) + " x " + ring.label(v) + " has constituent " + ring.label(k) + " outside grade " +
                 std::to_string((gu + gv) % g.index);
        }
      }
  return {};
}

std::string center_cardinality_failure(const FusionRing& ring, Index i, unsigned ind, const SpectralOptions& options) {
  const Subcategory d = generated_subcategory(ring, {i});
  const FusionRing sub = restrict(ring, d);
  if (!is_commutative(sub)) return {};
  const auto pos = static_cast<Index>(std::lower_bound(d.members.begin(), d.members.end(), i) - d.members.begin());
  const FPData fp = fp_character(sub, options);
  const CharacterTable table = character_table(sub, options);
  const KernelSet z = center_of_class(sub, fp, table, ClassVector::basis(sub.rank(), pos), options.tolerance);
  if (z.size() != ind) {
    return "center of " + ring.label(i) + " in C(X) has " + std::to_string(z.size()) + " characters, index is " +
           std::to_string(ind);
  }
  std::vector<bool> seen(ind, false);
  for (auto t : z.character_indices) {
    for (unsigned a = 0; a < ind; ++a) {
      const Complex expect = std::polar(fp[pos], 2.0 * std::numbers::pi * a / ind);
      if (std::abs(table[t][pos] - expect) < options.tolerance.equality) seen[a] = true;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    return "center values on " + ring.label(i) + " are not all ind-th roots of unity times FPdim";
  }
  return {};
}

void append_number(std::string& out, double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  out.append(buf, res.ptr);
}

}  // namespace

bool AnalysisReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<CheckResult> theorem_checks(const FusionRing& ring, const FPData& fp, const CharacterTable* table,
                                        const SpectralOptions& options) {
  const std::size_t r = ring.rank();
  const Tolerance& tol = options.tolerance;
  std::vector<CheckResult> out;

  out.push_back(run_check(check::kFaithfulIndecomposable, [&]() -> std::string {
    for (Index i = 0; i < r; ++i)
      if (is_faithful(ring, i) != is_indecomposable_matrix(fusion_matrix(ring, i)))
        return "faithfulness and indecomposability disagree on " + ring.label(i);
    return {};
  }));
  out.push_back(run_check(check::kResidueClasses, [&]() -> std::string {
    for (Index i = 0; i < r; ++i)
      if (auto f = residue_failure(ring, i, object_index(ring, i)); !f.empty()) return f;
    return {};
  }));
  out.push_back(run_check(check::kIndexDividesOrder, [&]() -> std::string {
    for (Index i = 0; i < r; ++i) {
      const unsigned ind = object_index(ring, i);
      const unsigned ord = object_order(ring, i);
      if (ord % ind != 0) return "ind(" + ring.label(i) + ") = " + std::to_string(ind) + " does not divide o = " + std::to_string(ord);
    }
    return {};
  }));
  out.push_back(run_check(check::kGradingProductRule, [&]() -> std::string {
    for (Index i = 0; i < r; ++i)
      if (auto f = product_rule_failure(ring, universal_grading(ring, i, fp, table, options)); !f.empty()) return f;
    return {};
  }));
  out.push_back(run_check(check::kCenterCardinality, [&]() -> std::string {
    for (Index i = 0; i < r; ++i)
      if (auto f = center_cardinality_failure(ring, i, object_index(ring, i), options); !f.empty()) return f;
    return {};
  }));
  if (table == nullptr) return out;

  out.push_back(run_check(check::kBrauer, [&]() -> std::string {
    for (Index i = 0; i < r; ++i) verify_brauer(ring, fp, *table, i, std::nullopt, tol);
    return {};
  }));
  out.push_back(run_check(check::kIdempotentKernel, [&]() -> std::string {
    for (Index i = 0; i < r; ++i) {
      const auto a = kernel_via_subring_idempotents(ring, fp, *table, i, options);
      const auto b = kernel_of_class(ring, fp, *table, ClassVector::basis(r, i), tol);
      if (!(a == b)) return "kernel of " + ring.label(i) + ": idempotent " + kernel_string(a) + " vs " + kernel_string(b);
    }
    return {};
  }));
  out.push_back(run_check(check::kCenterKernel, [&]() -> std::string {
    for (Index i = 0; i < r; ++i) {
      const ClassVector xx = multiply(ring, ClassVector::basis(r, i), ClassVector::basis(r, ring.dual(i)));
      const auto a = kernel_of_class(ring, fp, *table, xx, tol);
      const auto b = center_of_class(ring, fp, *table, ClassVector::basis(r, i), tol);
      if (!(a == b)) return "ker(X X*) " + kernel_string(a) + " vs center " + kernel_string(b) + " for " + ring.label(i);
    }
    return {};
  }));
  out.push_back(run_check(check::kAdjointIntersection, [&]() -> std::string {
    const auto adj = kernel_of_class(ring, fp, *table, adjoint_class(ring), tol);
    KernelSet meet = center_of_class(ring, fp, *table, ClassVector::basis(r, 0), tol);
    for (Index i = 1; i < r; ++i) meet = intersect(meet, center_of_class(ring, fp, *table, ClassVector::basis(r, i), tol));
    if (!(adj == meet)) return "ker(C_ad) " + kernel_string(adj) + " vs intersection of centers " + kernel_string(meet);
    return {};
  }));
  out.push_back(run_check(check::kOrthogonality, [&]() -> std::string {
    double worst = 0.0;
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < r; ++j) {
        Complex sum{0.0, 0.0};
        for (std::size_t t = 0; t < table->size(); ++t)
          sum += (*table)[t][i] * std::conj((*table)[t][j]) / table->codegrees[t];
        worst = std::max(worst, std::abs(sum - (i == j ? 1.0 : 0.0)));
      }
    if (worst >= tol.aggregate) return "orthogonality residual " + format_number(worst);
    return {};
  }));
  out.push_back(run_check(check::kCodegreeSum, [&]() -> std::string {
    double sum = 0.0;
    for (double f : table->codegrees) sum += 1.0 / f;
    if (std::abs(sum - 1.0) >= tol.aggregate) return "sum of 1/f is " + format_number(sum);
    return {};
  }));
  out.push_back(run_check(check::kAdjointCodegree, [&]() -> std::string {
    const ClassVector adj = adjoint_class(ring);
    for (std::size_t t = 0; t < table->size(); ++t)
      if (std::abs((*table)[t](adj) - table->codegrees[t]) >= tol.aggregate)
        return "mu_" + std::to_string(t) + "(C_ad) differs from its codegree";
    return {};
  }));
  return out;
}

AnalysisReport analyze(const FusionRing& ring, const AnalysisOptions& options) {
  const std::size_t r = ring.rank();
  const Tolerance& tol = options.spectral.tolerance;
  AnalysisReport report{ring, is_commutative(ring), fp_character(ring, options.spectral), std::nullopt, {}, {}};
  if (report.commutative) report.table = character_table(ring, options.spectral);
  const CharacterTable* table = report.table ? &*report.table : nullptr;

  for (Index i = 0; i < r; ++i) {
    SimpleAnalysis s;
    s.simple = i;
    s.faithful = is_faithful(ring, i);
    if (table != nullptr) {
      s.kernel = kernel_of_class(ring, report.fp, *table, ClassVector::basis(r, i), tol);
      s.center = center_of_class(ring, report.fp, *table, ClassVector::basis(r, i), tol);
    }
    s.index = object_index(ring, i);
    s.order = object_order(ring, i);
    std::vector<std::vector<Index>> components(s.index);
    for (const auto& [j, g] : grades_by_exponent(ring, i, s.index)) components[g].push_back(j);
    s.components = std::move(components);
    report.simples.push_back(std::move(s));
  }
  if (options.verify) report.checks = theorem_checks(ring, report.fp, table, options.spectral);
  return report;
}

std::string format_number(double x) {
  std::string out;
  append_number(out, x);
  return out;
}

std::string format_complex(Complex z) {
  std::string out;
  append_number(out, z.real());
  if (z.imag() != 0.0) {
    out += z.imag() < 0 ? "-" : "+";
    append_number(out, std::abs(z.imag()));
    out += "i";
  }
  return out;
}

json complex_to_json(Complex z) { return json::array({z.real() == 0.0 ? 0.0 : z.real(), z.imag() == 0.0 ? 0.0 : z.imag()}); }

json labels_json(const FusionRing& ring, const std::vector<Index>& simples) {
  json out = json::array();
  for (Index j : simples) out.push_back(ring.label(j));
  return out;
}

json table_to_json(const FusionRing& ring, const CharacterTable& table) {
  json chars = json::array();
  for (std::size_t t = 0; t < table.size(); ++t) {
    json values = json::array();
    for (Index j = 0; j < ring.rank(); ++j) values.push_back(complex_to_json(table[t][j]));
    chars.push_back(json{{"index", t}, {"values", std::move(values)}, {"codegree", table.codegrees[t]}});
  }
  return json{{"fp_index", table.fp_index}, {"labels", ring.labels()}, {"characters", std::move(chars)}};
}

json to_json(const AnalysisReport& report) {
  const FusionRing& ring = report.ring;
  json fp = json::array();
  for (Index j = 0; j < ring.rank(); ++j) fp.push_back(json{{"label", ring.label(j)}, {"fpdim", report.fp[j]}});

  json simples = json::array();
  for (const auto& s : report.simples) {
    json comps = json::array();
    for (const auto& c : s.components) comps.push_back(labels_json(ring, c));
    json entry{{"label", ring.label(s.simple)}, {"faithful", s.faithful}, {"index", s.index}, {"order", s.order},
               {"grading", std::move(comps)}};
    entry["kernel"] = s.kernel ? json(s.kernel->character_indices) : json(nullptr);
    entry["center"] = s.center ? json(s.center->character_indices) : json(nullptr);
    simples.push_back(std::move(entry));
  }

  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});

  return json{{"ring",
               {{"name", ring.name()},
                {"rank", ring.rank()},
                {"commutative", report.commutative},
                {"fp_dims", std::move(fp)},
                {"global_dim", report.fp.global}}},
              {"simples", std::move(simples)},
              {"character_table", report.table ? table_to_json(ring, *report.table) : json(nullptr)},
              {"checks", std::move(checks)},
              {"all_passed", report.all_passed()}};
}

std::string to_text(const AnalysisReport& report) {
  const FusionRing& ring = report.ring;
  std::ostringstream out;
  out << "ring " << ring.name() << ": rank " << ring.rank() << ", "
      << (report.commutative ? "commutative" : "noncommutative") << ", FPdim(C) = " << format_number(report.fp.global)
      << "\n";
  out << "FP dimensions:";
  for (Index j = 0; j < ring.rank(); ++j) out << " " << ring.label(j) << "=" << format_number(report.fp[j]);
  out << "\n";

  if (report.table) {
    out << "characters (codegree: values on " ;
    for (Index j = 0; j < ring.rank(); ++j) out << (j ? "," : "") << ring.label(j);
    out << "):\n";
    for (std::size_t t = 0; t < report.table->size(); ++t) {
      out << "  chi" << t << " f=" << format_number(report.table->codegrees[t]) << ":";
      for (Index j = 0; j < ring.rank(); ++j) out << " " << format_complex((*report.table)[t][j]);
      out << "\n";
    }
  } else {
    out << "characters: skipped (noncommutative Grothendieck ring)\n";
  }

  out << "simples:\n";
  for (const auto& s : report.simples) {
    out << "  " << ring.label(s.simple) << ": " << (s.faithful ? "faithful" : "not faithful") << ", ind=" << s.index
        << ", o=" << s.order;
    if (s.kernel) out << ", kernel=" << kernel_string(*s.kernel) << ", center=" << kernel_string(*s.center);
    out << ", grading=";
    for (std::size_t a = 0; a < s.components.size(); ++a) {
      out << (a ? " " : "") << "D" << a << "={";
      for (std::size_t b = 0; b < s.components[a].size(); ++b) out << (b ? "," : "") << ring.label(s.components[a][b]);
      out << "}";
    }
    out << "\n";
  }

  if (!report.checks.empty()) {
    out << "checks:\n";
    for (const auto& c : report.checks) {
      out << "  " << (c.passed ? "PASS" : "FAIL") << " " << c.name;
      if (!c.passed) out << ": " << c.detail;
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace fusion
