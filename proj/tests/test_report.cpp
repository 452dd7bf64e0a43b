#include "doctest.h"
#include "fusion/catalog.hpp"
#include "fusion/report.hpp"
#include "oracles.hpp"

using namespace fusion;

TEST_CASE("analysis of Ising") {
  const AnalysisReport report = analyze(ising_ring());
  CHECK(report.commutative);
  CHECK(report.all_passed());
  REQUIRE(report.table.has_value());
  REQUIRE(report.simples.size() == 3);
  const SimpleAnalysis& sigma = report.simples[2];
  CHECK(sigma.faithful);
  CHECK(sigma.index == 2);
  CHECK(sigma.order == 2);
  REQUIRE(sigma.kernel.has_value());
  CHECK(sigma.kernel->trivial());
  CHECK(report.simples[1].kernel->size() == 2);
  CHECK_FALSE(report.simples[1].faithful);
}

TEST_CASE("every built-in passes its checks") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const AnalysisReport report = analyze(builtin(name).ring);
    for (const auto& c : report.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.passed);
    }
    CHECK(report.commutative == report.table.has_value());
  }
}

TEST_CASE("noncommutative rings skip the character checks") {
  const AnalysisReport report = analyze(group_ring_s3());
  CHECK_FALSE(report.commutative);
  CHECK_FALSE(report.table.has_value());
  for (const auto& c : report.checks) CHECK(c.name != std::string(check::kBrauer));
  CHECK(report.all_passed());
}

TEST_CASE("JSON output is deterministic and consistent with text") {
  for (const char* name : {"ising", "rep_q8", "vec_s3", "su2_6"}) {
    CAPTURE(name);
    const FusionRing ring = builtin(name).ring;
    const std::string a = to_json(analyze(ring)).dump(2), b = to_json(analyze(ring)).dump(2);
    CHECK(a == b);
    const auto doc = nlohmann::json::parse(a);
    CHECK(doc["ring"]["name"] == name);
    CHECK(doc["ring"]["rank"] == ring.rank());
    CHECK(doc["simples"].size() == ring.rank());
    CHECK(doc["all_passed"] == true);
    const std::string text = to_text(analyze(ring));
    CHECK(text.find(ring.label(ring.rank() - 1)) != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
  }
}

TEST_CASE("turning verification off drops the checks") {
  AnalysisOptions options;
  options.verify = false;
  CHECK(analyze(ising_ring(), options).checks.empty());
}

TEST_CASE("number formatting") {
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(std::sqrt(2.0)) == "1.4142135623730951");
  CHECK(format_complex({1.0, 0.0}) == "1");
  CHECK(std::stod(format_number(1.0 / 3)) == 1.0 / 3);
}
