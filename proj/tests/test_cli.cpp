#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs fusionctl with `args`; stderr is discarded unless `merge` is set.
Run fusionctl(const std::string& args, bool merge = false) {
  const std::string cmd = std::string("\"") + FUSIONCTL_PATH + "\" " + args + (merge ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run run;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) run.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  run.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return run;
}

const std::string kData = FUSION_TEST_DATA;

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("validate") {
  const Run ok = fusionctl("validate --ring trivial");
  CHECK(ok.status == 0);
  CHECK(contains(ok.out, "valid"));
  const Run bad = fusionctl("validate --ring " + kData + "/ising_nonassociative.json");
  CHECK(bad.status == 1);
  CHECK(contains(bad.out, "associativity"));
  CHECK(contains(bad.out, "(psi, sigma, sigma, 1)"));
}

TEST_CASE("analyze ising") {
  const Run run = fusionctl("analyze --ring ising --format json");
  REQUIRE(run.status == 0);
  const auto doc = nlohmann::json::parse(run.out);
  CHECK(doc["all_passed"] == true);
  const auto& sigma = doc["simples"][2];
  CHECK(sigma["label"] == "sigma");
  CHECK(sigma["faithful"] == true);
  CHECK(sigma["index"] == 2);
  CHECK(sigma["order"] == 2);
  CHECK(sigma["grading"] == nlohmann::json::parse(R"([["1", "psi"], ["sigma"]])"));
  std::vector<double> f;
  for (const auto& c : doc["character_table"]["characters"]) f.push_back(c["codegree"].get<double>());
  std::sort(f.begin(), f.end());
  CHECK(f[0] == doctest::Approx(2));
  CHECK(f[1] == doctest::Approx(4));
  CHECK(f[2] == doctest::Approx(4));

  const Run text = fusionctl("analyze --ring ising");
  CHECK(text.status == 0);
  CHECK(contains(text.out, "sigma: faithful, ind=2, o=2"));
  CHECK(contains(text.out, "D0={1,psi} D1={sigma}"));
}

TEST_CASE("text and JSON verdicts agree") {
  for (const char* ring : {"ising", "rep_q8", "su2_5", "vec_s3"}) {
    CAPTURE(ring);
    const auto doc = nlohmann::json::parse(fusionctl(std::string("analyze --format json --ring ") + ring).out);
    const std::string text = fusionctl(std::string("analyze --ring ") + ring).out;
    for (const auto& c : doc["checks"]) {
      const std::string line = std::string(c["passed"].get<bool>() ? "PASS " : "FAIL ") + c["name"].get<std::string>();
      CHECK(contains(text, line));
    }
  }
}

TEST_CASE("JSON is byte-identical across runs and round-trips numbers") {
  const Run a = fusionctl("analyze --ring su2_6 --format json --seed 11");
  const Run b = fusionctl("analyze --ring su2_6 --format json --seed 11");
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(nlohmann::json::parse(doc.dump(2)) == doc);
  const double half = doc["ring"]["fp_dims"][1]["fpdim"].get<double>();
  CHECK(half == doctest::Approx(2 * std::cos(std::acos(-1.0) / 8)).epsilon(1e-12));
}

TEST_CASE("characters on a noncommutative ring") {
  const Run run = fusionctl("characters --ring vec_s3", true);
  CHECK(run.status == 1);
  CHECK(contains(run.out, "NonCommutative"));
}

TEST_CASE("object commands") {
  const Run k = fusionctl("kernel --ring rep_s3 --object sgn --format json");
  REQUIRE(k.status == 0);
  CHECK(nlohmann::json::parse(k.out)["kernel"].size() == 2);

  const Run g = fusionctl("grading --ring rep_q8 --object V --format json");
  REQUIRE(g.status == 0);
  const auto gd = nlohmann::json::parse(g.out);
  CHECK(gd["index"] == 2);
  CHECK(gd["components"][1] == nlohmann::json::parse(R"(["V"])"));

  const Run b = fusionctl("brauer --ring rep_s3 --object V --format json");
  REQUIRE(b.status == 0);
  CHECK(nlohmann::json::parse(b.out)["exponents"].size() == 3);

  const Run capped = fusionctl("brauer --ring pointed_z12 --object g --cap 4");
  CHECK(capped.status == 1);
  CHECK(contains(capped.out, "never occurs"));

  CHECK(fusionctl("kernel --ring ising --object nope").status == 2);
  CHECK(fusionctl("kernel --ring ising").status == 2);
}

TEST_CASE("modular") {
  const Run builtin = fusionctl("modular --ring ising --format json");
  REQUIRE(builtin.status == 0);
  const auto doc = nlohmann::json::parse(builtin.out);
  CHECK(doc["invertibles"] == nlohmann::json::parse(R"(["1", "psi"])"));
  CHECK(doc["simples"][2]["centralizer"] == nlohmann::json::parse(R"(["1"])"));

  CHECK(fusionctl("modular --ring ising --smatrix " + kData + "/ising_smatrix.json").status == 0);
  CHECK(fusionctl("modular --ring " + kData + "/z4_ring.json --smatrix " + kData + "/klein_smatrix.json").status == 1);
  CHECK(fusionctl("modular --ring rep_s3").status == 2);
}

TEST_CASE("batches keep input order") {
  const Run run = fusionctl("validate --ring ising --ring fibonacci --ring su2_3 --format json");
  REQUIRE(run.status == 0);
  const auto doc = nlohmann::json::parse(run.out);
  REQUIRE(doc.size() == 3);
  CHECK(doc[0]["ring"] == "ising");
  CHECK(doc[1]["ring"] == "fibonacci");
  CHECK(doc[2]["ring"] == "su2_3");
  CHECK(fusionctl("validate --ring ising --ring " + kData + "/ising_nonassociative.json").status == 1);
}

TEST_CASE("usage errors") {
  CHECK(fusionctl("").status == 2);
  CHECK(fusionctl("frobnicate").status == 2);
  CHECK(fusionctl("analyze").status == 2);
  CHECK(fusionctl("analyze --ring no_such_ring").status == 2);
  CHECK(fusionctl("analyze --ring ising --format xml").status == 2);
  CHECK(fusionctl("--help").status == 0);
  const Run list = fusionctl("list-builtins");
  CHECK(list.status == 0);
  CHECK(contains(list.out, "tambara_yamagami_z12\n"));
}
