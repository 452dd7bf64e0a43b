// fusionctl: invariants of fusion rings from the command line.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fusion/catalog.hpp"
#include "fusion/grading.hpp"
#include "fusion/kernel.hpp"
#include "fusion/modular.hpp"
#include "fusion/report.hpp"

namespace {

using nlohmann::json;
using namespace fusion;

enum Status { kOk = 0, kFailed = 1, kUsage = 2 };

struct Settings {
  std::string command;
  std::string format = "text";
  SpectralOptions spectral;
  bool verify = true;
  std::string object;
  std::optional<unsigned> cap;
  std::string smatrix;
};

// Outcome of one command on one ring.
struct Result {
  int status = kOk;
  std::string text;
  json doc;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string set_string(const FusionRing& ring, const std::vector<Index>& simples) {
  std::string out;
  for (Index j : simples) out += (out.empty() ? "" : ",") + ring.label(j);
  return "{" + out + "}";
}

std::string index_string(const std::vector<std::size_t>& ts) {
  std::string out;
  for (auto t : ts) out += (out.empty() ? "" : ",") + std::to_string(t);
  return "{" + out + "}";
}

Index object_of(const FusionRing& ring, const std::string& label) {
  if (label.empty()) throw UsageError("--object is required");
  auto i = ring.index_of(label);
  if (!i) throw UsageError("ring " + ring.name() + " has no simple labelled '" + label + "'");
  return *i;
}

Result validate_result(const FusionRing& ring) {
  const ValidationReport report = validate(ring);
  Result res;
  res.status = report.valid() ? kOk : kFailed;
  std::ostringstream out;
  out << "ring " << ring.name() << ": " << (report.valid() ? "valid" : "invalid") << "\n";
  json violations = json::array();
  for (const auto& v : report.violations) {
    out << "  " << v.axiom << ": " << v.occurrences << " failure(s), first at (";
    json witness = json::array();
    for (std::size_t a = 0; a < v.witness.size(); ++a) {
      out << (a ? ", " : "") << ring.label(v.witness[a]);
      witness.push_back(ring.label(v.witness[a]));
    }
    out << ")\n";
    violations.push_back(json{{"axiom", v.axiom}, {"witness", std::move(witness)}, {"occurrences", v.occurrences}});
  }
  res.text = out.str();
  res.doc = json{{"ring", ring.name()}, {"valid", report.valid()}, {"violations", std::move(violations)}};
  return res;
}

Result characters_result(const FusionRing& ring, const Settings& s) {
  Result res;
  const CharacterTable table = character_table(ring, s.spectral);
  std::ostringstream out;
  out << "ring " << ring.name() << ": " << table.size() << " characters (values on";
  for (Index j = 0; j < ring.rank(); ++j) out << " " << ring.label(j);
  out << ")\n";
  for (std::size_t t = 0; t < table.size(); ++t) {
    out << "  chi" << t << (t == table.fp_index ? " (FPdim)" : "") << " f=" << format_number(table.codegrees[t]) << ":";
    for (Index j = 0; j < ring.rank(); ++j) out << " " << format_complex(table[t][j]);
    out << "\n";
  }
  res.text = out.str();
  res.doc = table_to_json(ring, table);
  res.doc["ring"] = ring.name();
  return res;
}

Result kernel_result(const FusionRing& ring, const Settings& s) {
  const Index x = object_of(ring, s.object);
  const FPData fp = fp_character(ring, s.spectral);
  const CharacterTable table = character_table(ring, s.spectral);
  const ClassVector e = ClassVector::basis(ring.rank(), x);
  const KernelSet k = kernel_of_class(ring, fp, table, e, s.spectral.tolerance);
  const KernelSet z = center_of_class(ring, fp, table, e, s.spectral.tolerance);

  Result res;
  std::ostringstream out;
  out << "ring " << ring.name() << ", object " << ring.label(x) << "\n";
  out << "  kernel: " << index_string(k.character_indices) << (k.trivial() ? " (trivial)" : "") << "\n";
  out << "  center: " << index_string(z.character_indices) << "\n";
  out << "  values on " << ring.label(x) << ":";
  for (std::size_t t = 0; t < table.size(); ++t) out << " chi" << t << "=" << format_complex(table[t][x]);
  out << "\n";
  res.text = out.str();
  json values = json::array();
  for (std::size_t t = 0; t < table.size(); ++t) values.push_back(complex_to_json(table[t][x]));
  res.doc = json{{"ring", ring.name()},          {"object", ring.label(x)},
                 {"kernel", k.character_indices}, {"center", z.character_indices},
                 {"trivial_kernel", k.trivial()}, {"values", std::move(values)}};
  return res;
}

Result grading_result(const FusionRing& ring, const Settings& s) {
  const Index x = object_of(ring, s.object);
  const FPData fp = fp_character(ring, s.spectral);
  std::optional<CharacterTable> table;
  if (is_commutative(ring)) table = character_table(ring, s.spectral);
  const GradingData g = universal_grading(ring, x, fp, table ? &*table : nullptr, s.spectral);

  Result res;
  std::ostringstream out;
  out << "ring " << ring.name() << ", object " << ring.label(x) << "\n";
  out << "  ind=" << g.index << ", o=" << g.order << "\n";
  json components = json::array();
  for (std::size_t a = 0; a < g.components.size(); ++a) {
    out << "  D" << a << " = " << set_string(ring, g.components[a]) << "\n";
    components.push_back(labels_json(ring, g.components[a]));
  }
  if (g.character_check_skipped) out << "  character cross-check skipped (C(X) noncommutative)\n";
  res.text = out.str();
  res.doc = json{{"ring", ring.name()},
                 {"object", ring.label(x)},
                 {"index", g.index},
                 {"order", g.order},
                 {"components", std::move(components)},
                 {"character_check_skipped", g.character_check_skipped}};
  return res;
}

Result brauer_output(const FusionRing& ring, const BrauerReport& b, int status, const std::string& error) {
  Result res;
  res.status = status;
  std::ostringstream out;
  out << "ring " << ring.name() << ", object " << ring.label(b.object) << "\n";
  out << "  trivial kernel: " << (b.faithful_expected ? "yes" : "no") << ", faithful: " << (b.faithful ? "yes" : "no")
      << ", powers searched: 0.." << b.cap_used << "\n";
  json exponents = json::object();
  out << "  first occurrence:";
  for (const auto& [j, n] : b.exponents) {
    out << " " << ring.label(j) << "@" << n;
    exponents[ring.label(j)] = n;
  }
  out << "\n";
  json missing = json::array();
  for (Index j = 0; j < ring.rank(); ++j)
    if (!b.exponents.contains(j)) missing.push_back(ring.label(j));
  if (!missing.empty()) {
    out << "  never occurs:";
    for (const auto& label : missing) out << " " << label.get<std::string>();
    out << "\n";
  }
  if (!error.empty()) out << "  error: " << error << "\n";
  res.text = out.str();
  res.doc = json{{"ring", ring.name()},
                 {"object", ring.label(b.object)},
                 {"faithful_expected", b.faithful_expected},
                 {"faithful", b.faithful},
                 {"cap_used", b.cap_used},
                 {"exponents", std::move(exponents)},
                 {"missing", std::move(missing)}};
  if (!error.empty()) res.doc["error"] = error;
  return res;
}

Result brauer_result(const FusionRing& ring, const Settings& s) {
  const Index x = object_of(ring, s.object);
  const FPData fp = fp_character(ring, s.spectral);
  const CharacterTable table = character_table(ring, s.spectral);
  try {
    return brauer_output(ring, verify_brauer(ring, fp, table, x, s.cap, s.spectral.tolerance), kOk, {});
  } catch (const BrauerCapExceeded& e) {
    return brauer_output(ring, e.report(), kFailed, e.what());
  }
}

Result modular_result(const FusionRing& ring, const Settings& s) {
  std::optional<ModularData> md;
  if (!s.smatrix.empty()) {
    md = load_smatrix(s.smatrix, ring, s.spectral);
  } else {
    std::optional<CatalogEntry> entry;
    try {
      entry = builtin(ring.name());
    } catch (const Error&) {
    }
    if (!entry || !entry->smatrix || !(entry->ring == ring)) {
      throw UsageError("no built-in S-matrix for " + ring.name() + "; pass --smatrix");
    }
    md = std::move(entry->smatrix);
    check_verlinde_round_trip(*md);
  }
  const Tolerance& tol = s.spectral.tolerance;
  const std::vector<Index> inv = invertibles(ring, md->fp(), tol);

  Result res;
  std::ostringstream out;
  out << "ring " << ring.name() << ": FPdim(C) = " << format_number(md->global_dim()) << ", Verlinde round trip ok\n";
  json simples = json::array();
  for (Index i = 0; i < ring.rank(); ++i) {
    const Subcategory c = centralizer(*md, i, tol);
    const std::vector<Index> pc = projective_centralizer(*md, i, tol);
    out << "  " << ring.label(i) << ": centralizer " << set_string(ring, c.members) << ", projective centralizer "
        << set_string(ring, pc) << "\n";
    simples.push_back(
        json{{"label", ring.label(i)}, {"centralizer", labels_json(ring, c.members)}, {"projective_centralizer", labels_json(ring, pc)}});
  }
  out << "  invertibles: " << set_string(ring, inv) << "\n";
  res.text = out.str();
  res.doc = json{{"ring", ring.name()},
                 {"global_dim", md->global_dim()},
                 {"verlinde_round_trip", true},
                 {"simples", std::move(simples)},
                 {"invertibles", labels_json(ring, inv)}};
  return res;
}

Result run_one(const std::string& source, const Settings& s) {
  FusionRing ring = [&] {
    try {
      return resolve_ring(source, s.command != "validate");
    } catch (const ValidationError&) {
      throw;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::UnknownName || e.code() == ErrorCode::IoError || e.code() == ErrorCode::ParseError) {
        throw UsageError(e.what());
      }
      throw;
    }
  }();
  if (s.command == "validate") return validate_result(ring);
  if (s.command == "analyze") {
    AnalysisOptions options{s.spectral, s.verify};
    const AnalysisReport report = analyze(ring, options);
    return {report.all_passed() ? kOk : kFailed, to_text(report), to_json(report)};
  }
  if (s.command == "characters") return characters_result(ring, s);
  if (s.command == "kernel") return kernel_result(ring, s);
  if (s.command == "grading") return grading_result(ring, s);
  if (s.command == "brauer") return brauer_result(ring, s);
  if (s.command == "modular") return modular_result(ring, s);
  throw UsageError("unknown command " + s.command);
}

Result run_guarded(const std::string& source, const Settings& s) {
  try {
    return run_one(source, s);
  } catch (const UsageError& e) {
    return {kUsage, std::string("error: ") + e.what() + "\n", json{{"source", source}, {"error", e.what()}}};
  } catch (const Error& e) {
    std::string notice = e.what();
    if (e.code() == ErrorCode::NonCommutative) notice = source + " is not commutative: " + notice;
    return {kFailed, "error: " + notice + "\n", json{{"source", source}, {"error", notice}, {"code", to_string(e.code())}}};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of fusion rings: FP dimensions, characters, kernels, gradings, S-matrices."};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  std::vector<std::string> rings;
  double epsilon = s.spectral.tolerance.equality;
  std::uint64_t seed = s.spectral.seed;
  bool no_verify = false;
  app.add_option("--ring", rings, "built-in name or ring file; repeat for a batch");
  app.add_option("--format", s.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--epsilon", epsilon, "tolerance for scalar comparisons")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for the character-table combination");
  app.add_flag("--no-verify", no_verify, "skip the theorem checks in analyze");

  app.add_subcommand("validate", "check the fusion ring axioms");
  app.add_subcommand("analyze", "full report with theorem checks");
  app.add_subcommand("characters", "character table and formal codegrees");
  for (const char* name : {"kernel", "grading", "brauer"}) {
    auto* sub = app.add_subcommand(name, std::string(name == std::string("kernel")    ? "kernel and center of a simple"
                                                     : name == std::string("grading") ? "universal grading of C(X)"
                                                                                      : "tensor-power search for a simple"));
    sub->add_option("--object", s.object, "label of the simple")->required();
    if (name == std::string("brauer")) sub->add_option("--cap", s.cap, "largest power searched");
  }
  app.add_subcommand("modular", "centralizers from an S-matrix")
      ->add_option("--smatrix", s.smatrix, "S-matrix file (default: the built-in one)");
  app.add_subcommand("list-builtins", "names of the built-in rings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  s.command = app.get_subcommands().front()->get_name();
  s.spectral.tolerance.equality = epsilon;
  s.spectral.seed = seed;
  s.verify = !no_verify;
  const bool as_json = s.format == "json";

  if (s.command == "list-builtins") {
    const auto names = builtin_names();
    if (as_json) {
      std::cout << json(names).dump(2) << "\n";
    } else {
      for (const auto& n : names) std::cout << n << "\n";
    }
    return kOk;
  }
  if (rings.empty()) {
    std::cerr << "error: " << s.command << " needs --ring\n";
    return kUsage;
  }

  std::vector<Result> results(rings.size());
  // Rings are independent, so a batch is evaluated in parallel and printed in
  // input order.
#pragma omp parallel for schedule(dynamic)
  for (std::size_t n = 0; n < rings.size(); ++n) results[n] = run_guarded(rings[n], s);

  int status = kOk;
  json batch = json::array();
  for (std::size_t n = 0; n < results.size(); ++n) {
    const Result& res = results[n];
    status = std::max(status, res.status);
    if (as_json) {
      batch.push_back(res.doc);
      if (res.status != kOk && res.doc.contains("error")) std::cerr << "error: " << res.doc["error"].get<std::string>() << "\n";
    } else if (res.status != kOk && res.text.starts_with("error:")) {
      std::cerr << res.text;
    } else {
      if (n > 0) std::cout << "\n";
      std::cout << res.text;
    }
  }
  if (as_json) std::cout << (batch.size() == 1 ? batch[0] : batch).dump(2) << "\n";
  return status;
}
