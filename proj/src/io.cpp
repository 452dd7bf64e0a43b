#include <fstream>
#include <sstream>

#include "fusion/catalog.hpp"

namespace fusion {
namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + what);
}

const json& require(const json& doc, const char* key) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "document is not a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) field_error(key, "missing");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) field_error(field, "expected an integer");
  return v.get<std::int64_t>();
}

Index as_index(const json& v, const std::string& field, std::size_t bound) {
  const auto x = as_int(v, field);
  if (x < 0 || static_cast<std::size_t>(x) >= bound) field_error(field, "index out of range");
  return static_cast<Index>(x);
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Convert the byte offset to line:column.
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t p = 0; p + 1 < e.byte && p < text.size(); ++p) {
      if (text[p] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                                           e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

}  // namespace

json ring_to_json(const FusionRing& ring) {
  const std::size_t r = ring.rank();
  json n = json::array();
  for (Index i = 0; i < r; ++i) {
    json row = json::array();
    for (Index j = 0; j < r; ++j) {
      json col = json::array();
      for (Index k = 0; k < r; ++k) col.push_back(ring(i, j, k));
      row.push_back(std::move(col));
    }
    n.push_back(std::move(row));
  }
  return json{{"name", ring.name()},
              {"rank", r},
              {"labels", ring.labels()},
              {"unit", FusionRing::unit()},
              {"dual", std::vector<Index>(ring.duals().begin(), ring.duals().end())},
              {"N", std::move(n)}};
}

FusionRing ring_from_json(const json& doc, bool check) {
  const json& name_v = require(doc, "name");
  if (!name_v.is_string()) field_error("name", "expected a string");
  const auto rank_i = as_int(require(doc, "rank"), "rank");
  if (rank_i < 1) field_error("rank", "must be >= 1");
  const auto r = static_cast<std::size_t>(rank_i);

  const json& labels_v = require(doc, "labels");
  if (!labels_v.is_array() || labels_v.size() != r) field_error("labels", "expected " + std::to_string(r) + " strings");
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < r; ++a) {
    if (!labels_v[a].is_string()) field_error("labels[" + std::to_string(a) + "]", "expected a string");
    labels.push_back(labels_v[a].get<std::string>());
  }
  const Index unit = as_index(require(doc, "unit"), "unit", r);

  const json& n_v = require(doc, "N");
  std::vector<Multiplicity> n(r * r * r);
  if (!n_v.is_array() || n_v.size() != r) field_error("N", "expected " + std::to_string(r) + " rows");
  for (Index i = 0; i < r; ++i) {
    const std::string fi = "N[" + std::to_string(i) + "]";
    if (!n_v[i].is_array() || n_v[i].size() != r) field_error(fi, "expected " + std::to_string(r) + " entries");
    for (Index j = 0; j < r; ++j) {
      const std::string fij = fi + "[" + std::to_string(j) + "]";
      if (!n_v[i][j].is_array() || n_v[i][j].size() != r) field_error(fij, "expected " + std::to_string(r) + " entries");
      for (Index k = 0; k < r; ++k) {
        const std::string fijk = fij + "[" + std::to_string(k) + "]";
        const auto m = as_int(n_v[i][j][k], fijk);
        if (m < 0) field_error(fijk, "multiplicities must be nonnegative");
        n[(i * r + j) * r + k] = m;
      }
    }
  }

  const std::vector<Index> computed = dual_from_structure(n, r, unit);
  if (auto it = doc.find("dual"); it != doc.end()) {
    if (!it->is_array() || it->size() != r) field_error("dual", "expected " + std::to_string(r) + " indices");
    for (Index a = 0; a < r; ++a) {
      const Index d = as_index((*it)[a], "dual[" + std::to_string(a) + "]", r);
      if (d != computed[a]) {
        throw Error(ErrorCode::DualMismatch, "declared dual of " + labels[a] + " is " + labels[d] +
                                                 " but the structure constants give " + labels[computed[a]]);
      }
    }
  }

  // Move the unit to index 0, keeping the order of the others.
  std::vector<Index> order{unit};
  for (Index a = 0; a < r; ++a)
    if (a != unit) order.push_back(a);
  std::vector<Index> position(r);
  for (Index a = 0; a < r; ++a) position[order[a]] = a;

  std::vector<std::string> new_labels(r);
  std::vector<Index> new_dual(r);
  std::vector<Multiplicity> new_n(r * r * r);
  for (Index a = 0; a < r; ++a) {
    new_labels[a] = labels[order[a]];
    new_dual[a] = position[computed[order[a]]];
    for (Index b = 0; b < r; ++b)
      for (Index c = 0; c < r; ++c) new_n[(a * r + b) * r + c] = n[(order[a] * r + order[b]) * r + order[c]];
  }
  FusionRing ring(name_v.get<std::string>(), std::move(new_labels), std::move(new_dual), std::move(new_n));
  if (!check) return ring;
  if (auto report = validate(ring); !report.valid()) throw ValidationError(std::move(report));
  return ring;
}

FusionRing parse_ring(std::string_view text, bool check) { return ring_from_json(parse_text(text), check); }

void save_ring(const FusionRing& ring, const std::filesystem::path& path) { write_file(path, ring_to_json(ring)); }

FusionRing load_ring(const std::filesystem::path& path, bool check) {
  try {
    return parse_ring(read_file(path), check);
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

json smatrix_to_json(const ModularData& md) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < md.s().rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < md.s().cols(); ++j) row.push_back({md.s()(i, j).real(), md.s()(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return json{{"ring", md.ring().name()}, {"S", std::move(rows)}};
}

void save_smatrix(const ModularData& md, const std::filesystem::path& path) { write_file(path, smatrix_to_json(md)); }

ModularData smatrix_from_json(const json& doc, const FusionRing& ring, const SpectralOptions& options) {
  if (const json& name = require(doc, "ring"); !name.is_string()) field_error("ring", "expected a string");
  const json& s_v = require(doc, "S");
  if (!s_v.is_array() || s_v.empty()) field_error("S", "expected a nonempty array of rows");
  const auto r = static_cast<Eigen::Index>(s_v.size());
  Eigen::MatrixXcd s(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    const std::string fi = "S[" + std::to_string(i) + "]";
    const json& row = s_v[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != r) field_error(fi, "S must be square");
    for (Eigen::Index j = 0; j < r; ++j) {
      const std::string fij = fi + "[" + std::to_string(j) + "]";
      const json& z = row[static_cast<std::size_t>(j)];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        field_error(fij, "expected [re, im]");
      }
      s(i, j) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  ModularData md = ModularData::create(std::move(s), ring, options);
  check_verlinde_round_trip(md);
  return md;
}

ModularData parse_smatrix(std::string_view text, const FusionRing& ring, const SpectralOptions& options) {
  return smatrix_from_json(parse_text(text), ring, options);
}

ModularData load_smatrix(const std::filesystem::path& path, const FusionRing& ring, const SpectralOptions& options) {
  return parse_smatrix(read_file(path), ring, options);
}

}  // namespace fusion
