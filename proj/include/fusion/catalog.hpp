#pragma once

// Built-in fusion rings and modular data, and the JSON file formats.
//
// Ring file:
//   {"name": str, "rank": int, "labels": [str], "unit": int,
//    "dual": [int] (optional), "N": [[[int]]]}      N[i][j][k] as in FusionRing
// S-matrix file:
//   {"ring": str, "S": [[[re, im]]]}

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "fusion/modular.hpp"
#include "fusion/ring.hpp"

namespace fusion {

struct CatalogEntry {
  std::string name;
  FusionRing ring;
  std::optional<ModularData> smatrix;
  std::string notes;
};

/// Names accepted by builtin(), in listing order.
std::vector<std::string> builtin_names();

/// Looks up a built-in: trivial, pointed_z<n> (1..24), vec_s3, rep_s3, rep_q8,
/// fibonacci, ising, tambara_yamagami_z<n> (1..12), su2_<k> (1..10). The forms
/// pointed_zn(<n>), tambara_yamagami_zn(<n>) and su2_k(<k>) are accepted too.
/// Throws UnknownName.
CatalogEntry builtin(std::string_view name);

FusionRing trivial_ring();
FusionRing pointed_cyclic_ring(unsigned n);
FusionRing group_ring_s3();
FusionRing rep_s3_ring();
FusionRing rep_q8_ring();
FusionRing fibonacci_ring();
FusionRing ising_ring();
FusionRing tambara_yamagami_ring(unsigned n);
/// Truncated Clebsch-Gordan rule at level k: simples 0..k (twice the spin).
FusionRing su2_ring(unsigned k);

Eigen::MatrixXcd fibonacci_smatrix();
Eigen::MatrixXcd ising_smatrix();
Eigen::MatrixXcd pointed_cyclic_smatrix(unsigned n);
Eigen::MatrixXcd su2_smatrix(unsigned k);

// --- files -----------------------------------------------------------------

nlohmann::json ring_to_json(const FusionRing& ring);

/// Normalizes (unit moved to index 0, dual recomputed) and, unless `check` is
/// off, validates. Throws ParseError, DualMismatch or ValidationError.
FusionRing ring_from_json(const nlohmann::json& doc, bool check = true);
FusionRing parse_ring(std::string_view text, bool check = true);

void save_ring(const FusionRing& ring, const std::filesystem::path& path);
FusionRing load_ring(const std::filesystem::path& path, bool check = true);

nlohmann::json smatrix_to_json(const ModularData& md);
void save_smatrix(const ModularData& md, const std::filesystem::path& path);

/// Binds an S-matrix to `ring`, validates it and checks that the Verlinde
/// formula gives back the ring. Throws ParseError, DimensionMismatch,
/// InvariantFailed or VerlindeMismatch.
ModularData smatrix_from_json(const nlohmann::json& doc, const FusionRing& ring, const SpectralOptions& options = {});
ModularData parse_smatrix(std::string_view text, const FusionRing& ring, const SpectralOptions& options = {});
ModularData load_smatrix(const std::filesystem::path& path, const FusionRing& ring,
                         const SpectralOptions& options = {});

/// Throws VerlindeMismatch unless verlinde_ring(S) equals md.ring().
void check_verlinde_round_trip(const ModularData& md);

/// A built-in name, or else a path to a ring file.
FusionRing resolve_ring(const std::string& name_or_path, bool check = true);

}  // namespace fusion
