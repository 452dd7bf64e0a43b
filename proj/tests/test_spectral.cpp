#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fusion/catalog.hpp"
#include "fusion/spectral.hpp"
#include "oracles.hpp"

using namespace fusion;

namespace {

std::vector<FusionRing> commutative_builtins() {
  std::vector<FusionRing> out;
  for (const auto& name : builtin_names()) {
    FusionRing ring = builtin(name).ring;
    if (is_commutative(ring)) out.push_back(std::move(ring));
  }
  return out;
}

Complex at_dual(const FusionRing& ring, const Character& mu, Index j) { return mu[ring.dual(j)]; }

}  // namespace

TEST_CASE("FP dimensions of small rings") {
  const double sqrt2 = std::sqrt(2.0), phi = (1 + std::sqrt(5.0)) / 2;
  {
    const FusionRing ising = ising_ring();
    const FPData fp = fp_character(ising);
    CHECK(fp[oracle::idx(ising, "sigma")] == doctest::Approx(sqrt2).epsilon(1e-12));
    CHECK(fp[oracle::idx(ising, "psi")] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fp.global == doctest::Approx(4.0).epsilon(1e-12));
  }
  {
    const FPData fp = fp_character(fibonacci_ring());
    CHECK(std::abs(fp[1] - phi) < 1e-9);
    CHECK(std::abs(fp.global - (5 + std::sqrt(5.0)) / 2) < 1e-9);
  }
  {
    const FusionRing s3 = rep_s3_ring();
    const FPData fp = fp_character(s3);
    CHECK(std::abs(fp[oracle::idx(s3, "V")] - 2) < 1e-9);
    CHECK(std::abs(fp.global - 6) < 1e-9);
  }
  for (unsigned n : {1u, 2u, 5u, 12u}) {
    const FusionRing ty = tambara_yamagami_ring(n);
    const FPData fp = fp_character(ty);
    CHECK(std::abs(fp[oracle::idx(ty, "m")] - std::sqrt(static_cast<double>(n))) < 1e-9);
    CHECK(std::abs(fp.global - 2.0 * n) < 1e-9);
  }
}

TEST_CASE("su2 dimensions follow the sine formula") {
  for (unsigned k = 1; k <= 10; ++k) {
    const FPData fp = fp_character(su2_ring(k));
    for (unsigned j = 0; j <= k; ++j) {
      CAPTURE(k);
      CAPTURE(j);
      CHECK(std::abs(fp[j] - oracle::su2_dim(k, j)) < 1e-9);
    }
  }
}

TEST_CASE("FP dimensions are a positive character on every built-in") {
  for (const auto& name : builtin_names()) {
    const FusionRing ring = builtin(name).ring;
    CAPTURE(name);
    const FPData fp = fp_character(ring);
    CHECK(fp[0] == 1.0);
    double global = 0;
    for (Index i = 0; i < ring.rank(); ++i) {
      CHECK(fp[i] >= 1.0 - 1e-12);
      CHECK(std::abs(fp[i] - fp[ring.dual(i)]) < 1e-9);
      global += fp[i] * fp[i];
      for (Index j = 0; j < ring.rank(); ++j) {
        double rhs = 0;
        for (Index k = 0; k < ring.rank(); ++k) rhs += static_cast<double>(ring(i, j, k)) * fp[k];
        CHECK(std::abs(fp[i] * fp[j] - rhs) < 1e-9 * std::max(1.0, rhs));
      }
    }
    CHECK(std::abs(fp.global - global) < 1e-9 * global);
  }
}

TEST_CASE("Ising character table and codegrees") {
  const FusionRing ising = ising_ring();
  const CharacterTable table = character_table(ising);
  REQUIRE(table.size() == 3);
  CHECK(table.fp_index == 0);
  const double s = std::sqrt(2.0);
  // Basis (1, psi, sigma).
  const std::vector<oracle::Row> expected = {{1, 1, s}, {1, 1, -s}, {1, -1, 0}};
  for (const auto& mu : table.characters) CHECK(oracle::has_row(expected, mu.values, 1e-8));
  for (const auto& row : expected) {
    std::vector<oracle::Row> one{row};
    bool found = false;
    for (const auto& mu : table.characters) found = found || oracle::has_row(one, mu.values, 1e-8);
    CHECK(found);
  }
  std::vector<double> f = table.codegrees;
  std::sort(f.begin(), f.end());
  CHECK(std::abs(f[0] - 2) < 1e-8);
  CHECK(std::abs(f[1] - 4) < 1e-8);
  CHECK(std::abs(f[2] - 4) < 1e-8);
}

TEST_CASE("Fibonacci codegrees") {
  const CharacterTable table = character_table(fibonacci_ring());
  std::vector<double> f = table.codegrees;
  std::sort(f.begin(), f.end());
  const double r5 = std::sqrt(5.0);
  CHECK(std::abs(f[0] - (5 - r5) / 2) < 1e-8);
  CHECK(std::abs(f[1] - (5 + r5) / 2) < 1e-8);
}

TEST_CASE("group character tables are the classical ones") {
  SUBCASE("S3") {
    const FusionRing s3 = rep_s3_ring();
    const CharacterTable table = character_table(s3);
    REQUIRE(table.size() == 3);
    const auto classical = oracle::s3_table();
    const auto codegrees = oracle::s3_codegrees();
    for (std::size_t t = 0; t < table.size(); ++t) {
      CHECK(oracle::has_row(classical, table[t].values, 1e-8));
      // The codegree is the centralizer order of the class.
      for (std::size_t c = 0; c < classical.size(); ++c)
        if (oracle::has_row({classical[c]}, table[t].values, 1e-8)) CHECK(std::abs(table.codegrees[t] - codegrees[c]) < 1e-8);
    }
  }
  SUBCASE("Q8") {
    const CharacterTable table = character_table(rep_q8_ring());
    REQUIRE(table.size() == 5);
    for (const auto& mu : table.characters) CHECK(oracle::has_row(oracle::q8_table(), mu.values, 1e-8));
  }
  SUBCASE("cyclic groups") {
    for (unsigned n : {2u, 5u, 12u}) {
      const CharacterTable table = character_table(pointed_cyclic_ring(n));
      REQUIRE(table.size() == n);
      for (double f : table.codegrees) CHECK(std::abs(f - n) < 1e-8);
      // Every n-th root of unity appears exactly once as the value on g.
      std::vector<int> seen(n, 0);
      for (const auto& mu : table.characters) {
        const double turns = std::arg(mu[1]) / (2 * std::numbers::pi);
        ++seen[static_cast<std::size_t>(std::lround(turns * n + n)) % n];
      }
      for (int c : seen) CHECK(c == 1);
    }
  }
}

TEST_CASE("character_table rejects noncommutative rings") {
  const FusionRing s3 = group_ring_s3();
  CHECK_FALSE(is_commutative(s3));
  try {
    static_cast<void>(character_table(s3));
    FAIL("expected NonCommutative");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonCommutative);
  }
}

TEST_CASE("character tables are deterministic") {
  const FusionRing ring = su2_ring(7);
  const CharacterTable a = character_table(ring), b = character_table(ring);
  SpectralOptions other;
  other.seed = 99;
  const CharacterTable c = character_table(ring, other);
  REQUIRE(a.size() == b.size());
  REQUIRE(a.size() == c.size());
  for (std::size_t t = 0; t < a.size(); ++t) {
    CHECK(a[t].values == b[t].values);
    for (Index j = 0; j < ring.rank(); ++j) CHECK(std::abs(a[t][j] - c[t][j]) < 1e-8);
  }
}

TEST_CASE("bilinear form and adjoint class") {
  const FusionRing q8 = rep_q8_ring();
  const std::size_t r = q8.rank();
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j)
      CHECK(bilinear_m(q8, ClassVector::basis(r, i), ClassVector::basis(r, j)) == (i == j ? 1 : 0));
  CHECK(bilinear_m(q8, ClassVector({1, 2, 0, 0, 3}), ClassVector({4, 0, 0, 1, 5})) == 19);
  CHECK(adjoint_class(q8) == ClassVector({5, 1, 1, 1, 0}));
  CHECK(adjoint_class(ising_ring()) == ClassVector({3, 1, 0}));
}

TEST_CASE("spectral identities on every commutative built-in") {
  for (const FusionRing& ring : commutative_builtins()) {
    CAPTURE(ring.name());
    const std::size_t r = ring.rank();
    const FPData fp = fp_character(ring);
    const CharacterTable table = character_table(ring);
    REQUIRE(table.size() == r);
    const ClassVector cad = adjoint_class(ring);
    double inverse_sum = 0;
    for (std::size_t s = 0; s < r; ++s) {
      const Character& mu = table[s];
      CHECK(multiplicativity_residual(ring, mu) < 1e-8);
      CHECK(std::abs(mu[0] - 1.0) < 1e-9);
      for (Index j = 0; j < r; ++j) CHECK(std::abs(at_dual(ring, mu, j) - std::conj(mu[j])) < 1e-9);
      const Complex f = formal_codegree(ring, mu);
      CHECK(std::abs(f.imag()) < 1e-8);
      CHECK(f.real() > 0);
      CHECK(std::abs(f.real() - table.codegrees[s]) < 1e-8);
      CHECK(std::abs(mu(cad) - f) < 1e-8);
      inverse_sum += 1 / f.real();
      for (std::size_t t = 0; t < r; ++t) {
        Complex sum = 0;
        for (Index j = 0; j < r; ++j) sum += mu[j] * at_dual(ring, table[t], j);
        CHECK(std::abs(sum - (s == t ? f : 0.0)) < 1e-8 * std::max(1.0, f.real()));
      }
    }
    CHECK(std::abs(inverse_sum - 1) < 1e-8);
    for (Index j = 0; j < r; ++j) CHECK(std::abs(table[table.fp_index][j] - fp[j]) < 1e-9);
    CHECK(std::abs(table.codegrees[table.fp_index] - fp.global) < 1e-8 * fp.global);
  }
}

TEST_CASE("primitive idempotents") {
  for (const FusionRing& ring : commutative_builtins()) {
    if (ring.rank() > 13) continue;
    CAPTURE(ring.name());
    const std::size_t r = ring.rank();
    const FPData fp = fp_character(ring);
    const CharacterTable table = character_table(ring);
    const IdempotentSet set = primitive_idempotents(ring, table);
    REQUIRE(set.idempotents.size() == r);
    for (std::size_t s = 0; s < r; ++s) {
      // E_s = (1 / f_s) sum_j mu_s(j*) e_j.
      for (Index j = 0; j < r; ++j)
        CHECK(std::abs(set.idempotents[s][j] - at_dual(ring, table[s], j) / table.codegrees[s]) < 1e-8);
      for (std::size_t t = 0; t < r; ++t) {
        CHECK(std::abs(table[t](set.idempotents[s]) - (s == t ? 1.0 : 0.0)) < 1e-8);
        const ComplexVector prod = multiply(ring, set.idempotents[s], set.idempotents[t]);
        for (Index j = 0; j < r; ++j) CHECK(std::abs(prod[j] - (s == t ? set.idempotents[s][j] : 0.0)) < 1e-8);
      }
    }
    const ComplexVector reg = regular_element(ring, fp);
    for (Index j = 0; j < r; ++j)
      CHECK(std::abs(set.idempotents[table.fp_index][j] - reg[j] / fp.global) < 1e-8);
  }
}

TEST_CASE("a character of modulus FPdim on an object has one phase on its constituents") {
  // If mu(x) = xi FPdim(x) with |xi| = 1, every constituent j of x has
  // mu(j) = xi FPdim(j).
  for (const FusionRing& ring : commutative_builtins()) {
    if (ring.rank() > 13) continue;
    CAPTURE(ring.name());
    const std::size_t r = ring.rank();
    const FPData fp = fp_character(ring);
    const CharacterTable table = character_table(ring);
    for (const auto& mu : table.characters)
      for (Index a = 0; a < r; ++a)
        for (Index b = a; b < r; ++b) {
          const ClassVector x = multiply(ring, ClassVector::basis(r, a), ClassVector::basis(r, b));
          const Complex value = mu(x);
          const double dim = fp_evaluate(fp, x);
          if (std::abs(std::abs(value) - dim) > 1e-9 * dim) continue;
          const Complex xi = value / dim;
          for (Index j : x.support()) CHECK(std::abs(mu[j] - xi * fp[j]) < 1e-8);
        }
  }
}
