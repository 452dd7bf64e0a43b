#include <limits>
#include <random>

#include <unsupported/Eigen/KroneckerProduct>

#include "doctest.h"
#include "fixtures.hpp"
#include "fusion/catalog.hpp"
#include "fusion/compute.hpp"
#include "oracles.hpp"

using namespace fusion;

namespace {

// Tensor product of two fusion rings, for ranks past the parallel threshold.
FusionRing product(const FusionRing& a, const FusionRing& b) {
  const std::size_t ra = a.rank(), rb = b.rank(), r = ra * rb;
  std::vector<std::string> labels;
  std::vector<Index> dual;
  for (Index i = 0; i < ra; ++i)
    for (Index j = 0; j < rb; ++j) {
      labels.push_back(a.label(i) + "*" + b.label(j));
      dual.push_back(a.dual(i) * rb + b.dual(j));
    }
  std::vector<Multiplicity> n(r * r * r);
  for (Index x = 0; x < r; ++x)
    for (Index y = 0; y < r; ++y)
      for (Index z = 0; z < r; ++z)
        n[(x * r + y) * r + z] = a(x / rb, y / rb, z / rb) * b(x % rb, y % rb, z % rb);
  return FusionRing(a.name() + "x" + b.name(), std::move(labels), std::move(dual), std::move(n));
}

std::vector<FusionRing> test_rings() {
  std::vector<FusionRing> out;
  for (const auto& name : builtin_names()) out.push_back(builtin(name).ring);
  out.push_back(product(su2_ring(4), ising_ring()));
  out.push_back(product(tambara_yamagami_ring(3), fibonacci_ring()));
  for (const auto& broken : fixtures::broken_rings()) out.push_back(broken.ring);
  return out;
}

std::vector<Complex> row_major(const Eigen::MatrixXcd& s) {
  std::vector<Complex> out;
  for (Eigen::Index i = 0; i < s.rows(); ++i)
    for (Eigen::Index j = 0; j < s.cols(); ++j) out.push_back(s(i, j));
  return out;
}

}  // namespace

TEST_CASE("associativity scan matches brute force") {
  for (const FusionRing& ring : test_rings()) {
    if (ring.rank() > 15) continue;
    CAPTURE(ring.name());
    const auto failures = oracle::associativity_failures(ring);
    const auto scan = compute::serial::associativity(ring.structure(), ring.rank());
    CHECK(scan.violations == failures.size());
    if (failures.empty()) {
      CHECK_FALSE(scan.first.has_value());
    } else {
      REQUIRE(scan.first.has_value());
      CHECK(*scan.first == failures.front());
    }
  }
}

TEST_CASE("serial and parallel associativity agree") {
  for (const FusionRing& ring : test_rings()) {
    CAPTURE(ring.name());
    CHECK(compute::serial::associativity(ring.structure(), ring.rank()) ==
          compute::omp::associativity(ring.structure(), ring.rank()));
  }
}

TEST_CASE("parallel scan finds the first witness in a large broken ring") {
  const FusionRing big = product(su2_ring(4), ising_ring());
  std::vector<Multiplicity> n(big.structure().begin(), big.structure().end());
  const std::size_t r = big.rank();
  n[(7 * r + 9) * r + 11] += 1;
  n[(13 * r + 13) * r + 2] += 3;
  const auto serial = compute::serial::associativity(n, r);
  CHECK(serial.violations > 0);
  CHECK(serial == compute::omp::associativity(n, r));
  CHECK(serial == compute::associativity(n, r));
}

TEST_CASE("serial and parallel multiplication agree") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Multiplicity> coeff(0, 5);
  for (const FusionRing& ring : test_rings()) {
    CAPTURE(ring.name());
    const std::size_t r = ring.rank();
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Multiplicity> u(r), v(r);
      for (auto& x : u) x = coeff(rng);
      for (auto& x : v) x = coeff(rng);
      const auto s = compute::serial::multiply(ring.structure(), r, u, v);
      CHECK(s == compute::omp::multiply(ring.structure(), r, u, v));
      CHECK(s == compute::multiply(ring.structure(), r, u, v));
    }
  }
}

TEST_CASE("serial and parallel Verlinde agree and reproduce the rules") {
  std::vector<std::pair<Eigen::MatrixXcd, FusionRing>> cases = {
      {ising_smatrix(), ising_ring()},
      {fibonacci_smatrix(), fibonacci_ring()},
      {su2_smatrix(10), su2_ring(10)},
      {pointed_cyclic_smatrix(16), pointed_cyclic_ring(16)},
  };
  {
    Eigen::MatrixXcd k = Eigen::kroneckerProduct(su2_smatrix(4), ising_smatrix());
    cases.emplace_back(k, product(su2_ring(4), ising_ring()));
  }
  for (const auto& [s, ring] : cases) {
    CAPTURE(ring.name());
    const std::size_t r = ring.rank();
    const auto u = row_major(s);
    const auto a = compute::serial::verlinde(u, r);
    const auto b = compute::omp::verlinde(u, r);
    REQUIRE(a.size() == r * r * r);
    for (std::size_t t = 0; t < a.size(); ++t) {
      CHECK(std::abs(a[t] - b[t]) < 1e-12);
      CHECK(std::abs(a[t] - static_cast<double>(ring.structure()[t])) < 1e-9);
    }
  }
}

TEST_CASE("multiplication overflow is detected by both kernels") {
  const FusionRing z2 = pointed_cyclic_ring(2);
  const Multiplicity big = std::numeric_limits<Multiplicity>::max() / 2 + 1;
  const std::vector<Multiplicity> u{big, 0}, v{2, 0};
  CHECK_THROWS_AS(compute::serial::multiply(z2.structure(), 2, u, v), Error);
  CHECK_THROWS_AS(compute::omp::multiply(z2.structure(), 2, u, v), Error);
}
