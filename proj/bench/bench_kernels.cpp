// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <vector>

#include "fusion/catalog.hpp"
#include "fusion/compute.hpp"

namespace {

using namespace fusion;

FusionRing product(const FusionRing& a, const FusionRing& b) {
  const std::size_t rb = b.rank(), r = a.rank() * rb;
  std::vector<std::string> labels;
  std::vector<Index> dual;
  for (Index i = 0; i < a.rank(); ++i)
    for (Index j = 0; j < rb; ++j) {
      labels.push_back(a.label(i) + "*" + b.label(j));
      dual.push_back(a.dual(i) * rb + b.dual(j));
    }
  std::vector<Multiplicity> n(r * r * r);
  for (Index x = 0; x < r; ++x)
    for (Index y = 0; y < r; ++y)
      for (Index z = 0; z < r; ++z) n[(x * r + y) * r + z] = a(x / rb, y / rb, z / rb) * b(x % rb, y % rb, z % rb);
  return FusionRing(a.name() + "x" + b.name(), std::move(labels), std::move(dual), std::move(n));
}

// Benchmark rings by argument: su2_10, tambara_yamagami_z12, pointed_z24,
// su2_6 x ising (rank 21), su2_10 x fibonacci (rank 22), su2_4 x su2_5 (rank 30).
const FusionRing& ring_for(std::int64_t which) {
  static const std::vector<FusionRing> rings = {
      su2_ring(10),
      tambara_yamagami_ring(12),
      pointed_cyclic_ring(24),
      product(su2_ring(6), ising_ring()),
      product(su2_ring(10), fibonacci_ring()),
      product(su2_ring(4), su2_ring(5)),
  };
  return rings.at(static_cast<std::size_t>(which));
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Unitary S-matrices by argument: su2_10, pointed_z24, su2_6 x ising, su2_4 x su2_5.
std::vector<std::complex<double>> unitary_for(std::int64_t which) {
  Eigen::MatrixXcd s;
  switch (which) {
    case 0: s = su2_smatrix(10); break;
    case 1: s = pointed_cyclic_smatrix(24); break;
    case 2: s = kron(su2_smatrix(6), ising_smatrix()); break;
    default: s = kron(su2_smatrix(4), su2_smatrix(5)); break;
  }
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < s.rows(); ++i)
    for (Eigen::Index j = 0; j < s.cols(); ++j) out.push_back(s(i, j));
  return out;
}

template <auto Kernel>
void associativity(benchmark::State& state) {
  const FusionRing& ring = ring_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(ring.structure(), ring.rank()));
  state.SetLabel(ring.name());
}

template <auto Kernel>
void multiply(benchmark::State& state) {
  const FusionRing& ring = ring_for(state.range(0));
  std::vector<Multiplicity> u(ring.rank()), v(ring.rank());
  for (std::size_t k = 0; k < u.size(); ++k) {
    u[k] = static_cast<Multiplicity>(k % 3 + 1);
    v[k] = static_cast<Multiplicity>(k % 5);
  }
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(ring.structure(), ring.rank(), u, v));
  state.SetLabel(ring.name());
}

template <auto Kernel>
void verlinde(benchmark::State& state) {
  const auto u = unitary_for(state.range(0));
  const auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(u.size()))));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(u, r));
  state.counters["rank"] = static_cast<double>(r);
}

BENCHMARK(associativity<compute::serial::associativity>)->DenseRange(0, 5);
BENCHMARK(associativity<compute::omp::associativity>)->DenseRange(0, 5);
BENCHMARK(multiply<compute::serial::multiply>)->DenseRange(0, 5);
BENCHMARK(multiply<compute::omp::multiply>)->DenseRange(0, 5);
BENCHMARK(verlinde<compute::serial::verlinde>)->DenseRange(0, 3);
BENCHMARK(verlinde<compute::omp::verlinde>)->DenseRange(0, 3);

}  // namespace

BENCHMARK_MAIN();
