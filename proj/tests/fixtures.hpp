#pragma once

// Rings built by breaking one based-ring axiom of a known-good ring.

#include <string>
#include <vector>

#include "fusion/catalog.hpp"
#include "fusion/ring.hpp"

namespace fixtures {

struct BrokenRing {
  std::string axiom;
  fusion::FusionRing ring;
};

inline fusion::FusionRing with_entry(const fusion::FusionRing& base, std::vector<fusion::Index> dual, fusion::Index i,
                                     fusion::Index j, fusion::Index k, fusion::Multiplicity value) {
  std::vector<fusion::Multiplicity> n(base.structure().begin(), base.structure().end());
  const std::size_t r = base.rank();
  n[(i * r + j) * r + k] = value;
  return fusion::FusionRing(base.name() + "_broken", base.labels(), std::move(dual), std::move(n));
}

inline std::vector<fusion::Index> duals(const fusion::FusionRing& ring) {
  return {ring.duals().begin(), ring.duals().end()};
}

inline std::vector<BrokenRing> broken_rings() {
  using namespace fusion;
  std::vector<BrokenRing> out;
  {
    // Z4 with the declared dual a 3-cycle on the nonunit elements.
    const FusionRing z4 = pointed_cyclic_ring(4);
    out.push_back({std::string(axiom::kInvolution), FusionRing("z4_cycle_dual", z4.labels(), {0, 2, 3, 1},
                                                               {z4.structure().begin(), z4.structure().end()})});
  }
  {
    // Fibonacci with tau * 1 = 0.
    const FusionRing fib = fibonacci_ring();
    out.push_back({std::string(axiom::kUnit), with_entry(fib, duals(fib), 1, 0, 1, 0)});
  }
  {
    // Z3 declared with every element self-dual.
    const FusionRing z3 = pointed_cyclic_ring(3);
    out.push_back({std::string(axiom::kDuality), FusionRing("z3_self_dual", z3.labels(), {0, 1, 2},
                                                            {z3.structure().begin(), z3.structure().end()})});
  }
  {
    // Rep(S3) with sgn dropped from V x V.
    const FusionRing s3 = rep_s3_ring();
    out.push_back({std::string(axiom::kFrobeniusReciprocity), with_entry(s3, duals(s3), 2, 2, 1, 0)});
  }
  {
    // Ising with sigma x sigma = 1 + 2 psi.
    const FusionRing ising = ising_ring();
    out.push_back({std::string(axiom::kAssociativity), with_entry(ising, duals(ising), 2, 2, 1, 2)});
  }
  return out;
}

}  // namespace fixtures
