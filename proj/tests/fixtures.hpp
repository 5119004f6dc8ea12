#pragma once

#include "mslat/extension.hpp"

// Hand-built structures shared by the unit and acceptance suites. Everything
// here is constructed from explicit cover/° tables, never loaded from disk,
// so the tests stay meaningful when the bundled files change.
namespace fx {

using namespace mslat;

int ix(const FinLattice& L, const std::string& name);
Congruence blocks_of(const FinLattice& L,
                     const std::vector<std::vector<std::string>>& blocks);

MSAlgebra m1();        // 2x2 with a° = a, b° = b; simple, de Morgan, not Kleene
MSAlgebra m2();        // 10 elements: chain-cube-chain stack
MSAlgebra l1();        // 6 elements; the algebra of (m1, 2, phi1)
MSAlgebra l2();        // 15 elements; the algebra of (m2, 2, phi2)
MSAlgebra s3();        // 3-chain (0,0) < (1,0) < (1,1), Stone
MSAlgebra k3();        // 3-chain 0 < m < 1 with m° = m, Kleene
MSAlgebra boolean2();  // two-element Boolean algebra

FinLattice chain(int n);   // names "0", "1", ...
FinLattice grid22();       // 0 < a, b < 1
FinLattice diamond_m3();   // three atoms, not distributive
FinLattice pentagon_n5();  // not distributive

Triple l1_triple();  // (m1, 2, phi1)
Triple l2_triple();  // (m2, 2, phi2)

Congruence l1_theta();        // the single nontrivial congruence of l1
Congruence m2_theta_prime();  // blocks {a,c},{b,b°},{d,d°},{c°,a°}
Congruence l2_theta1();       // the pair (identity, total-on-dense)
Congruence l2_theta2();       // the pair (theta-prime, total-on-dense)
Congruence s3_theta();        // block {(1,0),(1,1)}

}  // namespace fx
