#pragma once

#include "entgeo/weyl.hpp"

namespace entgeo {

// Two-site, one-magnon sector of the twisted XXZ toy chain.  hopping is the
// kinetic amplitude J > 0, penalty the diagonal cost delta > J, and
// twist_branch the chosen fourth root u^(1/4) of the gluing unit, a root of
// unity.
struct SpinChainParams {
    Rational hopping;
    Rational penalty;
    CycNum twist_branch;
};

// Basis order r = 0..3 under the codec r = a + 2b on C^2 (x) C^2:
// rows ((0, -J u^(1/4), 0, 0), (-J u^(-1/4), 0, 0, 0), (0,0,D,0), (0,0,0,D)).
ExactMatrix one_magnon_hamiltonian(const SpinChainParams& params);

// Sorted eigenvalue multiset (-J, J, D, D), verified exactly against the
// characteristic polynomial.
std::vector<Rational> one_magnon_spectrum(const SpinChainParams& params);

// Ground state on the original chart: u^(1/4) |0> + |1>, eigenvalue -J.
StateVector local_ground_state(const SpinChainParams& params);

// The same ray pushed through the gluing shift X^-1 at level 4:
// |0> + u^(1/4) |3>, ground state of the conjugated Hamiltonian.
StateVector glued_ground_state(const SpinChainParams& params);

struct GluingReport {
    std::vector<Rational> spectrum;
    StateVector local_state{0};
    StateVector glued_state{0};
    std::size_t local_rank = 0;   // schmidt rank across the two sites: 1
    std::size_t glued_rank = 0;   // 2
    CycNum commutator;            // scalar of (clock, inverse shift): zeta_4^-1
    bool shift_is_local = false;  // stabilizer membership of X^-1 on (2, 2)
};
GluingReport gluing_report(const SpinChainParams& params);

}  // namespace entgeo
