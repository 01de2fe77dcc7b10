#include "entgeo/spin_chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace entgeo {

namespace {

void validate(const SpinChainParams& params) {
    if (params.hopping.sign() <= 0)
        throw std::invalid_argument("hopping amplitude must be positive");
    if (params.penalty <= params.hopping)
        throw std::invalid_argument("penalty must exceed the hopping amplitude");
    if (!params.twist_branch.is_root_of_unity())
        throw std::invalid_argument("twist branch must be a root of unity");
}

}  // namespace

ExactMatrix one_magnon_hamiltonian(const SpinChainParams& params) {
    validate(params);
    const CycNum j(params.hopping);
    const CycNum d(params.penalty);
    ExactMatrix h(4, 4);
    h.at(0, 1) = -(j * params.twist_branch);
    h.at(1, 0) = -(j * params.twist_branch.inverse());
    h.at(2, 2) = d;
    h.at(3, 3) = d;
    // The twist only moves phases around: H is hermitian for any unit branch.
    if (!(h == h.conjugate_transpose()))
        throw std::logic_error("one-magnon block failed hermiticity");
    return h;
}

std::vector<Rational> one_magnon_spectrum(const SpinChainParams& params) {
    ExactMatrix h = one_magnon_hamiltonian(params);
    const CycNum j(params.hopping);
    const CycNum d(params.penalty);
    // (x - J)(x + J)(x - D)^2, low to high.
    std::vector<CycNum> expected = {-(j * j * d * d), CycNum(2L) * j * j * d,
                                    d * d - j * j, CycNum(-2L) * d, CycNum(1)};
    std::vector<CycNum> actual = characteristic_polynomial(h);
    if (actual != expected)
        throw std::logic_error("one-magnon spectrum does not factor as expected");
    std::vector<Rational> spectrum = {-params.hopping, params.hopping, params.penalty,
                                      params.penalty};
    std::sort(spectrum.begin(), spectrum.end());
    return spectrum;
}

StateVector local_ground_state(const SpinChainParams& params) {
    ExactMatrix h = one_magnon_hamiltonian(params);
    StateVector gs(4);
    gs.at(0) = params.twist_branch;
    gs.at(1) = CycNum(1);
    const CycNum energy = CycNum(-params.hopping);
    StateVector hv = apply(h, gs);
    for (std::size_t r = 0; r < 4; ++r)
        if (!(hv.at(r) == energy * gs.at(r)))
            throw std::logic_error("local ground state failed the eigen equation");
    return gs;
}

StateVector glued_ground_state(const SpinChainParams& params) {
    WeylPair w = build_weyl(4);
    ExactMatrix shift_inv = inverse(w.shift);
    StateVector glued = apply(shift_inv, local_ground_state(params));
    // Transported Hamiltonian on the far chart.
    ExactMatrix h = one_magnon_hamiltonian(params);
    ExactMatrix h_glued = shift_inv * h * w.shift;
    const CycNum energy = CycNum(-params.hopping);
    StateVector hv = apply(h_glued, glued);
    for (std::size_t r = 0; r < 4; ++r)
        if (!(hv.at(r) == energy * glued.at(r)))
            throw std::logic_error("glued ground state failed the eigen equation");
    return glued;
}

GluingReport gluing_report(const SpinChainParams& params) {
    GluingReport out;
    out.spectrum = one_magnon_spectrum(params);
    out.local_state = local_ground_state(params);
    out.glued_state = glued_ground_state(params);

    SubsystemType type({2, 2});
    Bipartition cut = Bipartition::factor_vs_rest(0, 2);
    out.local_rank = schmidt_rank(out.local_state, type, cut);
    out.glued_rank = schmidt_rank(out.glued_state, type, cut);

    WeylPair w = build_weyl(4);
    ProjectiveGate clock(w.clock);
    ProjectiveGate shift_inv(inverse(w.shift));
    out.commutator = commutator_scalar(clock, shift_inv);
    out.shift_is_local = stabilizer_member(shift_inv, type).member;
    return out;
}

}  // namespace entgeo
