#include "entgeo/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace entgeo {

WeylPair build_weyl(unsigned m) {
    if (m < 2) throw std::invalid_argument("weyl pair needs level >= 2");
    ExactMatrix shift(m, m), clock(m, m);
    for (unsigned r = 0; r < m; ++r) {
        shift.at((r + 1) % m, r) = CycNum(1);
        clock.at(r, r) = CycNum::zeta_pow(m, r);
    }
    // Z X = zeta X Z, checked once at construction.
    if (!(clock * shift == CycNum::zeta(m) * (shift * clock)))
        throw std::logic_error("weyl commutation relation failed");
    return WeylPair{m, std::move(shift), std::move(clock)};
}

ProjectiveGate::ProjectiveGate(ExactMatrix g) : g_(std::move(g)) {
    if (!g_.is_square()) throw std::invalid_argument("gate must be square");
    if (determinant(g_).is_zero()) throw std::invalid_argument("gate must be invertible");
}

CycNum commutator_scalar(const ProjectiveGate& g, const ProjectiveGate& h) {
    if (g.matrix().rows() != h.matrix().rows())
        throw std::invalid_argument("gate dimension mismatch");
    ExactMatrix c = g.matrix() * h.matrix() * inverse(g.matrix()) * inverse(h.matrix());
    auto lambda = projective_equal(c, ExactMatrix::identity(c.rows()));
    if (!lambda) throw std::invalid_argument("gates do not commute projectively");
    return *lambda;
}

ExactMatrix realignment(const ExactMatrix& g, std::size_t d_a, std::size_t d_b) {
    if (g.rows() != d_a * d_b || g.cols() != d_a * d_b)
        throw std::invalid_argument("gate shape does not match bipartite type");
    ExactMatrix out(d_a * d_a, d_b * d_b);
    for (std::size_t a = 0; a < d_a; ++a)
        for (std::size_t ap = 0; ap < d_a; ++ap)
            for (std::size_t b = 0; b < d_b; ++b)
                for (std::size_t bp = 0; bp < d_b; ++bp)
                    out.at(a * d_a + ap, b * d_b + bp) = g.at(a + d_a * b, ap + d_a * bp);
    return out;
}

std::optional<std::pair<ExactMatrix, ExactMatrix>> kron_factorize(const ExactMatrix& g,
                                                                  std::size_t d_a,
                                                                  std::size_t d_b) {
    if (g.rows() != d_a * d_b || g.cols() != d_a * d_b)
        throw std::invalid_argument("gate shape does not match bipartite type");
    if (g.is_zero()) return std::nullopt;
    // Anchor at the first nonzero entry in row-major order.
    std::size_t r0 = 0, c0 = 0;
    bool found = false;
    for (std::size_t r = 0; r < g.rows() && !found; ++r)
        for (std::size_t c = 0; c < g.cols() && !found; ++c)
            if (!g.at(r, c).is_zero()) { r0 = r; c0 = c; found = true; }
    const std::size_t a0 = r0 % d_a, b0 = r0 / d_a;
    const std::size_t ap0 = c0 % d_a, bp0 = c0 / d_a;
    const CycNum anchor = g.at(r0, c0);

    // Candidate factors by ratios; with this normalization A (x) B = g exactly
    // whenever g splits at all.
    ExactMatrix fa(d_a, d_a), fb(d_b, d_b);
    const CycNum anchor_inv = anchor.inverse();
    for (std::size_t a = 0; a < d_a; ++a)
        for (std::size_t ap = 0; ap < d_a; ++ap)
            fa.at(a, ap) = g.at(a + d_a * b0, ap + d_a * bp0) * anchor_inv;
    for (std::size_t b = 0; b < d_b; ++b)
        for (std::size_t bp = 0; bp < d_b; ++bp)
            fb.at(b, bp) = g.at(a0 + d_a * b, ap0 + d_a * bp);

    for (std::size_t a = 0; a < d_a; ++a)
        for (std::size_t ap = 0; ap < d_a; ++ap)
            for (std::size_t b = 0; b < d_b; ++b)
                for (std::size_t bp = 0; bp < d_b; ++bp)
                    if (!(g.at(a + d_a * b, ap + d_a * bp) == fa.at(a, ap) * fb.at(b, bp)))
                        return std::nullopt;
    return std::make_pair(std::move(fa), std::move(fb));
}

namespace {

// Peels factors off the front of dims; every split is decided by the
// realignment rank-1 test and extracted by kron_factorize.
bool peel_factors(const ExactMatrix& h, const std::vector<std::size_t>& dims,
                  std::size_t from, std::vector<ExactMatrix>& out) {
    if (from + 1 == dims.size()) {
        if (h.is_zero()) return false;
        out.push_back(h);
        return true;
    }
    std::size_t d_a = dims[from];
    std::size_t d_b = 1;
    for (std::size_t i = from + 1; i < dims.size(); ++i) d_b *= dims[i];
    if (mat_rank(realignment(h, d_a, d_b)) != 1) return false;
    auto split = kron_factorize(h, d_a, d_b);
    if (!split) throw std::logic_error("rank-1 realignment without factorization");
    out.push_back(std::move(split->first));
    return peel_factors(split->second, dims, from + 1, out);
}

}  // namespace

StabilizerDecision stabilizer_member(const ProjectiveGate& g, const SubsystemType& type) {
    if (g.matrix().rows() != type.total())
        throw std::invalid_argument("gate dimension does not match type");
    const std::size_t s = type.count();
    std::vector<std::size_t> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    // Identity first, then lexicographic; only permutations moving factors
    // onto slots of equal dimension can contribute.
    do {
        bool compatible = true;
        for (std::size_t i = 0; i < s && compatible; ++i)
            compatible = type.factors()[perm[i]] == type.factors()[i];
        if (!compatible) continue;
        ExactMatrix p = factor_permutation_operator(type, perm);
        ExactMatrix h = g.matrix() * p.transpose();  // permutation inverse
        std::vector<ExactMatrix> factors;
        if (!peel_factors(h, type.factors(), 0, factors)) continue;
        StabilizerDecision out;
        out.member = true;
        out.permutation = perm;
        out.factors = std::move(factors);
        if (!projective_equal(factor_operator(type, out.factors) * p, g.matrix()))
            throw std::logic_error("stabilizer factorization failed verification");
        return out;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return StabilizerDecision{};
}

namespace {

struct Candidate {
    StateVector psi;
    std::vector<std::size_t> sup;   // (factor, i, j) for superposed candidates
    std::vector<std::size_t> base;  // digit tuple, the i branch for superposed ones
};

std::vector<Candidate> witness_candidates(const SubsystemType& type) {
    std::vector<Candidate> out;
    const std::size_t n = type.total();
    for (std::size_t r = 0; r < n; ++r) {
        auto digits = index_decode(r, type);
        out.push_back({basis_product(type, digits), {}, digits});
    }
    for (std::size_t k = 0; k < type.count(); ++k) {
        const std::size_t dk = type.factors()[k];
        for (std::size_t i = 0; i < dk; ++i)
            for (std::size_t j = i + 1; j < dk; ++j)
                for (std::size_t rest = 0; rest < n / dk; ++rest) {
                    // Enumerate the other factors through the codec of the
                    // type with factor k collapsed to dimension 1.
                    std::vector<std::size_t> shrunk = type.factors();
                    shrunk[k] = 1;
                    auto digits = index_decode(rest, SubsystemType(shrunk));
                    digits[k] = i;
                    StateVector psi(n);
                    psi.at(index_encode(digits, type)) = CycNum(1);
                    auto dj = digits;
                    dj[k] = j;
                    psi.at(index_encode(dj, type)) = CycNum(1);
                    out.push_back({std::move(psi), {k, i, j}, digits});
                }
    }
    return out;
}

}  // namespace

std::optional<WitnessResult> entangling_witness_serial(const ProjectiveGate& g,
                                                       const SubsystemType& type,
                                                       const Bipartition& cut) {
    for (auto& cand : witness_candidates(type)) {
        StateVector image = apply(g.matrix(), cand.psi);
        std::size_t rank = schmidt_rank(image, type, cut);
        if (rank >= 2)
            return WitnessResult{std::move(cand.psi), std::move(image), rank,
                                 std::move(cand.sup), std::move(cand.base)};
    }
    return std::nullopt;
}

std::optional<WitnessResult> entangling_witness(const ProjectiveGate& g, const SubsystemType& type,
                                                const Bipartition& cut) {
    auto cands = witness_candidates(type);
    std::vector<std::size_t> ranks(cands.size(), 0);
    std::vector<StateVector> images(cands.size(), StateVector(0));
    const long n = static_cast<long>(cands.size());
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < n; ++idx) {
        StateVector image = apply(g.matrix(), cands[static_cast<std::size_t>(idx)].psi);
        ranks[static_cast<std::size_t>(idx)] = schmidt_rank(image, type, cut);
        images[static_cast<std::size_t>(idx)] = std::move(image);
    }
    // Lowest candidate index wins, matching the serial scan.
    for (std::size_t idx = 0; idx < cands.size(); ++idx)
        if (ranks[idx] >= 2)
            return WitnessResult{std::move(cands[idx].psi), std::move(images[idx]), ranks[idx],
                                 std::move(cands[idx].sup), std::move(cands[idx].base)};
    return std::nullopt;
}

namespace {

void require_root_of_unity(const CycNum& x, const char* which) {
    if (!x.is_root_of_unity())
        throw std::invalid_argument(std::string(which) + " branch must be a root of unity");
}

}  // namespace

SymbolRep build_symbol_rep(unsigned m, const CycNum& u_branch, const CycNum& v_branch) {
    if (m < 2) throw std::invalid_argument("symbol model needs level >= 2");
    require_root_of_unity(u_branch, "u");
    require_root_of_unity(v_branch, "v");
    WeylPair w = build_weyl(m);
    SymbolRep rep{m, u_branch, v_branch, u_branch * w.shift, v_branch * w.clock};
    const long lm = static_cast<long>(m);
    ExactMatrix id = ExactMatrix::identity(m);
    ExactMatrix xm = rep.x_op;
    ExactMatrix ym = rep.y_op;
    for (long k = 1; k < lm; ++k) { xm = xm * rep.x_op; ym = ym * rep.y_op; }
    if (!(xm == u_branch.pow(lm) * id) || !(ym == v_branch.pow(lm) * id))
        throw std::logic_error("symbol power relation failed");
    if (!(rep.y_op * rep.x_op == CycNum::zeta(m) * (rep.x_op * rep.y_op)))
        throw std::logic_error("symbol commutation relation failed");
    return rep;
}

TensorSymbolRep build_tensor_symbol_rep(unsigned p, const CycNum& u_branch, const CycNum& a_branch,
                                        const CycNum& v_branch, const CycNum& b_branch) {
    if (p < 2) throw std::invalid_argument("tensor symbol model needs level >= 2");
    require_root_of_unity(u_branch, "u");
    require_root_of_unity(a_branch, "a");
    require_root_of_unity(v_branch, "v");
    require_root_of_unity(b_branch, "b");
    WeylPair w = build_weyl(p);
    SubsystemType type({p, p});
    ExactMatrix id = ExactMatrix::identity(p);
    TensorSymbolRep rep{p, u_branch, a_branch, v_branch, b_branch,
                        u_branch * factor_operator(type, {w.shift, id}),
                        a_branch * factor_operator(type, {w.clock, id}),
                        v_branch * factor_operator(type, {id, w.shift}),
                        b_branch * factor_operator(type, {id, w.clock})};
    const long lp = static_cast<long>(p);
    ExactMatrix idn = ExactMatrix::identity(p * p);
    auto power = [&](const ExactMatrix& g) {
        ExactMatrix acc = g;
        for (long k = 1; k < lp; ++k) acc = acc * g;
        return acc;
    };
    if (!(power(rep.x_u) == u_branch.pow(lp) * idn) || !(power(rep.y_u) == a_branch.pow(lp) * idn) ||
        !(power(rep.x_v) == v_branch.pow(lp) * idn) || !(power(rep.y_v) == b_branch.pow(lp) * idn))
        throw std::logic_error("tensor symbol power relation failed");
    const CycNum z = CycNum::zeta(p);
    if (!(rep.y_u * rep.x_u == z * (rep.x_u * rep.y_u)) ||
        !(rep.y_v * rep.x_v == z * (rep.x_v * rep.y_v)))
        throw std::logic_error("tensor symbol commutation relation failed");
    // The u-side and v-side operators act on different legs, so they commute
    // on the nose.
    const ExactMatrix* us[] = {&rep.x_u, &rep.y_u};
    const ExactMatrix* vs[] = {&rep.x_v, &rep.y_v};
    for (const auto* a : us)
        for (const auto* b : vs)
            if (!(*a * *b == *b * *a))
                throw std::logic_error("tensor symbol legs failed to commute");
    return rep;
}

ProjectiveGate monodromy_of_loop(const SymbolRep& rep, LoopKind loop) {
    WeylPair w = build_weyl(rep.m);
    // Branch changes only contribute scalars, so the representatives can be
    // normalized to the bare clock and inverse shift.
    if (loop == LoopKind::U) return ProjectiveGate(w.clock);
    return ProjectiveGate(inverse(w.shift));
}

ProjectiveGate monodromy_of_loop(const TensorSymbolRep& rep, LoopKind loop) {
    WeylPair w = build_weyl(rep.p);
    SubsystemType type({rep.p, rep.p});
    ExactMatrix id = ExactMatrix::identity(rep.p);
    if (loop == LoopKind::U) return ProjectiveGate(factor_operator(type, {w.clock, id}));
    return ProjectiveGate(factor_operator(type, {id, w.clock}));
}

ExactMatrix cnot_gate() {
    SubsystemType type({2, 2});
    ExactMatrix g(4, 4);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            g.at(index_encode({a, b ^ a}, type), index_encode({a, b}, type)) = CycNum(1);
    return g;
}

CnotEquivalence cnot_equivalence_check() {
    WeylPair w4 = build_weyl(4);
    WeylPair w2 = build_weyl(2);
    SubsystemType type({2, 2});
    ExactMatrix id2 = ExactMatrix::identity(2);

    ExactMatrix phase(2, 2);  // diag(1, zeta_4)
    phase.at(0, 0) = CycNum(1);
    phase.at(1, 1) = CycNum::zeta(4);

    ExactMatrix clock_target = factor_operator(type, {phase, w2.clock});
    ExactMatrix shift_target = cnot_gate() * factor_operator(type, {w2.shift, id2});

    auto clock_scalar = projective_equal(w4.clock, clock_target);
    auto shift_scalar = projective_equal(inverse(w4.shift), shift_target);

    CnotEquivalence out;
    out.holds = clock_scalar.has_value() && shift_scalar.has_value();
    if (clock_scalar) out.clock_scalar = *clock_scalar;
    if (shift_scalar) out.shift_scalar = *shift_scalar;
    return out;
}

}  // namespace entgeo
