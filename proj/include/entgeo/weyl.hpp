#pragma once

#include "entgeo/tensor_state.hpp"

#include <optional>
#include <string>
#include <utility>

namespace entgeo {

// Clock and shift pair at level m: shift X |r> = |r+1 mod m>,
// clock Z |r> = zeta_m^r |r>, satisfying Z X = zeta_m X Z.
struct WeylPair {
    unsigned m;
    ExactMatrix shift;
    ExactMatrix clock;
};
WeylPair build_weyl(unsigned m);  // m >= 2

// Invertible square matrix considered up to scalar.
class ProjectiveGate {
public:
    explicit ProjectiveGate(ExactMatrix g);
    const ExactMatrix& matrix() const { return g_; }

private:
    ExactMatrix g_;
};

// The scalar lambda with g h g^-1 h^-1 = lambda * id; throws
// "gates do not commute projectively" when the commutator is not scalar.
CycNum commutator_scalar(const ProjectiveGate& g, const ProjectiveGate& h);

// d_A^2 x d_B^2 rearrangement of a gate on the (d_A, d_B) space:
// entry ((a,a'), (b,b')) = g[(a,b), (a',b')] under the codec
// r = a + d_A * b, with row packing a*d_A + a' and column b*d_B + b'.
ExactMatrix realignment(const ExactMatrix& g, std::size_t d_a, std::size_t d_b);

// Reconstruct-and-verify Kronecker factorization across (d_A, d_B): anchors
// at a nonzero entry, reads off candidate factors by ratios, and checks the
// product.  Exact and independent of rank elimination.
std::optional<std::pair<ExactMatrix, ExactMatrix>> kron_factorize(const ExactMatrix& g,
                                                                  std::size_t d_a,
                                                                  std::size_t d_b);

struct StabilizerDecision {
    bool member = false;
    std::vector<std::size_t> permutation;  // slot_of map, meaningful when member
    std::vector<ExactMatrix> factors;      // per-factor matrices up to scalar
};

// Membership of [g] in the stabilizer of the Segre image for the given type:
// product of factorwise projective groups extended by permutations of
// equal-dimension factors.  Permutations are tried in lexicographic order;
// the factorization recurses on first-factor splits decided by the
// realignment rank-1 test.
StabilizerDecision stabilizer_member(const ProjectiveGate& g, const SubsystemType& type);

struct WitnessResult {
    StateVector state;       // product state in the search space
    StateVector image;       // g applied to it
    std::size_t image_rank;  // schmidt rank of the image across the cut
    std::vector<std::size_t> superposed_factor_pair;  // (factor, i, j) or empty
    std::vector<std::size_t> base_digits;
};

// Scans basis products and two-term one-factor superpositions in a fixed
// order and returns the first state whose image has schmidt rank >= 2 across
// the cut.  The parallel variant fans the candidates out and keeps the
// lowest-index hit, so both agree exactly.
std::optional<WitnessResult> entangling_witness(const ProjectiveGate& g, const SubsystemType& type,
                                                const Bipartition& cut);
std::optional<WitnessResult> entangling_witness_serial(const ProjectiveGate& g,
                                                       const SubsystemType& type,
                                                       const Bipartition& cut);

// One-variable symbol model at level m: x = u_branch * X, y = v_branch * Z
// for root-of-unity branch choices.  x^m = u, y^m = v, y x = zeta x y.
struct SymbolRep {
    unsigned m;
    CycNum u_branch, v_branch;
    ExactMatrix x_op, y_op;
};
SymbolRep build_symbol_rep(unsigned m, const CycNum& u_branch, const CycNum& v_branch);

// Tensor of two degree-p symbol models on C^p (x) C^p, codec r = a + p b:
// x_u = u_branch (X (x) id), y_u = a_branch (Z (x) id),
// x_v = v_branch (id (x) X), y_v = b_branch (id (x) Z).
struct TensorSymbolRep {
    unsigned p;
    CycNum u_branch, a_branch, v_branch, b_branch;
    ExactMatrix x_u, y_u, x_v, y_v;
};
TensorSymbolRep build_tensor_symbol_rep(unsigned p, const CycNum& u_branch, const CycNum& a_branch,
                                        const CycNum& v_branch, const CycNum& b_branch);

enum class LoopKind { U, V };

// Monodromy representatives, normalized to unit leading scalar:
// u-loop -> [Z], v-loop -> [X^-1].
ProjectiveGate monodromy_of_loop(const SymbolRep& rep, LoopKind loop);
// u-loop -> [Z (x) id], v-loop -> [id (x) Z].
ProjectiveGate monodromy_of_loop(const TensorSymbolRep& rep, LoopKind loop);

// Level-4 dictionary on C^2 (x) C^2: the clock gate matches
// diag(1, i) (x) diag(1, -1) and the inverse shift matches
// CNOT * (X (x) id), with the scalars reported exactly.
struct CnotEquivalence {
    bool holds = false;
    CycNum shift_scalar;
    CycNum clock_scalar;
};
CnotEquivalence cnot_equivalence_check();

// Controlled flip of the second qubit by the first, codec r = a + 2b.
ExactMatrix cnot_gate();

}  // namespace entgeo
