#pragma once

#include "entgeo/matrix.hpp"

#include <cstddef>
#include <vector>

namespace entgeo {

// Ordered list of local dimensions d_1, ..., d_s, each >= 1.
class SubsystemType {
public:
    explicit SubsystemType(std::vector<std::size_t> factors);

    const std::vector<std::size_t>& factors() const { return factors_; }
    std::size_t count() const { return factors_.size(); }
    std::size_t total() const { return total_; }
    // At least two factors exceed 1.
    bool proper() const;

    friend bool operator==(const SubsystemType&, const SubsystemType&) = default;

private:
    std::vector<std::size_t> factors_;
    std::size_t total_;
};

// Mixed-radix codec, first factor least significant:
// r = a_1 + a_2*d_1 + a_3*d_1*d_2 + ...
std::size_t index_encode(const std::vector<std::size_t>& digits, const SubsystemType& type);
std::vector<std::size_t> index_decode(std::size_t flat, const SubsystemType& type);

// Split of the factor set into two nonempty sides; indices are 0-based.
class Bipartition {
public:
    Bipartition(std::vector<std::size_t> side_a, std::size_t factor_count);
    static Bipartition factor_vs_rest(std::size_t factor, std::size_t factor_count);

    const std::vector<std::size_t>& side_a() const { return side_a_; }
    const std::vector<std::size_t>& side_b() const { return side_b_; }

private:
    std::vector<std::size_t> side_a_, side_b_;
};

// Dense amplitude vector over the joint index space.
class StateVector {
public:
    explicit StateVector(std::size_t dim) : amps_(dim) {}
    explicit StateVector(std::vector<CycNum> amps) : amps_(std::move(amps)) {}

    std::size_t dim() const { return amps_.size(); }
    CycNum& at(std::size_t r) { return amps_[r]; }
    const CycNum& at(std::size_t r) const { return amps_[r]; }
    bool is_zero() const;

    friend bool operator==(const StateVector&, const StateVector&);

private:
    std::vector<CycNum> amps_;
};

// True when the two nonzero states span the same ray.
bool projective_equal_states(const StateVector& x, const StateVector& y);

StateVector basis_product(const SubsystemType& type, const std::vector<std::size_t>& digits);
StateVector apply(const ExactMatrix& op, const StateVector& psi);

// Flattening of psi across the cut: rows indexed by the side-A digit tuple,
// columns by the side-B tuple, both packed least significant first in
// increasing factor order.
ExactMatrix flatten(const StateVector& psi, const SubsystemType& type, const Bipartition& cut);

// Rank of the flattening; errors on the zero vector.
std::size_t schmidt_rank(const StateVector& psi, const SubsystemType& type, const Bipartition& cut);

// Segre membership: every single-factor-versus-rest cut has rank 1.
bool is_product_all_cuts(const StateVector& psi, const SubsystemType& type);

// Operator acting factorwise through the codec:
// out[r, r'] = prod_i per_factor[i][digit_i(r), digit_i(r')].
ExactMatrix factor_operator(const SubsystemType& type, const std::vector<ExactMatrix>& per_factor);

// Permutation operator moving the content of factor i to slot slot_of[i];
// requires matching dimensions at source and destination.
ExactMatrix factor_permutation_operator(const SubsystemType& type,
                                        const std::vector<std::size_t>& slot_of);

}  // namespace entgeo
