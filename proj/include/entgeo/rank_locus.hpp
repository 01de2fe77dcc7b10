#pragma once

#include "entgeo/rational.hpp"
#include "entgeo/tensor_state.hpp"

#include <array>
#include <vector>

namespace entgeo {

// Integer partition, parts weakly decreasing and positive; empty = partition of 0.
struct Partition {
    std::vector<unsigned> parts;

    unsigned size() const {
        unsigned t = 0;
        for (unsigned p : parts) t += p;
        return t;
    }
    unsigned length() const { return static_cast<unsigned>(parts.size()); }
};

// All partitions of t with at most max_parts parts, generated recursively in
// lexicographically decreasing part order.
std::vector<Partition> partitions_with_max_length(unsigned t, unsigned max_parts);

// Dimension of the Schur functor S_lambda applied to C^d, by the
// hook-content formula; 0 when the partition is longer than d.
mpz_class schur_dimension(const Partition& lambda, unsigned d);

// Invariants of the locus of states of schmidt rank <= r inside the
// projectivized (d_A x d_B)-matrix space.
struct RankLocusProfile {
    unsigned d_a = 0, d_b = 0, r = 0;
    long dim = 0;    // r (d_A + d_B - r) - 1
    long codim = 0;  // (d_A - r)(d_B - r)
    mpz_class degree;
};
RankLocusProfile rank_locus_profile(unsigned d_a, unsigned d_b, unsigned r);
mpz_class rank_locus_degree(unsigned d_a, unsigned d_b, unsigned r);

// Hilbert function values h(0..t_max) of the coordinate ring: at t, the sum
// over partitions of t with at most r parts of the product of the two Schur
// dimensions.  The parallel version fans out over t; the serial one is the
// reference it is compared with.
std::vector<mpz_class> hilbert_series_coefficients(unsigned d_a, unsigned d_b, unsigned r,
                                                   unsigned t_max);
std::vector<mpz_class> hilbert_series_coefficients_serial(unsigned d_a, unsigned d_b, unsigned r,
                                                          unsigned t_max);

// Hilbert polynomial by Lagrange interpolation on the window [0, dim],
// re-verified on the shifted window [dim+1, 2dim+1]; coefficients low to
// high.  Throws "Hilbert function not polynomial in window" on mismatch.
std::vector<Rational> hilbert_polynomial(unsigned d_a, unsigned d_b, unsigned r);

Rational evaluate_polynomial(const std::vector<Rational>& coeffs, long t);

// r(d_A - r) + r(d_B - r) + (r^2 - 1) == dim of the rank-r profile.
bool incidence_dimension_identity(unsigned d_a, unsigned d_b, unsigned r);

// n^2 - sum d_i^2 + (s - 1) for the stabilizer-quotient moduli count.
long moduli_dimension(const SubsystemType& type);

// Determinant of the symmetric matrix of a quadric in 4 variables.
// Coefficients ordered x0^2, x0x1, x0x2, x0x3, x1^2, x1x2, x1x3, x2^2,
// x2x3, x3^2; off-diagonal entries are halved.
Rational quadric_discriminant(const std::array<Rational, 10>& coeffs);

}  // namespace entgeo
