#include "entgeo/rank_locus.hpp"

#include <algorithm>
#include <stdexcept>

namespace entgeo {

namespace {

void gen_partitions(unsigned remaining, unsigned max_part, unsigned slots_left,
                    std::vector<unsigned>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition{acc});
        return;
    }
    if (slots_left == 0) return;
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(remaining - p, p, slots_left - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_with_max_length(unsigned t, unsigned max_parts) {
    std::vector<Partition> out;
    std::vector<unsigned> acc;
    gen_partitions(t, t, max_parts, acc, out);
    return out;
}

mpz_class schur_dimension(const Partition& lambda, unsigned d) {
    if (lambda.length() > d) return 0;
    if (lambda.parts.empty()) return 1;
    // Conjugate partition for hook lengths.
    std::vector<unsigned> conj(lambda.parts[0], 0);
    for (unsigned i = 0; i < lambda.length(); ++i)
        for (unsigned j = 0; j < lambda.parts[i]; ++j) ++conj[j];
    mpz_class num = 1, den = 1;
    for (unsigned i = 0; i < lambda.length(); ++i)
        for (unsigned j = 0; j < lambda.parts[i]; ++j) {
            long content = static_cast<long>(j) - static_cast<long>(i);
            num *= static_cast<long>(d) + content;
            den *= static_cast<long>(lambda.parts[i] - j + conj[j] - i) - 1;
        }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

RankLocusProfile rank_locus_profile(unsigned d_a, unsigned d_b, unsigned r) {
    if (d_a == 0 || d_b == 0) throw std::invalid_argument("dimensions must be positive");
    if (r < 1 || r > std::min(d_a, d_b))
        throw std::invalid_argument("rank bound out of range");
    RankLocusProfile p;
    p.d_a = d_a;
    p.d_b = d_b;
    p.r = r;
    p.dim = static_cast<long>(r) * (d_a + d_b - r) - 1;
    p.codim = static_cast<long>(d_a - r) * (d_b - r);
    p.degree = rank_locus_degree(d_a, d_b, r);
    return p;
}

mpz_class rank_locus_degree(unsigned d_a, unsigned d_b, unsigned r) {
    if (r < 1 || r > std::min(d_a, d_b))
        throw std::invalid_argument("rank bound out of range");
    if (d_a > d_b) std::swap(d_a, d_b);
    // prod_{i=0}^{d_a-r-1} (d_b+i)! i! / ((r+i)! (d_b-r+i)!)
    mpz_class num = 1, den = 1, f;
    for (unsigned i = 0; r + i < d_a; ++i) {
        mpz_fac_ui(f.get_mpz_t(), d_b + i);
        num *= f;
        mpz_fac_ui(f.get_mpz_t(), i);
        num *= f;
        mpz_fac_ui(f.get_mpz_t(), r + i);
        den *= f;
        mpz_fac_ui(f.get_mpz_t(), d_b - r + i);
        den *= f;
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

namespace {

mpz_class hilbert_coefficient(unsigned d_a, unsigned d_b, unsigned r, unsigned t) {
    mpz_class sum = 0;
    for (const Partition& lambda : partitions_with_max_length(t, r))
        sum += schur_dimension(lambda, d_a) * schur_dimension(lambda, d_b);
    return sum;
}

}  // namespace

std::vector<mpz_class> hilbert_series_coefficients_serial(unsigned d_a, unsigned d_b, unsigned r,
                                                          unsigned t_max) {
    if (r < 1 || r > std::min(d_a, d_b))
        throw std::invalid_argument("rank bound out of range");
    std::vector<mpz_class> out(t_max + 1);
    for (unsigned t = 0; t <= t_max; ++t) out[t] = hilbert_coefficient(d_a, d_b, r, t);
    return out;
}

std::vector<mpz_class> hilbert_series_coefficients(unsigned d_a, unsigned d_b, unsigned r,
                                                   unsigned t_max) {
    if (r < 1 || r > std::min(d_a, d_b))
        throw std::invalid_argument("rank bound out of range");
    std::vector<mpz_class> out(t_max + 1);
    const long n = static_cast<long>(t_max) + 1;
#pragma omp parallel for schedule(static)
    for (long t = 0; t < n; ++t)
        out[static_cast<std::size_t>(t)] =
            hilbert_coefficient(d_a, d_b, r, static_cast<unsigned>(t));
    return out;
}

Rational evaluate_polynomial(const std::vector<Rational>& coeffs, long t) {
    Rational acc;
    Rational x(t);
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
}

std::vector<Rational> hilbert_polynomial(unsigned d_a, unsigned d_b, unsigned r) {
    RankLocusProfile profile = rank_locus_profile(d_a, d_b, r);
    const unsigned dim = static_cast<unsigned>(profile.dim);
    const unsigned t_max = 2 * dim + 1;
    std::vector<mpz_class> h = hilbert_series_coefficients(d_a, d_b, r, t_max);

    // Lagrange interpolation through (t, h(t)) for t in [0, dim].
    std::vector<Rational> poly(dim + 1);
    for (unsigned i = 0; i <= dim; ++i) {
        // Build the basis polynomial prod_{j != i} (x - j) / (i - j).
        std::vector<Rational> basis = {Rational(1)};
        Rational denom(1);
        for (unsigned j = 0; j <= dim; ++j) {
            if (j == i) continue;
            basis.push_back(Rational(0));
            for (std::size_t k = basis.size() - 1; k > 0; --k)
                basis[k] = basis[k - 1] - Rational(static_cast<long>(j)) * basis[k];
            basis[0] = -Rational(static_cast<long>(j)) * basis[0];
            denom *= Rational(static_cast<long>(i) - static_cast<long>(j));
        }
        Rational w = Rational(mpz_class(h[i]), mpz_class(1)) / denom;
        for (std::size_t k = 0; k < basis.size(); ++k) poly[k] += w * basis[k];
    }

    // Stabilization check on the shifted window.
    for (unsigned t = dim + 1; t <= t_max; ++t)
        if (evaluate_polynomial(poly, t) != Rational(mpz_class(h[t]), mpz_class(1)))
            throw std::invalid_argument("Hilbert function not polynomial in window");
    return poly;
}

bool incidence_dimension_identity(unsigned d_a, unsigned d_b, unsigned r) {
    RankLocusProfile profile = rank_locus_profile(d_a, d_b, r);
    long lhs = static_cast<long>(r) * (d_a - r) + static_cast<long>(r) * (d_b - r) +
               (static_cast<long>(r) * r - 1);
    return lhs == profile.dim;
}

long moduli_dimension(const SubsystemType& type) {
    long n = static_cast<long>(type.total());
    long sum_sq = 0;
    for (std::size_t d : type.factors()) sum_sq += static_cast<long>(d) * static_cast<long>(d);
    return n * n - sum_sq + (static_cast<long>(type.count()) - 1);
}

Rational quadric_discriminant(const std::array<Rational, 10>& coeffs) {
    ExactMatrix m(4, 4);
    const Rational half(1, 2);
    std::size_t k = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j, ++k) {
            if (i == j) {
                m.at(i, i) = CycNum(coeffs[k]);
            } else {
                m.at(i, j) = CycNum(coeffs[k] * half);
                m.at(j, i) = CycNum(coeffs[k] * half);
            }
        }
    return determinant(m).rational_value();
}

}  // namespace entgeo
