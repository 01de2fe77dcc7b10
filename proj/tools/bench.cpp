// Compares the OpenMP kernels against their serial references and reports
// timings plus an exact equality check for each pair.

#include "entgeo/rank_locus.hpp"
#include "entgeo/weyl.hpp"

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using entgeo::CycNum;
using entgeo::ExactMatrix;
using entgeo::Rational;

template <typename F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

ExactMatrix random_matrix(std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-4, 4);
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m.at(i, j) = CycNum(Rational(num(rng))) +
                         CycNum(Rational(num(rng))) * CycNum::zeta(4);
        }
    return m;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: unavailable, parallel kernels run serially\n");
#endif

    std::mt19937 rng(20240811u);

    {
        const std::size_t n = 48;
        ExactMatrix a = random_matrix(n, rng);
        ExactMatrix b = random_matrix(n, rng);
        ExactMatrix out_serial(0, 0), out_parallel(0, 0);
        double ts = timed([&] { out_serial = entgeo::mat_mul_serial(a, b); });
        double tp = timed([&] { out_parallel = entgeo::mat_mul(a, b); });
        std::printf("mat_mul %zux%zu: serial %.3fs parallel %.3fs match %s\n", n, n, ts, tp,
                    out_serial == out_parallel ? "yes" : "NO");
    }

    {
        const unsigned d_a = 4, d_b = 4, r = 2, t_max = 60;
        std::vector<mpz_class> hs, hp;
        double ts = timed([&] { hs = entgeo::hilbert_series_coefficients_serial(d_a, d_b, r, t_max); });
        double tp = timed([&] { hp = entgeo::hilbert_series_coefficients(d_a, d_b, r, t_max); });
        std::printf("hilbert (4,4,r=2) t<=%u: serial %.3fs parallel %.3fs match %s\n", t_max, ts,
                    tp, hs == hp ? "yes" : "NO");
    }

    {
        entgeo::WeylPair w = entgeo::build_weyl(8);
        entgeo::ProjectiveGate gate(entgeo::inverse(w.shift));
        entgeo::SubsystemType type({2, 2, 2});
        entgeo::Bipartition cut = entgeo::Bipartition::factor_vs_rest(0, 3);
        std::optional<entgeo::WitnessResult> ws, wp;
        double ts = timed([&] { ws = entgeo::entangling_witness_serial(gate, type, cut); });
        double tp = timed([&] { wp = entgeo::entangling_witness(gate, type, cut); });
        bool match = ws.has_value() == wp.has_value() &&
                     (!ws || (ws->state == wp->state && ws->image == wp->image));
        std::printf("witness scan m=8 (2,2,2): serial %.3fs parallel %.3fs match %s\n", ts, tp,
                    match ? "yes" : "NO");
    }
    return 0;
}
