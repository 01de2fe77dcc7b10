#include "doctest.h"

#include "entgeo/splitting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

using namespace entgeo;

namespace {

// Test-local oracle: exhaustive search over all normalized (b, c, t) triples
// for small bounded inputs.  Enumerates every sorted b starting at 0 within
// the value range and completes c by subtraction, entirely independent of
// the production backtracker.
bool oracle_decomposable(const std::vector<long>& degrees, std::size_t d_a, std::size_t d_b) {
    if (degrees.size() != d_a * d_b) return false;
    std::vector<long> sorted = degrees;
    std::sort(sorted.begin(), sorted.end());
    const long t = sorted.front();
    const long top = sorted.back() - t;

    std::vector<long> b(d_a, 0);
    std::function<bool(std::size_t)> go = [&](std::size_t k) -> bool {
        if (k == d_a) {
            // With b fixed, c is forced by the multiset quotient.
            std::multiset<long> pool(sorted.begin(), sorted.end());
            for (std::size_t j = 0; j < d_b; ++j) {
                // Smallest leftover sum must be b[0] + c_j + t with b[0] = 0.
                long cj = *pool.begin() - t;
                for (std::size_t i = 0; i < d_a; ++i) {
                    auto it = pool.find(b[i] + cj + t);
                    if (it == pool.end()) return false;
                    pool.erase(it);
                }
            }
            return pool.empty();
        }
        long lo = k == 0 ? 0 : b[k - 1];
        for (long v = lo; v <= top; ++v) {
            b[k] = v;
            if (go(k + 1)) return true;
        }
        return false;
    };
    return go(0);
}

}  // namespace

TEST_CASE("sumset composition") {
    CHECK(compose_sumset({0, 2}, {0, 5}, 0) == std::vector<long>{0, 2, 5, 7});
    CHECK(compose_sumset({0, 0}, {0, 1}, 3) == std::vector<long>{3, 3, 4, 4});
    CHECK(compose_sumset({0}, {0, 1, 2}, -1) == std::vector<long>{-1, 0, 1});
}

TEST_CASE("bipartite decomposition of worked examples") {
    auto d = split_decompose({0, 2, 5, 7}, 2, 2);
    REQUIRE(d.has_value());
    CHECK(d->b == std::vector<long>{0, 2});
    CHECK(d->c == std::vector<long>{0, 5});
    CHECK(d->t == 0);

    auto e = split_decompose({0, 0, 1, 1}, 2, 2);
    REQUIRE(e.has_value());
    CHECK(e->b == std::vector<long>{0, 0});
    CHECK(e->c == std::vector<long>{0, 1});
    CHECK(e->t == 0);

    CHECK(!split_decompose({0, 0, 0, 1}, 2, 2).has_value());
    CHECK(!split_decompose({0, 1, 1, 3}, 2, 2).has_value());

    // Shift normalization: minimum becomes t.
    auto s = split_decompose({4, 6, 9, 11}, 2, 2);
    REQUIRE(s.has_value());
    CHECK(s->t == 4);
    CHECK(s->b == std::vector<long>{0, 2});
    CHECK(s->c == std::vector<long>{0, 5});

    CHECK_THROWS_AS(split_decompose({0, 1}, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(split_decompose({}, 0, 2), std::invalid_argument);
}

TEST_CASE("decomposition round trip") {
    std::mt19937 rng(61u);
    std::uniform_int_distribution<long> part(0, 10);
    std::uniform_int_distribution<long> shift(-5, 5);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t da = dim(rng), db = dim(rng);
        std::vector<long> b{0}, c{0};
        for (std::size_t i = 1; i < da; ++i) b.push_back(part(rng));
        for (std::size_t j = 1; j < db; ++j) c.push_back(part(rng));
        std::sort(b.begin(), b.end());
        std::sort(c.begin(), c.end());
        long t = shift(rng);

        std::vector<long> degrees = compose_sumset(b, c, t);
        auto got = split_decompose(degrees, da, db);
        REQUIRE(got.has_value());
        CHECK(got->t == t);
        CHECK(compose_sumset(got->b, got->c, got->t) == degrees);
        CHECK(got->b.front() == 0);
        CHECK(got->c.front() == 0);
        CHECK(got->b.size() == da);
        CHECK(got->c.size() == db);

        // Anything the solver accepts also clears the degree condition.
        long total = std::accumulate(degrees.begin(), degrees.end(), 0L);
        CHECK(curve_degree_obstruction(total, da, db));
    }
}

TEST_CASE("shift invariance") {
    std::mt19937 rng(67u);
    std::uniform_int_distribution<long> part(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<long> degrees;
        for (int i = 0; i < 6; ++i) degrees.push_back(part(rng));
        auto base = split_decompose(degrees, 2, 3);
        std::vector<long> moved = degrees;
        for (auto& x : moved) x += 11;
        auto shifted = split_decompose(moved, 2, 3);
        CHECK(base.has_value() == shifted.has_value());
        if (base) {
            CHECK(shifted->b == base->b);
            CHECK(shifted->c == base->c);
            CHECK(shifted->t == base->t + 11);
        }
    }
}

TEST_CASE("backtracker agrees with the exhaustive oracle") {
    // All multisets over {0, 1, 2} for the shapes (2, 2), (2, 3), (3, 3).
    for (auto [da, db] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 3}}) {
        const std::size_t n = da * db;
        std::vector<long> entry(n, 0);
        for (;;) {
            std::vector<long> degrees = entry;
            CHECK(split_decompose(degrees, da, db).has_value() ==
                  oracle_decomposable(degrees, da, db));
            std::size_t k = 0;
            while (k < n && entry[k] == 2) entry[k++] = 0;
            if (k == n) break;
            ++entry[k];
        }
    }
}

TEST_CASE("canonical order when the sides match") {
    // Exhaustive 2x2 inputs: the reported pair always has b <= c.
    std::vector<long> entry(4, 0);
    for (;;) {
        auto d = split_decompose(entry, 2, 2);
        if (d) {
            bool le = !std::lexicographical_compare(d->c.begin(), d->c.end(), d->b.begin(),
                                                    d->b.end());
            CHECK(le);
        }
        std::size_t k = 0;
        while (k < 4 && entry[k] == 3) entry[k++] = 0;
        if (k == 4) break;
        ++entry[k];
    }
}

TEST_CASE("2x2 shortcut matches the solver") {
    std::vector<long> entry(4, 0);
    for (;;) {
        CHECK(split_decompose_2x2(entry) == split_decompose(entry, 2, 2).has_value());
        std::size_t k = 0;
        while (k < 4 && entry[k] == 4) entry[k++] = 0;
        if (k == 4) break;
        ++entry[k];
    }
    CHECK_THROWS_AS(split_decompose_2x2({0, 1, 2}), std::invalid_argument);
}

TEST_CASE("all decompositions are enumerated") {
    // {0,0,1,1,1,1,2,2} over (2, 4) splits as (0,1) x (0,0,1,1) and as
    // (0,0) x (0,1,1,2).
    auto all = split_decompose_all({0, 0, 1, 1, 1, 1, 2, 2}, 2, 4);
    CHECK(all.size() == 2);
    for (const auto& d : all)
        CHECK(compose_sumset(d.b, d.c, d.t) == std::vector<long>{0, 0, 1, 1, 1, 1, 2, 2});
    CHECK(split_decompose_all({0, 0, 0, 1}, 2, 2).empty());
}

TEST_CASE("multipartite decomposition") {
    SubsystemType t({2, 2, 2});
    auto m = split_decompose_multi({0, 1, 2, 3, 4, 5, 6, 7}, t);
    REQUIRE(m.has_value());
    REQUIRE(m->factors.size() == 3);
    CHECK(m->t == 0);
    CHECK(compose_sumset(compose_sumset(m->factors[0], m->factors[1], 0), m->factors[2], m->t) ==
          std::vector<long>{0, 1, 2, 3, 4, 5, 6, 7});
    std::vector<std::vector<long>> sorted = m->factors;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<std::vector<long>>{{0, 1}, {0, 2}, {0, 4}});

    // Single-jump lists never split.
    CHECK(!split_decompose_multi({0, 0, 0, 0, 0, 0, 0, 1}, t).has_value());
    CHECK(!split_decompose_multi({0, 0, 0, 1}, SubsystemType({2, 2})).has_value());

    // Two-factor case collapses to the bipartite solver.
    auto two = split_decompose_multi({3, 3, 4, 4}, SubsystemType({2, 2}));
    REQUIRE(two.has_value());
    CHECK(two->t == 3);
    CHECK(two->factors == std::vector<std::vector<long>>{{0, 0}, {0, 1}});

    CHECK_THROWS_AS(split_decompose_multi({0, 1}, t), std::invalid_argument);
}

TEST_CASE("torsion admissibility") {
    CHECK(torsion_admissible(generic_symbol_class(2), SubsystemType({2, 2})));
    CHECK(!torsion_admissible(generic_symbol_class(4), SubsystemType({2, 2})));
    CHECK(torsion_admissible(generic_symbol_class(4), SubsystemType({4, 2})));
    for (unsigned p : {2u, 3u, 5u}) {
        SubsystemType pp({p, p});
        CHECK(!torsion_admissible(generic_symbol_class(p * p), pp));
        CHECK(torsion_admissible(tensor_prime_symbol_class(p), pp));
    }
    CHECK(!torsion_admissible(declared_class(8), SubsystemType({2, 2, 2})));
    CHECK(!torsion_admissible(declared_class(8), SubsystemType({4, 2})));
    CHECK(torsion_admissible(declared_class(2), SubsystemType({2, 3})));
    CHECK(torsion_admissible(declared_class(1), SubsystemType({3, 3})));

    CHECK(generic_symbol_class(6).period == 6);
    CHECK(tensor_prime_symbol_class(3).period == 3);
    CHECK(tensor_prime_symbol_class(3, 3).period == 3);
    CHECK_THROWS_AS(tensor_prime_symbol_class(4), std::invalid_argument);
    CHECK_THROWS_AS(tensor_prime_symbol_class(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(generic_symbol_class(0), std::invalid_argument);
}

TEST_CASE("curve degree condition") {
    CHECK(!curve_degree_obstruction(3, 2, 2));
    CHECK(curve_degree_obstruction(4, 2, 2));
    CHECK(curve_degree_obstruction(0, 2, 2));
    CHECK(curve_degree_obstruction(7, 2, 3));
    CHECK(!curve_degree_obstruction(-3, 4, 2));
    CHECK(curve_degree_obstruction(-4, 4, 2));
}

TEST_CASE("moduli torsion order") {
    CHECK(moduli_brauer_order(4, 8) == 4);
    CHECK(moduli_brauer_order(4, 6) == 2);
    CHECK(moduli_brauer_order(4, 3) == 1);
    CHECK(moduli_brauer_order(2, -6) == 2);
    CHECK(moduli_brauer_order(3, 0) == 3);
    CHECK_THROWS_AS(moduli_brauer_order(1, 5), std::invalid_argument);
}

TEST_CASE("example catalog") {
    auto entries = example_catalog();
    CHECK(entries.size() == 17);
    for (const auto& e : entries) {
        CHECK(e.pass);
        CHECK(e.reducible == e.expected_reducible);
    }
    CHECK(entries[0].reducible);
    CHECK(!entries[1].reducible);
    // One irreducible single-jump entry per all-nontrivial type of total <= 16.
    std::size_t jumps = 0;
    for (const auto& e : entries)
        if (e.name.find("irreducible-jump") == 0) ++jumps;
    CHECK(jumps == 16);
}
