#pragma once

#include "entgeo/tensor_state.hpp"

#include <optional>
#include <string>
#include <vector>

namespace entgeo {

// Degree pair (b, c) with shift t realizing a splitting-type multiset as
// { b_i + c_j + t }.  Both lists are sorted and start at 0.
struct TensorDecomposition {
    std::vector<long> b, c;
    long t = 0;
};

// The sorted multiset of pairwise sums b_i + c_j + t.
std::vector<long> compose_sumset(const std::vector<long>& b, const std::vector<long>& c, long t);

// Searches for a sumset decomposition of the degree multiset across
// (d_a, d_b).  Backtracking on the smallest unexplained value, which must be
// the next b part or the next c part; the b branch is tried first.  When
// d_a == d_b the returned pair is canonicalized by b <= c lexicographically.
std::optional<TensorDecomposition> split_decompose(std::vector<long> degrees, std::size_t d_a,
                                                   std::size_t d_b);

// Every ordered decomposition pair, no lexicographic dedup; used by the
// multipartite recursion.
std::vector<TensorDecomposition> split_decompose_all(std::vector<long> degrees, std::size_t d_a,
                                                     std::size_t d_b);

// Closed shortcut for the 2x2 case: reducible iff a1 + a4 == a2 + a3 after
// sorting.
bool split_decompose_2x2(std::vector<long> degrees);

// s-fold decomposition: degree list per factor, common shift t.  Solved by
// iterating the bipartite solver over the grouping (d_1, d_2 * ... * d_s)
// and recursing on the second part.
struct MultiDecomposition {
    std::vector<std::vector<long>> factors;
    long t = 0;
};
std::optional<MultiDecomposition> split_decompose_multi(std::vector<long> degrees,
                                                        const SubsystemType& type);

enum class BrauerProvenance { GenericSymbol, TensorOfPrimeSymbols, Declared };

// Torsion bookkeeping for a Brauer class pulled back to the fiber.
struct BrauerClassModel {
    unsigned period = 1;
    BrauerProvenance provenance = BrauerProvenance::Declared;
    unsigned level = 0;  // m for a generic symbol, p for a tensor of symbols
    std::string label;
};
BrauerClassModel generic_symbol_class(unsigned m);
// Tensor of two degree-p symbols; the class is p-torsion, so the declared
// period must divide p.  period = 0 means the generic value p.
BrauerClassModel tensor_prime_symbol_class(unsigned p, unsigned period = 0);
BrauerClassModel declared_class(unsigned period, std::string label = "");

// Necessary splitting condition: the period divides lcm(d_1, ..., d_s).
bool torsion_admissible(const BrauerClassModel& cls, const SubsystemType& type);

// True iff deg_v is divisible by gcd(d_a, d_b), the necessary condition a
// curve class must satisfy; false signals an obstruction.
bool curve_degree_obstruction(long deg_v, std::size_t d_a, std::size_t d_b);

// Order of the obstruction class on the rank-r moduli component of degree
// deg: gcd(r, deg).  Requires r >= 2.
unsigned moduli_brauer_order(unsigned r, long deg);

struct CatalogEntry {
    std::string name;
    std::string detail;
    std::vector<long> degrees;
    std::vector<std::size_t> type;
    bool reducible = false;
    bool expected_reducible = false;
    bool pass = false;
};

// Worked scenarios: the reducible/irreducible pair at (2, 2) over the
// trivial Brauer class, and the single-jump type (0, ..., 0, 1) on every
// all-nontrivial type with total dimension <= 16.
std::vector<CatalogEntry> example_catalog();

}  // namespace entgeo
