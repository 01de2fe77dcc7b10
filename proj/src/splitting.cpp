#include "entgeo/splitting.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace entgeo {

std::vector<long> compose_sumset(const std::vector<long>& b, const std::vector<long>& c, long t) {
    std::vector<long> out;
    out.reserve(b.size() * c.size());
    for (long x : b)
        for (long y : c) out.push_back(x + y + t);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Backtracking over the normalized multiset (min shifted to 0).  The
// smallest unexplained value can only be the next part of b or of c: a sum
// of two not-yet-chosen parts is at least as large as either of those, and
// each pairs with 0 to stay unexplained.  Trying b first makes the output
// deterministic.
class SumsetSearch {
public:
    SumsetSearch(const std::vector<long>& normalized, std::size_t d_a, std::size_t d_b,
                 std::function<bool(const std::vector<long>&, const std::vector<long>&)> sink)
        : d_a_(d_a), d_b_(d_b), sink_(std::move(sink)) {
        for (long v : normalized) ++unexplained_[v];
    }

    void run() {
        // Canonical roots b_1 = c_1 = 0 consume one copy of 0.
        if (!take(0)) return;
        b_.push_back(0);
        c_.push_back(0);
        search();
    }

private:
    bool take(long v) {
        auto it = unexplained_.find(v);
        if (it == unexplained_.end()) return false;
        if (--it->second == 0) unexplained_.erase(it);
        return true;
    }

    void put(long v) { ++unexplained_[v]; }

    // Consumes x + other[j] for all j; on failure restores and reports.
    bool consume_sums(long x, const std::vector<long>& other) {
        for (std::size_t j = 0; j < other.size(); ++j) {
            if (take(x + other[j])) continue;
            while (j-- > 0) put(x + other[j]);
            return false;
        }
        return true;
    }

    void restore_sums(long x, const std::vector<long>& other) {
        for (long y : other) put(x + y);
    }

    bool search() {
        if (unexplained_.empty()) {
            if (b_.size() == d_a_ && c_.size() == d_b_) return sink_(b_, c_);
            return false;
        }
        if (b_.size() == d_a_ && c_.size() == d_b_) return false;
        const long x = unexplained_.begin()->first;
        if (b_.size() < d_a_ && consume_sums(x, c_)) {
            b_.push_back(x);
            if (search()) return true;
            b_.pop_back();
            restore_sums(x, c_);
        }
        if (c_.size() < d_b_ && consume_sums(x, b_)) {
            c_.push_back(x);
            if (search()) return true;
            c_.pop_back();
            restore_sums(x, b_);
        }
        return false;
    }

    std::size_t d_a_, d_b_;
    std::function<bool(const std::vector<long>&, const std::vector<long>&)> sink_;
    std::map<long, int> unexplained_;
    std::vector<long> b_, c_;
};

long normalize(std::vector<long>& degrees) {
    std::sort(degrees.begin(), degrees.end());
    long t = degrees.front();
    for (long& v : degrees) v -= t;
    return t;
}

}  // namespace

std::optional<TensorDecomposition> split_decompose(std::vector<long> degrees, std::size_t d_a,
                                                   std::size_t d_b) {
    if (d_a == 0 || d_b == 0) throw std::invalid_argument("factor dimensions must be positive");
    if (degrees.size() != d_a * d_b)
        throw std::invalid_argument("degree list length must be d_a * d_b");
    long t = normalize(degrees);
    std::optional<TensorDecomposition> found;
    SumsetSearch search(degrees, d_a, d_b,
                        [&](const std::vector<long>& b, const std::vector<long>& c) {
                            if (d_a == d_b &&
                                std::lexicographical_compare(c.begin(), c.end(), b.begin(), b.end()))
                                return false;  // keep searching for the mirror
                            found = TensorDecomposition{b, c, t};
                            return true;
                        });
    search.run();
    return found;
}

std::vector<TensorDecomposition> split_decompose_all(std::vector<long> degrees, std::size_t d_a,
                                                     std::size_t d_b) {
    if (d_a == 0 || d_b == 0) throw std::invalid_argument("factor dimensions must be positive");
    if (degrees.size() != d_a * d_b)
        throw std::invalid_argument("degree list length must be d_a * d_b");
    long t = normalize(degrees);
    std::vector<TensorDecomposition> out;
    SumsetSearch search(degrees, d_a, d_b,
                        [&](const std::vector<long>& b, const std::vector<long>& c) {
                            TensorDecomposition d{b, c, t};
                            if (std::find_if(out.begin(), out.end(), [&](const auto& e) {
                                    return e.b == d.b && e.c == d.c;
                                }) == out.end())
                                out.push_back(std::move(d));
                            return false;  // exhaust the tree
                        });
    search.run();
    return out;
}

bool split_decompose_2x2(std::vector<long> degrees) {
    if (degrees.size() != 4) throw std::invalid_argument("need exactly four degrees");
    std::sort(degrees.begin(), degrees.end());
    return degrees[0] + degrees[3] == degrees[1] + degrees[2];
}

namespace {

// Recursive grouping (d_first, rest): try every bipartite decomposition and
// recurse into its second part.  Existence of an s-fold decomposition does
// not depend on factor order, so one fixed grouping chain is complete.
std::optional<std::vector<std::vector<long>>> multi_split(const std::vector<long>& normalized,
                                                          const std::vector<std::size_t>& dims,
                                                          std::size_t from) {
    if (from + 1 == dims.size()) {
        std::vector<long> sorted = normalized;
        std::sort(sorted.begin(), sorted.end());
        return std::vector<std::vector<long>>{sorted};
    }
    std::size_t rest = 1;
    for (std::size_t i = from + 1; i < dims.size(); ++i) rest *= dims[i];
    for (const TensorDecomposition& d : split_decompose_all(normalized, dims[from], rest)) {
        auto tail = multi_split(d.c, dims, from + 1);
        if (!tail) continue;
        std::vector<std::vector<long>> out;
        out.push_back(d.b);
        for (auto& part : *tail) out.push_back(std::move(part));
        return out;
    }
    return std::nullopt;
}

}  // namespace

std::optional<MultiDecomposition> split_decompose_multi(std::vector<long> degrees,
                                                        const SubsystemType& type) {
    if (degrees.size() != type.total())
        throw std::invalid_argument("degree list length must match the type");
    long t = normalize(degrees);
    auto parts = multi_split(degrees, type.factors(), 0);
    if (!parts) return std::nullopt;
    return MultiDecomposition{std::move(*parts), t};
}

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

BrauerClassModel generic_symbol_class(unsigned m) {
    if (m < 1) throw std::invalid_argument("symbol level must be positive");
    std::ostringstream label;
    label << "generic symbol of level " << m;
    return BrauerClassModel{m, BrauerProvenance::GenericSymbol, m, label.str()};
}

BrauerClassModel tensor_prime_symbol_class(unsigned p, unsigned period) {
    if (!is_prime(p)) throw std::invalid_argument("tensor symbol level must be prime");
    if (period == 0) period = p;
    if (p % period != 0)
        throw std::invalid_argument("tensor symbol period must divide the level");
    std::ostringstream label;
    label << "tensor of two degree-" << p << " symbols";
    return BrauerClassModel{period, BrauerProvenance::TensorOfPrimeSymbols, p, label.str()};
}

BrauerClassModel declared_class(unsigned period, std::string label) {
    if (period < 1) throw std::invalid_argument("period must be positive");
    return BrauerClassModel{period, BrauerProvenance::Declared, 0, std::move(label)};
}

bool torsion_admissible(const BrauerClassModel& cls, const SubsystemType& type) {
    unsigned long l = 1;
    for (std::size_t d : type.factors()) l = std::lcm(l, static_cast<unsigned long>(d));
    return l % cls.period == 0;
}

bool curve_degree_obstruction(long deg_v, std::size_t d_a, std::size_t d_b) {
    if (d_a == 0 || d_b == 0) throw std::invalid_argument("factor dimensions must be positive");
    long g = std::gcd(static_cast<long>(d_a), static_cast<long>(d_b));
    return deg_v % g == 0;
}

unsigned moduli_brauer_order(unsigned r, long deg) {
    if (r < 2) throw std::invalid_argument("moduli order needs rank >= 2");
    if (deg < 0) deg = -deg;
    return static_cast<unsigned>(std::gcd(static_cast<long>(r), deg));
}

namespace {

std::string type_suffix(const std::vector<std::size_t>& factors) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out << ",";
        out << factors[i];
    }
    out << ")";
    return out.str();
}

void all_nontrivial_types(std::size_t max_total, std::size_t min_factor, std::size_t product,
                          std::vector<std::size_t>& acc,
                          std::vector<std::vector<std::size_t>>& out) {
    if (acc.size() >= 2) out.push_back(acc);
    for (std::size_t d = min_factor; product * d <= max_total; ++d) {
        acc.push_back(d);
        all_nontrivial_types(max_total, d, product * d, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<CatalogEntry> example_catalog() {
    std::vector<CatalogEntry> out;

    auto run_entry = [&](std::string name, std::string detail, std::vector<long> degrees,
                         std::vector<std::size_t> factors, bool expected) {
        SubsystemType type(factors);
        bool reducible = split_decompose_multi(degrees, type).has_value();
        out.push_back(CatalogEntry{std::move(name), std::move(detail), std::move(degrees),
                                   std::move(factors), reducible, expected,
                                   reducible == expected});
    };

    run_entry("reducible-pair-(2,2)",
              "degrees (0,0,1,1) over the trivial Brauer class split as (0,0) + (0,1)",
              {0, 0, 1, 1}, {2, 2}, true);
    run_entry("irreducible-jump-(2,2)",
              "degrees (0,0,0,1) over the same trivial class admit no sumset decomposition",
              {0, 0, 0, 1}, {2, 2}, false);

    // Single top jump (0, ..., 0, 1) is irreducible on every all-nontrivial
    // type: a decomposition would force the minimum value multiplicity
    // n - 1 to be a product of factor multiplicities m_i <= d_i, impossible
    // with product d_i = n.
    std::vector<std::vector<std::size_t>> types;
    std::vector<std::size_t> acc;
    all_nontrivial_types(16, 2, 1, acc, types);
    for (const auto& factors : types) {
        SubsystemType type(factors);
        std::vector<long> degrees(type.total(), 0);
        degrees.back() = 1;
        run_entry("irreducible-jump-" + type_suffix(factors),
                  "single degree jump on the full type", std::move(degrees), factors, false);
    }
    return out;
}

}  // namespace entgeo
