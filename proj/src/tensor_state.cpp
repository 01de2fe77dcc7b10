#include "entgeo/tensor_state.hpp"

#include <algorithm>
#include <stdexcept>

namespace entgeo {

SubsystemType::SubsystemType(std::vector<std::size_t> factors)
    : factors_(std::move(factors)), total_(1) {
    if (factors_.empty()) throw std::invalid_argument("subsystem type needs at least one factor");
    for (std::size_t d : factors_) {
        if (d == 0) throw std::invalid_argument("factor dimensions must be positive");
        total_ *= d;
    }
}

bool SubsystemType::proper() const {
    std::size_t big = 0;
    for (std::size_t d : factors_)
        if (d > 1) ++big;
    return big >= 2;
}

std::size_t index_encode(const std::vector<std::size_t>& digits, const SubsystemType& type) {
    if (digits.size() != type.count())
        throw std::invalid_argument("digit tuple length mismatch");
    std::size_t r = 0, stride = 1;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] >= type.factors()[i])
            throw std::invalid_argument("digit out of range");
        r += digits[i] * stride;
        stride *= type.factors()[i];
    }
    return r;
}

std::vector<std::size_t> index_decode(std::size_t flat, const SubsystemType& type) {
    if (flat >= type.total()) throw std::invalid_argument("index out of range");
    std::vector<std::size_t> digits(type.count());
    for (std::size_t i = 0; i < type.count(); ++i) {
        digits[i] = flat % type.factors()[i];
        flat /= type.factors()[i];
    }
    return digits;
}

Bipartition::Bipartition(std::vector<std::size_t> side_a, std::size_t factor_count) {
    std::sort(side_a.begin(), side_a.end());
    side_a.erase(std::unique(side_a.begin(), side_a.end()), side_a.end());
    if (side_a.empty()) throw std::invalid_argument("bipartition side A is empty");
    if (side_a.back() >= factor_count) throw std::invalid_argument("factor index out of range");
    std::vector<bool> in_a(factor_count, false);
    for (std::size_t k : side_a) in_a[k] = true;
    for (std::size_t k = 0; k < factor_count; ++k)
        if (!in_a[k]) side_b_.push_back(k);
    if (side_b_.empty()) throw std::invalid_argument("bipartition side B is empty");
    side_a_ = std::move(side_a);
}

Bipartition Bipartition::factor_vs_rest(std::size_t factor, std::size_t factor_count) {
    return Bipartition({factor}, factor_count);
}

bool StateVector::is_zero() const {
    for (const auto& a : amps_)
        if (!a.is_zero()) return false;
    return true;
}

bool operator==(const StateVector& x, const StateVector& y) {
    return x.amps_ == y.amps_;
}

bool projective_equal_states(const StateVector& x, const StateVector& y) {
    if (x.dim() != y.dim()) return false;
    ExactMatrix mx(1, x.dim()), my(1, y.dim());
    for (std::size_t r = 0; r < x.dim(); ++r) {
        mx.at(0, r) = x.at(r);
        my.at(0, r) = y.at(r);
    }
    return projective_equal(mx, my).has_value();
}

StateVector basis_product(const SubsystemType& type, const std::vector<std::size_t>& digits) {
    StateVector psi(type.total());
    psi.at(index_encode(digits, type)) = CycNum(1);
    return psi;
}

StateVector apply(const ExactMatrix& op, const StateVector& psi) {
    if (op.cols() != psi.dim()) throw std::invalid_argument("operator shape mismatch");
    StateVector out(op.rows());
    for (std::size_t i = 0; i < op.rows(); ++i)
        for (std::size_t j = 0; j < op.cols(); ++j) {
            if (op.at(i, j).is_zero() || psi.at(j).is_zero()) continue;
            out.at(i) += op.at(i, j) * psi.at(j);
        }
    return out;
}

namespace {

std::size_t side_total(const SubsystemType& type, const std::vector<std::size_t>& side) {
    std::size_t n = 1;
    for (std::size_t k : side) n *= type.factors()[k];
    return n;
}

std::size_t side_encode(const std::vector<std::size_t>& digits, const SubsystemType& type,
                        const std::vector<std::size_t>& side) {
    std::size_t r = 0, stride = 1;
    for (std::size_t k : side) {
        r += digits[k] * stride;
        stride *= type.factors()[k];
    }
    return r;
}

}  // namespace

ExactMatrix flatten(const StateVector& psi, const SubsystemType& type, const Bipartition& cut) {
    if (psi.dim() != type.total()) throw std::invalid_argument("state dimension mismatch");
    ExactMatrix m(side_total(type, cut.side_a()), side_total(type, cut.side_b()));
    for (std::size_t r = 0; r < psi.dim(); ++r) {
        if (psi.at(r).is_zero()) continue;
        auto digits = index_decode(r, type);
        m.at(side_encode(digits, type, cut.side_a()),
             side_encode(digits, type, cut.side_b())) = psi.at(r);
    }
    return m;
}

std::size_t schmidt_rank(const StateVector& psi, const SubsystemType& type, const Bipartition& cut) {
    if (psi.is_zero()) throw std::invalid_argument("schmidt rank of zero vector");
    return mat_rank(flatten(psi, type, cut));
}

bool is_product_all_cuts(const StateVector& psi, const SubsystemType& type) {
    if (psi.is_zero()) throw std::invalid_argument("segre test of zero vector");
    if (type.count() == 1) return true;
    for (std::size_t k = 0; k < type.count(); ++k)
        if (schmidt_rank(psi, type, Bipartition::factor_vs_rest(k, type.count())) != 1)
            return false;
    return true;
}

ExactMatrix factor_operator(const SubsystemType& type, const std::vector<ExactMatrix>& per_factor) {
    if (per_factor.size() != type.count())
        throw std::invalid_argument("one operator per factor required");
    for (std::size_t i = 0; i < per_factor.size(); ++i)
        if (per_factor[i].rows() != type.factors()[i] || per_factor[i].cols() != type.factors()[i])
            throw std::invalid_argument("factor operator shape mismatch");
    const std::size_t n = type.total();
    ExactMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        auto row = index_decode(r, type);
        for (std::size_t c = 0; c < n; ++c) {
            auto col = index_decode(c, type);
            CycNum v(1);
            bool zero = false;
            for (std::size_t i = 0; i < type.count() && !zero; ++i) {
                const CycNum& e = per_factor[i].at(row[i], col[i]);
                if (e.is_zero()) zero = true;
                else v *= e;
            }
            if (!zero) out.at(r, c) = std::move(v);
        }
    }
    return out;
}

ExactMatrix factor_permutation_operator(const SubsystemType& type,
                                        const std::vector<std::size_t>& slot_of) {
    const std::size_t s = type.count();
    if (slot_of.size() != s) throw std::invalid_argument("permutation length mismatch");
    std::vector<bool> seen(s, false);
    for (std::size_t i = 0; i < s; ++i) {
        if (slot_of[i] >= s || seen[slot_of[i]])
            throw std::invalid_argument("not a permutation");
        seen[slot_of[i]] = true;
        if (type.factors()[slot_of[i]] != type.factors()[i])
            throw std::invalid_argument("permutation does not preserve dimensions");
    }
    const std::size_t n = type.total();
    ExactMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        auto digits = index_decode(r, type);
        std::vector<std::size_t> moved(s);
        for (std::size_t i = 0; i < s; ++i) moved[slot_of[i]] = digits[i];
        out.at(index_encode(moved, type), r) = CycNum(1);
    }
    return out;
}

}  // namespace entgeo
