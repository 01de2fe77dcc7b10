#include "entgeo/matrix.hpp"

#include <stdexcept>

namespace entgeo {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = CycNum(1);
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ExactMatrix ExactMatrix::conjugate_transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j).conjugate();
    return t;
}

ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw std::invalid_argument("matrix shape mismatch");
    ExactMatrix out(x.rows_, x.cols_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) out.a_[k] = x.a_[k] + y.a_[k];
    return out;
}

ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw std::invalid_argument("matrix shape mismatch");
    ExactMatrix out(x.rows_, x.cols_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) out.a_[k] = x.a_[k] - y.a_[k];
    return out;
}

ExactMatrix operator*(const CycNum& s, const ExactMatrix& m) {
    ExactMatrix out(m.rows_, m.cols_);
    for (std::size_t k = 0; k < m.a_.size(); ++k) out.a_[k] = s * m.a_[k];
    return out;
}

ExactMatrix mat_mul_serial(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("matrix shape mismatch");
    ExactMatrix out(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            const CycNum& xik = x.at(i, k);
            if (xik.is_zero()) continue;
            for (std::size_t j = 0; j < y.cols(); ++j) {
                if (y.at(k, j).is_zero()) continue;
                out.at(i, j) += xik * y.at(k, j);
            }
        }
    return out;
}

ExactMatrix mat_mul(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("matrix shape mismatch");
    ExactMatrix out(x.rows(), y.cols());
    const long n = static_cast<long>(x.rows());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < x.cols(); ++k) {
            const CycNum& xik = x.at(static_cast<std::size_t>(i), k);
            if (xik.is_zero()) continue;
            for (std::size_t j = 0; j < y.cols(); ++j) {
                if (y.at(k, j).is_zero()) continue;
                out.at(static_cast<std::size_t>(i), j) += xik * y.at(k, j);
            }
        }
    }
    return out;
}

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
    return mat_mul(x, y);
}

std::size_t mat_rank(const ExactMatrix& m) {
    ExactMatrix w = m;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < w.cols() && rank < w.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < w.rows() && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == w.rows()) continue;
        if (pivot != rank)
            for (std::size_t j = col; j < w.cols(); ++j)
                std::swap(w.at(pivot, j), w.at(rank, j));
        const CycNum inv = w.at(rank, col).inverse();
        for (std::size_t i = rank + 1; i < w.rows(); ++i) {
            if (w.at(i, col).is_zero()) continue;
            CycNum f = w.at(i, col) * inv;
            w.at(i, col) = CycNum();
            for (std::size_t j = col + 1; j < w.cols(); ++j)
                w.at(i, j) -= f * w.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

std::optional<CycNum> projective_equal(const ExactMatrix& m, const ExactMatrix& n) {
    if (m.rows() != n.rows() || m.cols() != n.cols())
        throw std::invalid_argument("matrix shape mismatch");
    if (m.is_zero() || n.is_zero())
        throw std::invalid_argument("projective comparison of zero matrix");
    // First nonzero entry of n in row-major order anchors the scalar.
    std::size_t i0 = 0, j0 = 0;
    bool found = false;
    for (std::size_t i = 0; i < n.rows() && !found; ++i)
        for (std::size_t j = 0; j < n.cols() && !found; ++j)
            if (!n.at(i, j).is_zero()) { i0 = i; j0 = j; found = true; }
    if (m.at(i0, j0).is_zero()) return std::nullopt;
    CycNum lambda = m.at(i0, j0) / n.at(i0, j0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != lambda * n.at(i, j)) return std::nullopt;
    return lambda;
}

ExactMatrix kron(const ExactMatrix& x, const ExactMatrix& y) {
    ExactMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
    for (std::size_t a = 0; a < x.rows(); ++a)
        for (std::size_t c = 0; c < x.cols(); ++c) {
            if (x.at(a, c).is_zero()) continue;
            for (std::size_t b = 0; b < y.rows(); ++b)
                for (std::size_t d = 0; d < y.cols(); ++d)
                    out.at(a * y.rows() + b, c * y.cols() + d) = x.at(a, c) * y.at(b, d);
        }
    return out;
}

CycNum determinant(const ExactMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    ExactMatrix w = m;
    const std::size_t n = w.rows();
    CycNum det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return CycNum();
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(w.at(pivot, j), w.at(col, j));
            det = -det;
        }
        det *= w.at(col, col);
        const CycNum inv = w.at(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (w.at(i, col).is_zero()) continue;
            CycNum f = w.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                w.at(i, j) -= f * w.at(col, j);
        }
    }
    return det;
}

ExactMatrix inverse(const ExactMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    ExactMatrix w = m;
    ExactMatrix inv = ExactMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw std::invalid_argument("matrix is singular");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w.at(pivot, j), w.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        const CycNum piv_inv = w.at(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            w.at(col, j) *= piv_inv;
            inv.at(col, j) *= piv_inv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || w.at(i, col).is_zero()) continue;
            CycNum f = w.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                w.at(i, j) -= f * w.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::vector<CycNum> characteristic_polynomial(const ExactMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<CycNum> c(n + 1);
    c[n] = CycNum(1);
    ExactMatrix mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) mk = m * mk;
        CycNum tr;
        for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i);
        c[n - k] = tr / CycNum(-static_cast<long>(k));
        if (k < n) {
            for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += c[n - k];
        }
    }
    return c;
}

}  // namespace entgeo
