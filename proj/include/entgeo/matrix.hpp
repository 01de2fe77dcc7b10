#pragma once

#include "entgeo/cyclotomic.hpp"

#include <optional>
#include <vector>

namespace entgeo {

// Dense matrix over the cyclotomic numbers, row major.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols);  // zero filled

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    CycNum& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const CycNum& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    ExactMatrix transpose() const;
    ExactMatrix conjugate_transpose() const;

    friend ExactMatrix operator+(const ExactMatrix&, const ExactMatrix&);
    friend ExactMatrix operator-(const ExactMatrix&, const ExactMatrix&);
    friend ExactMatrix operator*(const ExactMatrix&, const ExactMatrix&);
    friend ExactMatrix operator*(const CycNum&, const ExactMatrix&);
    friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<CycNum> a_;
};

// Product kernel parallelized over output rows, and the serial reference it
// is tested against.  operator* dispatches to mat_mul.
ExactMatrix mat_mul(const ExactMatrix& x, const ExactMatrix& y);
ExactMatrix mat_mul_serial(const ExactMatrix& x, const ExactMatrix& y);

// Rank by Gaussian elimination with the deterministic pivot rule: scan
// columns left to right, take the first nonzero entry at or below the
// current row.
std::size_t mat_rank(const ExactMatrix& m);

// The unique scalar lambda with m = lambda * n, if one exists.  Both inputs
// must be nonzero of equal shape.
std::optional<CycNum> projective_equal(const ExactMatrix& m, const ExactMatrix& n);

// Kronecker product with row-major index convention (a, b) -> a*rows(y) + b.
ExactMatrix kron(const ExactMatrix& x, const ExactMatrix& y);

CycNum determinant(const ExactMatrix& m);
ExactMatrix inverse(const ExactMatrix& m);  // throws if singular

// Monic characteristic polynomial, coefficients low to high (length n+1),
// computed by the Faddeev-LeVerrier recursion.
std::vector<CycNum> characteristic_polynomial(const ExactMatrix& m);

}  // namespace entgeo
