#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "repdim/scalar.hpp"

namespace repdim {

using Vec = std::vector<Scalar>;

// Dense matrix over an exact field. Pivoting is deterministic everywhere
// (leftmost nonzero column, topmost row), so every basis computed downstream
// is reproducible.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, FieldSpec f)
        : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar(f)) {}

    static Matrix identity(std::size_t n, FieldSpec f);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols, FieldSpec f);
    static Matrix from_cols(const std::vector<Vec>& cols, std::size_t rows, FieldSpec f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    FieldSpec field() const { return field_; }

    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;

    Matrix operator*(const Matrix& o) const;
    Vec apply(const Vec& v) const;  // matrix * column vector
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;
    bool is_zero() const;
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    std::size_t rows_, cols_;
    FieldSpec field_;
    std::vector<Scalar> a_;
};

struct RrefResult {
    Matrix rref;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

RrefResult rref(const Matrix& m);
std::size_t rank_of(const Matrix& m);
std::vector<Vec> kernel_basis(const Matrix& m);
std::optional<Vec> solve_linear(const Matrix& a, const Vec& b);
std::optional<Matrix> matrix_inverse(const Matrix& m);

// Incrementally maintained reduced row echelon span; the canonical form for
// every subspace the library manipulates.
class RowSpace {
public:
    RowSpace(std::size_t cols, FieldSpec f) : cols_(cols), field_(f) {}

    // Reduces v against the current rows; inserts the remainder if nonzero.
    // Returns true when the rank grew.
    bool add(Vec v);
    // Normal form of v modulo the span.
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    bool has_pivot(std::size_t col) const;

private:
    std::size_t cols_;
    FieldSpec field_;
    std::vector<Vec> rows_;            // reduced, sorted by pivot column
    std::vector<std::size_t> pivots_;  // pivot column of each row
};

// Coordinates of vectors with respect to a fixed independent family.
class CoordSolver {
public:
    explicit CoordSolver(const std::vector<Vec>& basis, std::size_t ambient, FieldSpec f);
    // Coordinates x with sum_i x_i basis_i = v; throws if v is outside the span.
    Vec coords(const Vec& v) const;
    std::size_t size() const { return basis_cols_.cols(); }

private:
    Matrix basis_cols_;
    Matrix reduced_;                    // rref of [basis | I]
    std::vector<std::size_t> pivot_cols_;
};

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Scalar& c);
bool vec_is_zero(const Vec& v);

}  // namespace repdim
