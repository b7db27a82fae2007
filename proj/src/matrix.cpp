#include "repdim/matrix.hpp"

#include <algorithm>

namespace repdim {

Matrix Matrix::identity(std::size_t n, FieldSpec f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols, FieldSpec f) {
    Matrix m(rows.size(), cols, f);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        check(rows[r].size() == cols, ErrorCode::ShapeMismatch, "row length mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, std::size_t rows, FieldSpec f) {
    Matrix m(rows, cols.size(), f);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        check(cols[c].size() == rows, ErrorCode::ShapeMismatch, "column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m.at(r, c) = cols[c][r];
    }
    return m;
}

Vec Matrix::row(std::size_t r) const {
    Vec v(cols_, Scalar(field_));
    for (std::size_t c = 0; c < cols_; ++c)
        v[c] = at(r, c);
    return v;
}

Vec Matrix::col(std::size_t c) const {
    Vec v(rows_, Scalar(field_));
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = at(r, c);
    return v;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check(cols_ == o.rows_, ErrorCode::ShapeMismatch, "matrix product shape mismatch");
    Matrix r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero())
                    r.at(i, j) += aik * b;
            }
        }
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    check(v.size() == cols_, ErrorCode::ShapeMismatch, "matrix apply shape mismatch");
    Vec r(rows_, Scalar(field_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero())
                r[i] += at(i, j) * v[j];
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    check(rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::ShapeMismatch, "matrix sum shape mismatch");
    Matrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] += o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check(rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::ShapeMismatch, "matrix diff shape mismatch");
    Matrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] -= o.a_[i];
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r(*this);
    for (auto& x : r.a_)
        x *= c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

RrefResult rref(const Matrix& m) {
    RrefResult res;
    res.rref = m;
    Matrix& a = res.rref;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a.at(piv, c).is_zero())
            ++piv;
        if (piv == a.rows())
            continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a.at(piv, j), a.at(r, j));
        Scalar inv = a.at(r, c).inv();
        for (std::size_t j = c; j < a.cols(); ++j)
            a.at(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c).is_zero())
                continue;
            Scalar f = a.at(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                a.at(i, j) -= f * a.at(r, j);
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::size_t rank_of(const Matrix& m) { return rref(m).rank; }

std::vector<Vec> kernel_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : rr.pivot_cols)
        is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc])
            continue;
        Vec v(m.cols(), Scalar(m.field()));
        v[fc] = Scalar::one(m.field());
        for (std::size_t r = 0; r < rr.rank; ++r)
            v[rr.pivot_cols[r]] = -rr.rref.at(r, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve_linear(const Matrix& a, const Vec& b) {
    check(b.size() == a.rows(), ErrorCode::ShapeMismatch, "solve_linear shape mismatch");
    Matrix aug(a.rows(), a.cols() + 1, a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    RrefResult rr = rref(aug);
    for (std::size_t r = 0; r < rr.rank; ++r)
        if (rr.pivot_cols[r] == a.cols())
            return std::nullopt;  // inconsistent
    Vec x(a.cols(), Scalar(a.field()));
    for (std::size_t r = 0; r < rr.rank; ++r)
        x[rr.pivot_cols[r]] = rr.rref.at(r, a.cols());
    return x;
}

std::optional<Matrix> matrix_inverse(const Matrix& m) {
    check(m.rows() == m.cols(), ErrorCode::ShapeMismatch, "inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n, m.field());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar::one(m.field());
    }
    RrefResult rr = rref(aug);
    if (rr.rank < n || (n > 0 && rr.pivot_cols[n - 1] != n - 1))
        return std::nullopt;
    Matrix inv(n, n, m.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.at(i, j) = rr.rref.at(i, n + j);
    return inv;
}

bool RowSpace::add(Vec v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < cols_ && v[p].is_zero())
        ++p;
    if (p == cols_)
        return false;
    Scalar inv = v[p].inv();
    for (std::size_t c = p; c < cols_; ++c)
        v[c] *= inv;
    // back-substitute into existing rows to stay fully reduced
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar f = rows_[r][p];
        if (f.is_zero())
            continue;
        for (std::size_t c = p; c < cols_; ++c)
            rows_[r][c] -= f * v[c];
    }
    auto it = std::upper_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t idx = std::size_t(it - pivots_.begin());
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + std::ptrdiff_t(idx), std::move(v));
    return true;
}

Vec RowSpace::reduce(Vec v) const {
    check(v.size() == cols_, ErrorCode::ShapeMismatch, "RowSpace reduce length mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& f = v[pivots_[r]];
        if (f.is_zero())
            continue;
        Scalar g = f;  // pivot entries are 1
        for (std::size_t c = pivots_[r]; c < cols_; ++c)
            if (!rows_[r][c].is_zero())
                v[c] -= g * rows_[r][c];
    }
    return v;
}

bool RowSpace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool RowSpace::has_pivot(std::size_t col) const {
    return std::binary_search(pivots_.begin(), pivots_.end(), col);
}

CoordSolver::CoordSolver(const std::vector<Vec>& basis, std::size_t ambient, FieldSpec f) {
    basis_cols_ = Matrix::from_cols(basis, ambient, f);
    Matrix aug(ambient, basis.size() + ambient, f);
    for (std::size_t i = 0; i < ambient; ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j)
            aug.at(i, j) = basis_cols_.at(i, j);
        aug.at(i, basis.size() + i) = Scalar::one(f);
    }
    RrefResult rr = rref(aug);
    reduced_ = rr.rref;
    pivot_cols_ = rr.pivot_cols;
    for (std::size_t r = 0; r < basis.size(); ++r)
        check(r < pivot_cols_.size() && pivot_cols_[r] == r, ErrorCode::InvalidArgument,
              "CoordSolver basis not independent");
}

Vec CoordSolver::coords(const Vec& v) const {
    std::size_t n = basis_cols_.cols(), ambient = basis_cols_.rows();
    FieldSpec f = basis_cols_.field();
    // rows 0..n-1 of reduced_ express, per basis vector, the functional picking
    // its coefficient; rows >= n must annihilate v (membership check)
    Vec x(n, Scalar(f));
    for (std::size_t r = 0; r < reduced_.rows(); ++r) {
        Scalar acc(f);
        for (std::size_t i = 0; i < ambient; ++i)
            if (!reduced_.at(r, n + i).is_zero() && !v[i].is_zero())
                acc += reduced_.at(r, n + i) * v[i];
        if (r < n) {
            x[r] = acc;
        } else {
            check(acc.is_zero(), ErrorCode::InvalidArgument, "vector outside basis span");
        }
    }
    // The first n rows reproduce v exactly iff v lies in the span; the check
    // above covers the complement, so x is correct here.
    return x;
}

Vec vec_add(const Vec& a, const Vec& b) {
    check(a.size() == b.size(), ErrorCode::ShapeMismatch, "vector sum length mismatch");
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    check(a.size() == b.size(), ErrorCode::ShapeMismatch, "vector diff length mismatch");
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

Vec vec_scale(const Vec& a, const Scalar& c) {
    Vec r(a);
    for (auto& x : r)
        x *= c;
    return r;
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace repdim
