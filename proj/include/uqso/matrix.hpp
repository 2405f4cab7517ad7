#pragma once

/**
 * @file matrix.hpp
 * @brief Dense exact matrices over the Gaussian rationals, with the kernel /
 *        rank / span machinery used for eigenspaces, intertwiners and
 *        commutants. Sizes stay at desk scale, so everything is plain
 *        Gauss-Jordan over the exact field.
 */

#include <uqso/scalar.hpp>

#include <cassert>
#include <utility>
#include <vector>

namespace uqso {

using Vector = std::vector<Scalar>;

inline bool is_zero_vector(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
        return m;
    }
    static Matrix zero(int n) { return Matrix(n, n); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Scalar& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int t = 0; t < cols_; ++t) {
                const Scalar& x = (*this)(i, t);
                if (x.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const Scalar& y = o(t, j);
                    if (!y.is_zero()) r(i, j) += x * y;
                }
            }
        return r;
    }

    friend Matrix operator*(const Scalar& c, const Matrix& m) {
        Matrix r = m;
        for (auto& x : r.a_) x = c * x;
        return r;
    }

    Vector operator*(const Vector& v) const {
        if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("matrix*vector shape");
        Vector r(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Scalar trace() const {
        assert(rows_ == cols_);
        Scalar t;
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_diagonal() const {
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (i != j && !(*this)(i, j).is_zero()) return false;
        return true;
    }

    /// If the matrix equals c*I, returns c.
    std::optional<Scalar> as_scalar_multiple_of_identity() const {
        if (rows_ != cols_ || rows_ == 0) return std::nullopt;
        Scalar c = (*this)(0, 0);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                if (i == j && (*this)(i, j) != c) return std::nullopt;
                if (i != j && !(*this)(i, j).is_zero()) return std::nullopt;
            }
        return c;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shape mismatch");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------
// Gauss-Jordan machinery
// ---------------------------------------------------------------------------

/// Reduces rows in place; returns pivot column indices.
inline std::vector<int> row_reduce(std::vector<Vector>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const int C = static_cast<int>(rows[0].size());
    const int R = static_cast<int>(rows.size());
    int r = 0;
    for (int c = 0; c < C && r < R; ++c) {
        int piv = -1;
        for (int i = r; i < R; ++i)
            if (!rows[i][c].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        Scalar inv = Scalar(1) / rows[r][c];
        for (auto& x : rows[r]) x = inv * x;
        for (int i = 0; i < R; ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Scalar f = rows[i][c];
            for (int j = 0; j < C; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank_of_rows(std::vector<Vector> rows) {
    return static_cast<int>(row_reduce(rows).size());
}

inline int rank(const Matrix& m) {
    std::vector<Vector> rows;
    rows.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Vector row(m.cols());
        for (int j = 0; j < m.cols(); ++j) row[j] = m(i, j);
        rows.push_back(std::move(row));
    }
    return rank_of_rows(std::move(rows));
}

/// Basis of { x : M x = 0 }.
inline std::vector<Vector> kernel(const Matrix& m) {
    std::vector<Vector> rows;
    rows.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Vector row(m.cols());
        for (int j = 0; j < m.cols(); ++j) row[j] = m(i, j);
        rows.push_back(std::move(row));
    }
    std::vector<int> pivots = row_reduce(rows);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (int fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        Vector v(m.cols());
        v[fc] = Scalar(1);
        for (size_t ri = 0; ri < pivots.size(); ++ri) v[pivots[ri]] = -rows[ri][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Columns of `span` form a generating set; expresses v in that span if
/// possible (coordinates returned), else nullopt.
inline std::optional<Vector> coordinates_in_span(const std::vector<Vector>& span, const Vector& v) {
    const int d = static_cast<int>(v.size());
    const int k = static_cast<int>(span.size());
    if (k == 0) return is_zero_vector(v) ? std::optional<Vector>(Vector{}) : std::nullopt;
    // solve span-matrix * x = v by eliminating the augmented system
    std::vector<Vector> rows(d, Vector(k + 1));
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < k; ++c) rows[r][c] = span[c][r];
        rows[r][k] = v[r];
    }
    std::vector<int> pivots = row_reduce(rows);
    for (int c : pivots)
        if (c == k) return std::nullopt;  // inconsistent
    Vector x(k);
    for (size_t ri = 0; ri < pivots.size(); ++ri) x[pivots[ri]] = rows[ri][k];
    return x;
}

inline bool in_span(const std::vector<Vector>& span, const Vector& v) {
    return coordinates_in_span(span, v).has_value();
}

/// The matrix of M restricted to an exactly invariant subspace, in the
/// coordinates of `basis`. Throws if the subspace is not invariant.
inline Matrix restrict_to_subspace(const Matrix& m, const std::vector<Vector>& basis) {
    const int k = static_cast<int>(basis.size());
    Matrix r(k, k);
    for (int c = 0; c < k; ++c) {
        Vector img = m * basis[c];
        auto coords = coordinates_in_span(basis, img);
        if (!coords) throw Error("restrict_to_subspace: subspace not invariant");
        for (int t = 0; t < k; ++t) r(t, c) = (*coords)[t];
    }
    return r;
}

/// Basis of { X : A_j X = X B_j for all j }. With A == B this is the
/// commutant; its dimension is 1 exactly when the family acts irreducibly.
inline std::vector<Matrix> intertwiner_space(const std::vector<Matrix>& as,
                                             const std::vector<Matrix>& bs) {
    assert(as.size() == bs.size());
    if (as.empty()) return {};
    const int d1 = as[0].rows(), d2 = bs[0].rows();
    // unknowns X (d1 x d2), row-major
    std::vector<Vector> rows;
    for (size_t t = 0; t < as.size(); ++t) {
        const Matrix& A = as[t];
        const Matrix& B = bs[t];
        for (int r = 0; r < d1; ++r)
            for (int c = 0; c < d2; ++c) {
                Vector row(static_cast<size_t>(d1) * d2);
                for (int s = 0; s < d1; ++s) row[static_cast<size_t>(s) * d2 + c] += A(r, s);
                for (int s = 0; s < d2; ++s) row[static_cast<size_t>(r) * d2 + s] -= B(s, c);
                rows.push_back(std::move(row));
            }
    }
    // kernel of the stacked system
    std::vector<int> pivots = row_reduce(rows);
    std::vector<bool> is_pivot(static_cast<size_t>(d1) * d2, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Matrix> basis;
    for (int fc = 0; fc < d1 * d2; ++fc) {
        if (is_pivot[fc]) continue;
        Vector v(static_cast<size_t>(d1) * d2);
        v[fc] = Scalar(1);
        for (size_t ri = 0; ri < pivots.size(); ++ri) v[pivots[ri]] = -rows[ri][fc];
        Matrix X(d1, d2);
        for (int r = 0; r < d1; ++r)
            for (int c = 0; c < d2; ++c) X(r, c) = v[static_cast<size_t>(r) * d2 + c];
        basis.push_back(std::move(X));
    }
    return basis;
}

inline int commutant_dimension(const std::vector<Matrix>& mats) {
    return static_cast<int>(intertwiner_space(mats, mats).size());
}

}  // namespace uqso
