#ifndef BICOHOM_MATRIX_HPP
#define BICOHOM_MATRIX_HPP

#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "bicohom/errors.hpp"
#include "bicohom/rational.hpp"

namespace bicohom {

/**
 * Sparse rational matrix acting on coordinate columns.
 *
 * Only nonzero entries are stored; a matrix with zero rows or zero columns
 * is a legal map to/from the zero space. All reductions below use the
 * reduced row echelon form with the smallest-index pivot rule, which is
 * unique, so every derived basis is deterministic down to the bit level.
 */
class Matrix {
public:
    using EntryMap = std::map<std::pair<int, int>, Rational>;

    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
        const int r = static_cast<int>(rows.size());
        int c = 0;
        for (const auto& row : rows) c = std::max(c, static_cast<int>(row.size()));
        Matrix m(r, c);
        int i = 0;
        for (const auto& row : rows) {
            int j = 0;
            for (const auto& v : row) m.set(i, j++, v);
            ++i;
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }
    const EntryMap& entries() const { return entries_; }

    const Rational& at(int r, int c) const {
        check_bounds(r, c);
        static const Rational zero{};
        auto it = entries_.find({r, c});
        return it == entries_.end() ? zero : it->second;
    }

    void set(int r, int c, const Rational& v) {
        check_bounds(r, c);
        if (v == 0) {
            entries_.erase({r, c});
        } else {
            entries_[{r, c}] = v;
        }
    }

    void add_to(int r, int c, const Rational& v) { set(r, c, at(r, c) + v); }

    bool is_zero() const { return entries_.empty(); }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
        return t;
    }

    Matrix operator*(const Matrix& b) const {
        if (cols_ != b.rows_)
            throw DimensionMismatch("matrix product shape mismatch: " + shape_str() + " * " +
                                    b.shape_str());
        // group the right factor by row so the product walks nonzeros only
        std::vector<std::vector<std::pair<int, Rational>>> brow(b.rows_);
        for (const auto& [rc, v] : b.entries_) brow[rc.first].emplace_back(rc.second, v);
        Matrix out(rows_, b.cols_);
        for (const auto& [rc, va] : entries_) {
            for (const auto& [j, vb] : brow[rc.second]) out.add_to(rc.first, j, va * vb);
        }
        return out;
    }

    Matrix operator+(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw DimensionMismatch("matrix sum shape mismatch");
        Matrix out = *this;
        for (const auto& [rc, v] : b.entries_) out.add_to(rc.first, rc.second, v);
        return out;
    }

    Matrix column(int j) const {
        check_bounds(0, j, /*allow_zero_rows=*/true);
        Matrix out(rows_, 1);
        for (const auto& [rc, v] : entries_)
            if (rc.second == j) out.set(rc.first, 0, v);
        return out;
    }

    Matrix select_columns(const std::vector<int>& idx) const {
        Matrix out(rows_, static_cast<int>(idx.size()));
        for (int j = 0; j < static_cast<int>(idx.size()); ++j) {
            for (const auto& [rc, v] : entries_)
                if (rc.second == idx[j]) out.set(rc.first, j, v);
        }
        return out;
    }

    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

private:
    void check_bounds(int r, int c, bool allow_zero_rows = false) const {
        if (r < 0 || c < 0 || (!allow_zero_rows && r >= rows_) || c >= cols_ ||
            (allow_zero_rows && rows_ == 0 && r > 0))
            throw DimensionMismatch("matrix index (" + std::to_string(r) + "," +
                                    std::to_string(c) + ") out of " + shape_str());
    }

    int rows_ = 0;
    int cols_ = 0;
    EntryMap entries_;
};

/// A above B. Requires equal column counts.
inline Matrix stack_vertical(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols())
        throw DimensionMismatch("stack_vertical: " + a.shape_str() + " over " + b.shape_str());
    Matrix out(a.rows() + b.rows(), a.cols());
    for (const auto& [rc, v] : a.entries()) out.set(rc.first, rc.second, v);
    for (const auto& [rc, v] : b.entries()) out.set(a.rows() + rc.first, rc.second, v);
    return out;
}

/// A left of B. Requires equal row counts.
inline Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows())
        throw DimensionMismatch("hstack: " + a.shape_str() + " beside " + b.shape_str());
    Matrix out(a.rows(), a.cols() + b.cols());
    for (const auto& [rc, v] : a.entries()) out.set(rc.first, rc.second, v);
    for (const auto& [rc, v] : b.entries()) out.set(rc.first, a.cols() + rc.second, v);
    return out;
}

namespace detail {

/// Reduced row echelon form. Only the pivot rows are kept.
struct EchelonForm {
    int cols = 0;
    std::vector<std::map<int, Rational>> row;  // row[i] sparse, row i has pivot pivot_cols[i]
    std::vector<int> pivot_cols;               // strictly ascending

    int rank() const { return static_cast<int>(pivot_cols.size()); }
    Rational entry(int i, int j) const {
        auto it = row[i].find(j);
        return it == row[i].end() ? Rational(0) : it->second;
    }
};

// Models stay tiny most of the time; below this edge length a dense
// elimination is used, above it a sparse-row one. Both compute the same
// (unique) reduced echelon form.
constexpr int kDenseLimit = 64;

inline EchelonForm rref_dense(const Matrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rational>> d(rows, std::vector<Rational>(cols));
    for (const auto& [rc, v] : m.entries()) d[rc.first][rc.second] = v;

    EchelonForm e;
    e.cols = cols;
    int pr = 0;
    for (int c = 0; c < cols && pr < rows; ++c) {
        int sel = -1;
        for (int r = pr; r < rows; ++r) {
            if (d[r][c] != 0) { sel = r; break; }
        }
        if (sel < 0) continue;
        std::swap(d[pr], d[sel]);
        const Rational piv = d[pr][c];
        for (int j = c; j < cols; ++j) d[pr][j] /= piv;
        for (int r = 0; r < rows; ++r) {
            if (r == pr || d[r][c] == 0) continue;
            const Rational f = d[r][c];
            for (int j = c; j < cols; ++j) d[r][j] -= f * d[pr][j];
        }
        e.pivot_cols.push_back(c);
        ++pr;
    }
    e.row.resize(pr);
    for (int i = 0; i < pr; ++i) {
        for (int j = 0; j < cols; ++j)
            if (d[i][j] != 0) e.row[i][j] = d[i][j];
    }
    return e;
}

inline EchelonForm rref_sparse(const Matrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::map<int, Rational>> d(rows);
    for (const auto& [rc, v] : m.entries()) d[rc.first][rc.second] = v;

    EchelonForm e;
    e.cols = cols;
    int pr = 0;
    for (int c = 0; c < cols && pr < rows; ++c) {
        int sel = -1;
        for (int r = pr; r < rows; ++r) {
            if (d[r].count(c)) { sel = r; break; }
        }
        if (sel < 0) continue;
        std::swap(d[pr], d[sel]);
        const Rational piv = d[pr][c];
        if (piv != 1) {
            for (auto& [j, v] : d[pr]) v /= piv;
        }
        for (int r = 0; r < rows; ++r) {
            if (r == pr) continue;
            auto it = d[r].find(c);
            if (it == d[r].end()) continue;
            const Rational f = it->second;
            for (const auto& [j, v] : d[pr]) {
                auto jt = d[r].find(j);
                if (jt == d[r].end()) {
                    d[r][j] = -f * v;
                } else {
                    jt->second -= f * v;
                    if (jt->second == 0) d[r].erase(jt);
                }
            }
        }
        e.pivot_cols.push_back(c);
        ++pr;
    }
    e.row.assign(d.begin(), d.begin() + pr);
    return e;
}

inline EchelonForm rref(const Matrix& m) {
    if (m.rows() <= kDenseLimit && m.cols() <= kDenseLimit) return rref_dense(m);
    return rref_sparse(m);
}

}  // namespace detail

/// Dimension of the column span.
inline int rank(const Matrix& m) { return detail::rref(m).rank(); }

/**
 * Deterministic basis of {x : Mx = 0}: one column per free column of the
 * echelon form, in ascending free-column order, carrying 1 at the free index
 * and the back-substituted pivot entries elsewhere.
 */
inline Matrix kernel_basis(const Matrix& m) {
    const auto e = detail::rref(m);
    std::vector<int> free_cols;
    {
        std::size_t pi = 0;
        for (int c = 0; c < m.cols(); ++c) {
            if (pi < e.pivot_cols.size() && e.pivot_cols[pi] == c) {
                ++pi;
            } else {
                free_cols.push_back(c);
            }
        }
    }
    Matrix k(m.cols(), static_cast<int>(free_cols.size()));
    for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
        const int f = free_cols[j];
        k.set(f, j, 1);
        for (int i = 0; i < e.rank(); ++i) {
            const Rational v = e.entry(i, f);
            if (v != 0) k.set(e.pivot_cols[i], j, -v);
        }
    }
    return k;
}

/// Pivot columns of M, in ascending index order: a basis of the column span.
inline Matrix image_basis(const Matrix& m) {
    return m.select_columns(detail::rref(m).pivot_cols);
}

/**
 * dim(span S / span T). Requires span T to be contained in span S, which is
 * checked; violation throws SubspaceViolation.
 */
inline int quotient_dim(const Matrix& s, const Matrix& t) {
    if (s.rows() != t.rows())
        throw DimensionMismatch("quotient_dim: ambient mismatch " + s.shape_str() + " vs " +
                                t.shape_str());
    const int rank_s = rank(s);
    if (rank(hstack(s, t)) != rank_s)
        throw SubspaceViolation("quotient_dim: a column of T lies outside span(S)");
    return rank_s - rank(t);
}

/**
 * Columns of S completing a basis of span T to a basis of span S. Pivot
 * selection on [T | S] makes the choice deterministic.
 */
inline Matrix quotient_representatives(const Matrix& s, const Matrix& t) {
    if (s.rows() != t.rows())
        throw DimensionMismatch("quotient_representatives: ambient mismatch");
    const auto e = detail::rref(hstack(t, s));
    if (e.rank() != rank(s))
        throw SubspaceViolation("quotient_representatives: a column of T lies outside span(S)");
    std::vector<int> sel;
    for (int pc : e.pivot_cols)
        if (pc >= t.cols()) sel.push_back(pc - t.cols());
    return s.select_columns(sel);
}

/**
 * The particular solution X of A X = B with all free variables zero.
 * Every column of B must lie in span(A); otherwise SubspaceViolation.
 */
inline Matrix solve_in_span(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("solve_in_span: ambient mismatch");
    const auto e = detail::rref(hstack(a, b));
    for (int pc : e.pivot_cols)
        if (pc >= a.cols())
            throw SubspaceViolation("solve_in_span: right-hand column outside span(A)");
    Matrix x(a.cols(), b.cols());
    for (int i = 0; i < e.rank(); ++i) {
        for (const auto& [j, v] : e.row[i]) {
            if (j >= a.cols()) x.set(e.pivot_cols[i], j - a.cols(), v);
        }
    }
    return x;
}

/// Exact inverse of a square matrix; SubspaceViolation if singular.
inline Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square " + m.shape_str());
    return solve_in_span(m, Matrix::identity(m.rows()));
}

}  // namespace bicohom

#endif  // BICOHOM_MATRIX_HPP
