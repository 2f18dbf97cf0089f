#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace koszul {

template <class F>
using Vec = std::vector<F>;

// Dense matrix over an exact field. All elimination uses the deterministic
// leftmost-pivot rule so every basis this library produces is reproducible.
template <class F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, F(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = F(1);
        return m;
    }
    static Matrix from_rows(const std::vector<Vec<F>>& rows) {
        if (rows.empty()) return Matrix(0, 0);
        Matrix m(int(rows.size()), int(rows[0].size()));
        for (int i = 0; i < m.rows_; ++i) {
            assert(int(rows[i].size()) == m.cols_);
            for (int j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix from_cols(const std::vector<Vec<F>>& cols) {
        if (cols.empty()) return Matrix(0, 0);
        Matrix m(int(cols[0].size()), int(cols.size()));
        for (int j = 0; j < m.cols_; ++j) {
            assert(int(cols[j].size()) == m.rows_);
            for (int i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    F& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const F& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    Vec<F> row(int i) const {
        Vec<F> r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
        return r;
    }
    Vec<F> col(int j) const {
        Vec<F> c(rows_);
        for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }
    void set_col(int j, const Vec<F>& c) {
        assert(int(c.size()) == rows_);
        for (int i = 0; i < rows_; ++i) at(i, j) = c[i];
    }

    bool is_zero() const {
        for (const F& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const F& a = at(i, k);
                if (a.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const F& b = o.at(k, j);
                    if (!b.is_zero()) r.at(i, j) += a * b;
                }
            }
        return r;
    }
    Vec<F> apply(const Vec<F>& v) const {
        if (int(v.size()) != cols_) throw std::invalid_argument("Matrix: dimension mismatch in apply");
        Vec<F> r(rows_, F(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
        return r;
    }
    Matrix operator+(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
        return r;
    }
    Matrix scaled(const F& c) const {
        Matrix r(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    // In-place reduced row echelon form; returns pivot column indices.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int pr = -1;
            for (int i = r; i < rows_; ++i)
                if (!at(i, c).is_zero()) { pr = i; break; }
            if (pr < 0) continue;
            if (pr != r)
                for (int j = 0; j < cols_; ++j) std::swap(at(pr, j), at(r, j));
            F inv = at(r, c).inv();
            for (int j = c; j < cols_; ++j) at(r, j) *= inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == r || at(i, c).is_zero()) continue;
                F f = at(i, c);
                for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        Matrix tmp = *this;
        return int(tmp.rref().size());
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            s += i ? "; " : "[";
            for (int j = 0; j < cols_; ++j) {
                if (j) s += " ";
                s += at(i, j).str();
            }
        }
        return s + "]";
    }

private:
    int rows_, cols_;
    std::vector<F> data_;
};

// Columns form a basis of the null space {v : M v = 0}.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& M) {
    Matrix<F> R = M;
    std::vector<int> pivots = R.rref();
    std::vector<bool> is_pivot(M.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec<F>> cols;
    for (int c = 0; c < M.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec<F> v(M.cols(), F(0));
        v[c] = F(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -R.at(int(r), c);
        cols.push_back(std::move(v));
    }
    if (cols.empty()) return Matrix<F>(M.cols(), 0);
    return Matrix<F>::from_cols(cols);
}

// Solves M x = b exactly; std::nullopt means the system is inconsistent.
template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& M, const Vec<F>& b) {
    if (int(b.size()) != M.rows()) throw std::invalid_argument("solve: dimension mismatch");
    Matrix<F> aug(M.rows(), M.cols() + 1);
    for (int i = 0; i < M.rows(); ++i) {
        for (int j = 0; j < M.cols(); ++j) aug.at(i, j) = M.at(i, j);
        aug.at(i, M.cols()) = b[i];
    }
    std::vector<int> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == M.cols()) return std::nullopt;
    Vec<F> x(M.cols(), F(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(int(r), M.cols());
    return x;
}

// Column-by-column solve; fails if any column of B is outside the image of M.
template <class F>
std::optional<Matrix<F>> solve_matrix(const Matrix<F>& M, const Matrix<F>& B) {
    if (B.rows() != M.rows()) throw std::invalid_argument("solve_matrix: dimension mismatch");
    Matrix<F> X(M.cols(), B.cols());
    for (int j = 0; j < B.cols(); ++j) {
        auto x = solve(M, B.col(j));
        if (!x) return std::nullopt;
        X.set_col(j, *x);
    }
    return X;
}

// Extends the (independent) columns of S to a basis of k^n by appending
// standard basis vectors, scanned in index order.
template <class F>
Matrix<F> complement_basis(const Matrix<F>& S, int n) {
    if (S.cols() > 0 && S.rows() != n) throw std::invalid_argument("complement_basis: bad height");
    if (S.rank() != S.cols()) throw std::invalid_argument("complement_basis: dependent input columns");
    std::vector<Vec<F>> chosen;
    Matrix<F> acc = S;
    int r = S.rank();
    for (int i = 0; i < n && r < n; ++i) {
        Matrix<F> trial(n, acc.cols() + 1);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < acc.cols(); ++b) trial.at(a, b) = acc.at(a, b);
        trial.at(i, acc.cols()) = F(1);
        if (trial.rank() == r + 1) {
            Vec<F> e(n, F(0));
            e[i] = F(1);
            chosen.push_back(std::move(e));
            acc = trial;
            ++r;
        }
    }
    if (chosen.empty()) return Matrix<F>(n, 0);
    return Matrix<F>::from_cols(chosen);
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& M) {
    if (M.rows() != M.cols()) return std::nullopt;
    return solve_matrix(M, Matrix<F>::identity(M.rows()));
}

// Quotient of k^n by the row space of a spanning set. The surviving
// coordinates are the non-pivot columns of the RREF (leftmost-pivot rule), so
// quotient bases are canonical. coords() reduces a vector mod the subspace and
// reads off the free coordinates; lift() returns the standard representative.
template <class F>
class QuotientSpace {
public:
    QuotientSpace() : n_(0) {}
    QuotientSpace(Matrix<F> spanning_rows, int n) : n_(n), rref_(std::move(spanning_rows)) {
        if (rref_.cols() != n && rref_.rows() > 0)
            throw std::invalid_argument("QuotientSpace: width mismatch");
        if (rref_.rows() == 0) rref_ = Matrix<F>(0, n);
        pivots_ = rref_.rref();
        std::vector<bool> is_pivot(n, false);
        for (int c : pivots_) is_pivot[c] = true;
        for (int c = 0; c < n; ++c)
            if (!is_pivot[c]) free_.push_back(c);
    }

    int ambient_dim() const { return n_; }
    int dim() const { return int(free_.size()); }
    int subspace_dim() const { return int(pivots_.size()); }
    const std::vector<int>& free_coords() const { return free_; }

    Vec<F> coords(Vec<F> v) const {
        assert(int(v.size()) == n_);
        for (size_t r = 0; r < pivots_.size(); ++r) {
            const F& f = v[pivots_[r]];
            if (f.is_zero()) continue;
            F c = f;
            for (int j = 0; j < n_; ++j)
                if (!rref_.at(int(r), j).is_zero()) v[j] -= c * rref_.at(int(r), j);
        }
        Vec<F> out(free_.size());
        for (size_t k = 0; k < free_.size(); ++k) out[k] = v[free_[k]];
        return out;
    }

    Vec<F> lift(int k) const {
        Vec<F> v(n_, F(0));
        v[free_[k]] = F(1);
        return v;
    }

    // Canonical RREF rows of the subspace, for subspace-equality tests.
    const Matrix<F>& subspace_rref() const { return rref_; }

    bool same_subspace(const QuotientSpace& o) const {
        if (n_ != o.n_ || pivots_.size() != o.pivots_.size()) return false;
        for (int r = 0; r < int(pivots_.size()); ++r)
            for (int j = 0; j < n_; ++j)
                if (rref_.at(r, j) != o.rref_.at(r, j)) return false;
        return true;
    }

private:
    int n_;
    Matrix<F> rref_;  // trimmed to nonzero rows below
    std::vector<int> pivots_;
    std::vector<int> free_;
};

}  // namespace koszul
