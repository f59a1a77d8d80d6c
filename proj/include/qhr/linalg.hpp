#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "qhr/errors.hpp"
#include "qhr/exact_matrix.hpp"
#include "qhr/rational.hpp"

namespace qhr {

/// Dense rectangular rational matrix, 0-based; used for coordinate linear algebra.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("dense product shape mismatch");
        DenseMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

namespace detail {

// Rows scaled to integers; rank is unaffected.
inline std::vector<std::vector<Integer>> integer_rows(const DenseMatrix& m) {
    std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
    return a;
}

// Fraction-free elimination; returns rank and the last pivot (the determinant for square full rank).
inline std::pair<std::size_t, Integer> bareiss(std::vector<std::vector<Integer>> a, std::size_t cols, int& sign) {
    const std::size_t rows = a.size();
    std::size_t rank = 0;
    Integer prev = 1;
    sign = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != rank) {
            std::swap(a[p], a[rank]);
            sign = -sign;
        }
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                a[r][k] = a[rank][c] * a[r][k] - a[r][c] * a[rank][k];
                mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return {rank, prev};
}

} // namespace detail

/// Exact rank by fraction-free (Bareiss) elimination.
inline std::size_t rank(const DenseMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    int sign = 1;
    return detail::bareiss(detail::integer_rows(m), m.cols(), sign).first;
}

inline Rational determinant(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
    if (m.rows() == 0) return 1;
    Integer scale = 1;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        scale *= l;
    }
    int sign = 1;
    auto [rk, last] = detail::bareiss(detail::integer_rows(m), m.cols(), sign);
    if (rk < m.rows()) return 0;
    Rational d(last * sign, scale);
    d.canonicalize();
    return d;
}

struct EchelonForm {
    DenseMatrix matrix;               ///< reduced row echelon form
    std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Reduced row echelon form over the rationals.
inline EchelonForm rref(DenseMatrix m) {
    EchelonForm out;
    std::size_t row = 0;
    for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
        std::size_t p = row;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(row, k));
        const Rational inv = 1 / m(row, c);
        for (std::size_t k = c; k < m.cols(); ++k) m(row, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, c) == 0) continue;
            const Rational factor = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= factor * m(row, k);
        }
        out.pivots.push_back(c);
        ++row;
    }
    out.matrix = std::move(m);
    return out;
}

/// Basis of {v : m v = 0}, one vector per free column (1 at that column).
inline std::vector<std::vector<Rational>> nullspace(const DenseMatrix& m) {
    const auto ech = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.matrix(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Throws DomainError when singular.
inline DenseMatrix inverse(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    DenseMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    auto ech = rref(std::move(aug));
    if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1)) throw DomainError("singular matrix");
    DenseMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.matrix(r, n + c);
    return inv;
}

inline DenseMatrix to_dense(const ExactMatrix& m) {
    DenseMatrix d(m.size(), m.size());
    for (const auto& [ix, v] : m.entries()) d(ix.first - 1, ix.second - 1) = v;
    return d;
}

inline ExactMatrix from_dense(const DenseMatrix& d) {
    if (d.rows() != d.cols()) throw DimensionError("from_dense needs a square matrix");
    ExactMatrix m(static_cast<int>(d.rows()));
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c) m.set(int(r) + 1, int(c) + 1, d(r, c));
    return m;
}

inline std::size_t rank(const ExactMatrix& m) { return rank(to_dense(m)); }

inline ExactMatrix inverse(const ExactMatrix& m) { return from_dense(inverse(to_dense(m))); }

/// Stacks matrices as columns of their flattened N*N coordinate vectors.
inline DenseMatrix columns_of(const std::vector<ExactMatrix>& ms, int n) {
    DenseMatrix d(std::size_t(n) * std::size_t(n), ms.size());
    for (std::size_t k = 0; k < ms.size(); ++k)
        for (const auto& [ix, v] : ms[k].entries()) d(std::size_t(ix.first - 1) * n + (ix.second - 1), k) = v;
    return d;
}

} // namespace qhr
