#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "numeric.hpp"

namespace lozenge {

// Dense matrix over an exact scalar.  Determinants use Bareiss fraction-free
// elimination when the scalar is Integer (exact divisions, no blowup into
// rationals) and ordinary Gaussian elimination when the scalar is a field.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(long rows, long cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), a_(checked_size(rows, cols), fill) {}

    static Matrix from(long rows, long cols, const std::function<T(long, long)>& entry) {
        Matrix m(rows, cols);
        for (long i = 0; i < rows; ++i)
            for (long j = 0; j < cols; ++j) m.at(i, j) = entry(i, j);
        return m;
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    T& at(long i, long j) {
        check(i, j);
        return a_[static_cast<size_t>(i * cols_ + j)];
    }
    const T& at(long i, long j) const {
        check(i, j);
        return a_[static_cast<size_t>(i * cols_ + j)];
    }

    bool is_square() const { return rows_ == cols_; }

    // determinant; the empty matrix has determinant 1
    T det() const {
        if (!is_square()) throw NotSquare();
        if constexpr (std::is_same_v<T, Integer>)
            return det_bareiss();
        else
            return det_gauss();
    }

    // determinant of the submatrix with the given rows and columns removed
    // (0-based, duplicates rejected).  Removing every row and column of a
    // nonempty matrix yields 0 by convention.
    T minor_det(std::vector<long> drop_rows, std::vector<long> drop_cols) const {
        if (!is_square()) throw NotSquare();
        validate_drops(drop_rows, rows_);
        validate_drops(drop_cols, cols_);
        if (drop_rows.size() != drop_cols.size())
            throw NotSquare("minor_det: unequal numbers of dropped rows and columns");
        if (rows_ > 0 && static_cast<long>(drop_rows.size()) == rows_) return T(0);
        std::vector<long> keep_r = keep(drop_rows, rows_), keep_c = keep(drop_cols, cols_);
        Matrix sub(static_cast<long>(keep_r.size()), static_cast<long>(keep_c.size()));
        for (size_t i = 0; i < keep_r.size(); ++i)
            for (size_t j = 0; j < keep_c.size(); ++j)
                sub.at(static_cast<long>(i), static_cast<long>(j)) = at(keep_r[i], keep_c[j]);
        return sub.det();
    }

private:
    long rows_ = 0, cols_ = 0;
    std::vector<T> a_;

    static size_t checked_size(long r, long c) {
        if (r < 0 || c < 0) throw ParameterOutOfRange("Matrix: negative dimension");
        return static_cast<size_t>(r) * static_cast<size_t>(c);
    }
    void check(long i, long j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw IndexOutOfRange("Matrix: entry index");
    }
    static void validate_drops(std::vector<long>& d, long n) {
        std::sort(d.begin(), d.end());
        for (size_t k = 0; k < d.size(); ++k) {
            if (d[k] < 0 || d[k] >= n) throw IndexOutOfRange("minor_det: index out of range");
            if (k && d[k] == d[k - 1]) throw IndexOutOfRange("minor_det: duplicate index");
        }
    }
    static std::vector<long> keep(const std::vector<long>& drop, long n) {
        std::vector<long> k;
        size_t p = 0;
        for (long i = 0; i < n; ++i) {
            if (p < drop.size() && drop[p] == i)
                ++p;
            else
                k.push_back(i);
        }
        return k;
    }

    T det_gauss() const {
        long n = rows_;
        std::vector<T> w = a_;
        auto e = [&](long i, long j) -> T& { return w[static_cast<size_t>(i * n + j)]; };
        T d(1);
        for (long col = 0; col < n; ++col) {
            long piv = -1;
            for (long r = col; r < n; ++r)
                if (!(e(r, col) == T(0))) {
                    piv = r;
                    break;
                }
            if (piv < 0) return T(0);
            if (piv != col) {
                for (long j = col; j < n; ++j) std::swap(e(piv, j), e(col, j));
                d = -d;
            }
            d = d * e(col, col);
            for (long r = col + 1; r < n; ++r) {
                if (e(r, col) == T(0)) continue;
                T f = e(r, col) / e(col, col);
                for (long j = col; j < n; ++j) e(r, j) = e(r, j) - f * e(col, j);
            }
        }
        return d;
    }

    Integer det_bareiss() const {
        long n = rows_;
        std::vector<Integer> w(a_.begin(), a_.end());
        auto e = [&](long i, long j) -> Integer& { return w[static_cast<size_t>(i * n + j)]; };
        Integer prev = 1;
        int sign = 1;
        for (long col = 0; col < n - 1; ++col) {
            long piv = -1;
            for (long r = col; r < n; ++r)
                if (e(r, col) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return 0;
            if (piv != col) {
                for (long j = col; j < n; ++j) std::swap(e(piv, j), e(col, j));
                sign = -sign;
            }
            for (long r = col + 1; r < n; ++r) {
                for (long j = col + 1; j < n; ++j) {
                    Integer t = e(r, j) * e(col, col) - e(r, col) * e(col, j);
                    mpz_divexact(e(r, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                }
                e(r, col) = 0;
            }
            prev = e(col, col);
        }
        return (n == 0) ? Integer(1) : Integer(sign * e(n - 1, n - 1));
    }
};

// Solve A x = rhs by Gauss-Jordan elimination over a field scalar.
// Returns std::nullopt when A is singular.
template <class T>
std::optional<std::vector<T>> solve_linear(Matrix<T> a, std::vector<T> rhs) {
    if (!a.is_square() || static_cast<long>(rhs.size()) != a.rows())
        throw NotSquare("solve_linear: need a square system");
    long n = a.rows();
    for (long col = 0; col < n; ++col) {
        long piv = -1;
        for (long r = col; r < n; ++r)
            if (!(a.at(r, col) == T(0))) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        if (piv != col) {
            for (long j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
            std::swap(rhs[static_cast<size_t>(piv)], rhs[static_cast<size_t>(col)]);
        }
        T inv = T(1) / a.at(col, col);
        for (long j = 0; j < n; ++j) a.at(col, j) = a.at(col, j) * inv;
        rhs[static_cast<size_t>(col)] = rhs[static_cast<size_t>(col)] * inv;
        for (long r = 0; r < n; ++r) {
            if (r == col) continue;
            T f = a.at(r, col);
            if (f == T(0)) continue;
            for (long j = 0; j < n; ++j) a.at(r, j) = a.at(r, j) - f * a.at(col, j);
            rhs[static_cast<size_t>(r)] = rhs[static_cast<size_t>(r)] - f * rhs[static_cast<size_t>(col)];
        }
    }
    return rhs;
}

// Hankel determinant det_{0<=i,j<n} seq[start + i + j]; n = 0 gives 1.
template <class T>
T hankel_det(const std::vector<T>& seq, long n, long start = 0) {
    if (n < 0 || start < 0) throw ParameterOutOfRange("hankel_det: negative size or offset");
    if (n > 0 && static_cast<long>(seq.size()) < start + 2 * n - 1)
        throw IndexOutOfRange("hankel_det: sequence too short");
    Matrix<T> m = Matrix<T>::from(n, n, [&](long i, long j) { return seq[static_cast<size_t>(start + i + j)]; });
    return m.det();
}

} // namespace lozenge
