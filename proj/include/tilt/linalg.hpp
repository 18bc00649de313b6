#ifndef TILT_LINALG_HPP
#define TILT_LINALG_HPP

#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tilt {

// Dense matrices over the rationals; exact arithmetic only.
using Rational = boost::multiprecision::cpp_rational;

class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, 0) {}

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; i++) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const Rational& operator()(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    RatMatrix operator*(const RatMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        RatMatrix out(rows_, o.cols_);
        for (int i = 0; i < rows_; i++)
            for (int k = 0; k < cols_; k++) {
                const Rational& a = (*this)(i, k);
                if (a == 0) continue;
                for (int j = 0; j < o.cols_; j++) {
                    const Rational& b = o(k, j);
                    if (b != 0) out(i, j) += a * b;
                }
            }
        return out;
    }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    int rank() const {
        RatMatrix m = *this;
        int r = 0;
        for (int c = 0; c < m.cols_ && r < m.rows_; c++) {
            int p = -1;
            for (int i = r; i < m.rows_; i++)
                if (m(i, c) != 0) { p = i; break; }
            if (p == -1) continue;
            m.swap_rows(p, r);
            Rational inv = 1 / m(r, c);
            for (int j = c; j < m.cols_; j++) m(r, j) *= inv;
            for (int i = 0; i < m.rows_; i++) {
                if (i == r || m(i, c) == 0) continue;
                Rational f = m(i, c);
                for (int j = c; j < m.cols_; j++) m(i, j) -= f * m(r, j);
            }
            r++;
        }
        return r;
    }

    // Basis of { x : A x = 0 } as matrix columns (cols() x nullity).
    RatMatrix kernel() const {
        RatMatrix m = *this;
        std::vector<int> pivot_col;
        int r = 0;
        for (int c = 0; c < m.cols_ && r < m.rows_; c++) {
            int p = -1;
            for (int i = r; i < m.rows_; i++)
                if (m(i, c) != 0) { p = i; break; }
            if (p == -1) continue;
            m.swap_rows(p, r);
            Rational inv = 1 / m(r, c);
            for (int j = c; j < m.cols_; j++) m(r, j) *= inv;
            for (int i = 0; i < m.rows_; i++) {
                if (i == r || m(i, c) == 0) continue;
                Rational f = m(i, c);
                for (int j = c; j < m.cols_; j++) m(i, j) -= f * m(r, j);
            }
            pivot_col.push_back(c);
            r++;
        }
        std::vector<char> is_pivot(m.cols_, 0);
        for (int c : pivot_col) is_pivot[c] = 1;
        RatMatrix out(cols_, cols_ - r);
        int k = 0;
        for (int c = 0; c < m.cols_; c++) {
            if (is_pivot[c]) continue;
            out(c, k) = 1;
            for (int i = 0; i < r; i++) out(pivot_col[i], k) = -m(i, c);
            k++;
        }
        return out;
    }

    // Surjection p with kernel equal to the column space of this matrix:
    // p has shape (rows - rank) x rows and p * this == 0, full row rank.
    RatMatrix cokernel_projection() const {
        // row-reduce the transpose to find a basis of the row space of A^T
        // (= column space of A) in echelon form, then read off a complement
        RatMatrix m(cols_, rows_);
        for (int i = 0; i < rows_; i++)
            for (int j = 0; j < cols_; j++) m(j, i) = (*this)(i, j);
        std::vector<int> pivot_col;
        int r = 0;
        for (int c = 0; c < m.cols_ && r < m.rows_; c++) {
            int p = -1;
            for (int i = r; i < m.rows_; i++)
                if (m(i, c) != 0) { p = i; break; }
            if (p == -1) continue;
            m.swap_rows(p, r);
            Rational inv = 1 / m(r, c);
            for (int j = c; j < m.cols_; j++) m(r, j) *= inv;
            for (int i = 0; i < m.rows_; i++) {
                if (i == r || m(i, c) == 0) continue;
                Rational f = m(i, c);
                for (int j = c; j < m.cols_; j++) m(i, j) -= f * m(r, j);
            }
            pivot_col.push_back(c);
            r++;
        }
        // column space of A = span of rows 0..r-1 of m (as vectors in k^rows_),
        // reduced echelon with pivots at pivot_col. The quotient map sends
        // x to its non-pivot coordinates after subtracting the pivot part.
        std::vector<char> is_pivot(rows_, 0);
        for (int c : pivot_col) is_pivot[c] = 1;
        RatMatrix p(rows_ - r, rows_);
        int k = 0;
        for (int c = 0; c < rows_; c++) {
            if (is_pivot[c]) continue;
            p(k, c) = 1;
            for (int i = 0; i < r; i++) p(k, pivot_col[i]) = -m(i, c);
            k++;
        }
        return p;
    }

    // Scale every row by a positive rational so entries become coprime
    // integers (basis change only; keeps entries small).
    void normalize_rows() {
        namespace mp = boost::multiprecision;
        for (int i = 0; i < rows_; i++) {
            mp::cpp_int g = 0, l = 1;
            for (int j = 0; j < cols_; j++) {
                const Rational& x = (*this)(i, j);
                if (x == 0) continue;
                g = mp::gcd(g, mp::numerator(x));
                l = mp::lcm(l, mp::denominator(x));
            }
            if (g == 0) continue;
            Rational f(l, g);
            for (int j = 0; j < cols_; j++) (*this)(i, j) *= f;
        }
    }

    void normalize_cols() {
        namespace mp = boost::multiprecision;
        for (int j = 0; j < cols_; j++) {
            mp::cpp_int g = 0, l = 1;
            for (int i = 0; i < rows_; i++) {
                const Rational& x = (*this)(i, j);
                if (x == 0) continue;
                g = mp::gcd(g, mp::numerator(x));
                l = mp::lcm(l, mp::denominator(x));
            }
            if (g == 0) continue;
            Rational f(l, g);
            for (int i = 0; i < rows_; i++) (*this)(i, j) *= f;
        }
    }

private:
    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols_; j++) std::swap((*this)(a, j), (*this)(b, j));
    }

    int rows_, cols_;
    std::vector<Rational> data_;
};

}  // namespace tilt

#endif
