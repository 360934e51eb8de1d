#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "gon/numeric.hpp"

namespace gon {

template <class S>
using vec = std::vector<S>;

template <class S>
class matrix {
  public:
    matrix() = default;
    matrix(int rows, int cols) : r_(rows), c_(cols), a_((size_t)rows * cols, S(0)) {}
    matrix(std::initializer_list<std::initializer_list<S>> rows) {
        r_ = (int)rows.size();
        c_ = r_ ? (int)rows.begin()->size() : 0;
        a_.reserve((size_t)r_ * c_);
        for (auto& row : rows) {
            if ((int)row.size() != c_) throw dimension_mismatch("matrix: ragged initializer");
            for (auto& x : row) a_.push_back(x);
        }
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    S& operator()(int i, int j) { return a_[(size_t)i * c_ + j]; }
    const S& operator()(int i, int j) const { return a_[(size_t)i * c_ + j]; }

    vec<S> row(int i) const {
        vec<S> out(c_);
        for (int j = 0; j < c_; ++j) out[j] = (*this)(i, j);
        return out;
    }
    void set_row(int i, const vec<S>& v) {
        for (int j = 0; j < c_; ++j) (*this)(i, j) = v[j];
    }

    static matrix identity(int n) {
        matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    bool operator==(const matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

  private:
    int r_ = 0, c_ = 0;
    std::vector<S> a_;
};

template <class S>
matrix<S> transpose(const matrix<S>& m) {
    matrix<S> t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

template <class S>
matrix<S> matmul(const matrix<S>& a, const matrix<S>& b) {
    if (a.cols() != b.rows()) throw dimension_mismatch("matmul: shape mismatch");
    matrix<S> c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const S& aik = a(i, k);
            if (aik == S(0)) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

// row vector times matrix
template <class S>
vec<S> vecmat(const vec<S>& v, const matrix<S>& m) {
    if ((int)v.size() != m.rows()) throw dimension_mismatch("vecmat: shape mismatch");
    vec<S> out(m.cols(), S(0));
    for (int i = 0; i < m.rows(); ++i) {
        if (v[i] == S(0)) continue;
        for (int j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
    }
    return out;
}

template <class S>
S dot(const vec<S>& a, const vec<S>& b) {
    if (a.size() != b.size()) throw dimension_mismatch("dot: length mismatch");
    S s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

template <class S>
S norm2_sq(const vec<S>& a) {
    return dot(a, a);
}

template <class S>
vec<S> scale_vec(const vec<S>& a, const S& t) {
    vec<S> out(a);
    for (auto& x : out) x *= t;
    return out;
}

template <class S>
matrix<S> scale_mat(const matrix<S>& m, const S& t) {
    matrix<S> out(m);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) *= t;
    return out;
}

// Determinant of an integer matrix, fraction-free (Bareiss).
inline bigint det_bareiss(matrix<bigint> m) {
    int n = m.rows();
    if (n != m.cols()) throw dimension_mismatch("det_bareiss: not square");
    bigint prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

// Scale each row of a rational matrix to integers; returns the integer matrix
// and per-row multipliers.
inline std::pair<matrix<bigint>, std::vector<bigint>> clear_denominators(const matrix<rat>& m) {
    matrix<bigint> z(m.rows(), m.cols());
    std::vector<bigint> mult(m.rows(), 1);
    for (int i = 0; i < m.rows(); ++i) {
        bigint l = 1;
        for (int j = 0; j < m.cols(); ++j) l = lcm(l, denominator(m(i, j)));
        mult[i] = l;
        for (int j = 0; j < m.cols(); ++j) {
            rat v = m(i, j) * rat(l);
            z(i, j) = numerator(v);
        }
    }
    return {z, mult};
}

template <class S>
S det(const matrix<S>& m) {
    int n = m.rows();
    if (n != m.cols()) throw dimension_mismatch("det: not square");
    if constexpr (std::is_same_v<S, rat>) {
        auto [z, mult] = clear_denominators(m);
        bigint d = det_bareiss(std::move(z));
        rat out(d);
        for (auto& f : mult) out /= rat(f);
        return out;
    } else {
        matrix<S> a = m;
        S d(1);
        for (int k = 0; k < n; ++k) {
            int p = k;
            for (int i = k + 1; i < n; ++i)
                if (abs_val(a(i, k)) > abs_val(a(p, k))) p = i;
            if (a(p, k) == S(0)) return S(0);
            if (p != k) {
                for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
                d = -d;
            }
            d *= a(k, k);
            for (int i = k + 1; i < n; ++i) {
                S f = a(i, k) / a(k, k);
                for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            }
        }
        return d;
    }
}

template <class S>
matrix<S> inverse(const matrix<S>& m) {
    int n = m.rows();
    if (n != m.cols()) throw dimension_mismatch("inverse: not square");
    matrix<S> a = m, inv = matrix<S>::identity(n);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        if constexpr (is_exact_v<S>) {
            for (int i = k; i < n; ++i)
                if (a(i, k) != S(0)) { p = i; break; }
        } else {
            p = k;
            for (int i = k + 1; i < n; ++i)
                if (abs_val(a(i, k)) > abs_val(a(p, k))) p = i;
            if (a(p, k) == S(0)) p = -1;
        }
        if (p < 0) throw invalid_lattice("inverse: singular matrix");
        if (p != k)
            for (int j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        S piv = a(k, k);
        for (int j = 0; j < n; ++j) {
            a(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || a(i, k) == S(0)) continue;
            S f = a(i, k);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

// Rank of an integer matrix (fraction-free elimination, exact).
inline int rank_int(matrix<bigint> m) {
    int rows = m.rows(), cols = m.cols();
    int rank = 0;
    int col = 0;
    for (int row = 0; row < rows && col < cols; ++col) {
        int p = -1;
        for (int i = row; i < rows; ++i)
            if (m(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < cols; ++j) std::swap(m(row, j), m(p, j));
        for (int i = row + 1; i < rows; ++i) {
            if (m(i, col) == 0) continue;
            bigint g   = gcd(m(i, col), m(row, col));
            bigint fi  = m(row, col) / g;
            bigint fr  = m(i, col) / g;
            for (int j = col; j < cols; ++j) m(i, j) = m(i, j) * fi - m(row, j) * fr;
        }
        ++row;
        ++rank;
    }
    return rank;
}

// LDL^T of a symmetric positive-definite matrix: G = L D L^T with unit lower
// triangular L. Returns (L, diag of D). Throws if a pivot is not positive.
template <class S>
std::pair<matrix<S>, vec<S>> ldl(const matrix<S>& g) {
    int n = g.rows();
    matrix<S> l = matrix<S>::identity(n);
    vec<S> d(n, S(0));
    for (int j = 0; j < n; ++j) {
        S dj = g(j, j);
        for (int k = 0; k < j; ++k) dj -= l(j, k) * l(j, k) * d[k];
        if (dj <= S(0)) throw invalid_lattice("ldl: matrix not positive definite");
        d[j] = dj;
        for (int i = j + 1; i < n; ++i) {
            S v = g(i, j);
            for (int k = 0; k < j; ++k) v -= l(i, k) * l(j, k) * d[k];
            l(i, j) = v / dj;
        }
    }
    return {l, d};
}

} // namespace gon
