#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "gon/linalg.hpp"

namespace gon {

// A full-rank lattice given by basis rows a_1..a_n.
template <class S>
class lattice {
  public:
    explicit lattice(matrix<S> basis) : b_(std::move(basis)) {
        if (b_.rows() != b_.cols() || b_.rows() < 1)
            throw invalid_lattice("lattice: basis must be square");
        if (det(b_) == S(0)) throw invalid_lattice("lattice: singular basis");
    }

    int dim() const { return b_.rows(); }
    const matrix<S>& basis() const { return b_; }

  private:
    matrix<S> b_;
};

template <class S>
S determinant(const lattice<S>& l) {
    return abs_val(det(l.basis()));
}

// Reciprocal lattice {x : x.y in Z for all y}: basis rows are the rows of
// the inverse-transpose of the basis matrix.
template <class S>
lattice<S> dual_lattice(const lattice<S>& l) {
    return lattice<S>(transpose(inverse(l.basis())));
}

template <class S>
lattice<S> scale_lattice(const lattice<S>& l, const S& t) {
    return lattice<S>(scale_mat(l.basis(), t));
}

// Row map: new basis rows are old rows times m.
template <class S>
lattice<S> transform_lattice(const lattice<S>& l, const matrix<S>& m) {
    return lattice<S>(matmul(l.basis(), m));
}

template <class T, class S>
lattice<T> convert_lattice(const lattice<S>& l) {
    matrix<T> b(l.dim(), l.dim());
    for (int i = 0; i < l.dim(); ++i)
        for (int j = 0; j < l.dim(); ++j) {
            if constexpr (std::is_same_v<S, rat>)
                b(i, j) = T(numerator(l.basis()(i, j))) / T(denominator(l.basis()(i, j)));
            else
                b(i, j) = T(l.basis()(i, j));
        }
    return lattice<T>(b);
}

// ---------------------------------------------------------------------------
// Hermite normal form
// ---------------------------------------------------------------------------

// Unique HNF basis of the row lattice of g (k x n, full column rank):
// upper triangular, positive diagonal, entries above each pivot reduced
// into [0, pivot).
inline matrix<bigint> hnf_rows(matrix<bigint> g) {
    int k = g.rows(), n = g.cols();
    int prow = 0;
    for (int col = 0; col < n; ++col) {
        // clear below the pivot with Euclidean row steps
        while (true) {
            int best = -1;
            for (int i = prow; i < k; ++i) {
                if (g(i, col) == 0) continue;
                if (best < 0 || abs(g(i, col)) < abs(g(best, col))) best = i;
            }
            if (best < 0) throw invalid_lattice("hnf_rows: rank deficient");
            if (best != prow)
                for (int j = 0; j < n; ++j) std::swap(g(prow, j), g(best, j));
            bool clean = true;
            for (int i = prow + 1; i < k; ++i) {
                if (g(i, col) == 0) continue;
                bigint q = g(i, col) / g(prow, col); // truncated division keeps |rem| < |pivot|
                if (q != 0)
                    for (int j = 0; j < n; ++j) g(i, j) -= q * g(prow, j);
                if (g(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (g(prow, col) < 0)
            for (int j = 0; j < n; ++j) g(prow, j) = -g(prow, j);
        // reduce the entries above the pivot into [0, pivot)
        for (int i = 0; i < prow; ++i) {
            bigint q = g(i, col) / g(prow, col);
            if (g(i, col) - q * g(prow, col) < 0) --q;
            if (q != 0)
                for (int j = 0; j < n; ++j) g(i, j) -= q * g(prow, j);
        }
        ++prow;
        if (prow == k && col + 1 < n) throw invalid_lattice("hnf_rows: rank deficient");
    }
    matrix<bigint> h(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h(i, j) = g(i, j);
    return h;
}

namespace detail {

// Global denominator of a rational matrix. Invariant under unimodular row
// operations, so canonical forms computed through it are basis-independent.
inline bigint common_denominator(const matrix<rat>& m) {
    bigint d = 1;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) d = lcm(d, denominator(m(i, j)));
    return d;
}

inline matrix<bigint> scaled_integer_matrix(const matrix<rat>& m, const bigint& d) {
    matrix<bigint> z(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            rat v = m(i, j) * rat(d);
            z(i, j) = numerator(v);
        }
    return z;
}

} // namespace detail

template <class S>
lattice<S> canonical_form(const lattice<S>& l) {
    if constexpr (!is_exact_v<S>) {
        throw unsupported_exact_op("canonical_form: requires exact rational entries");
    } else {
        bigint d = detail::common_denominator(l.basis());
        matrix<bigint> h = hnf_rows(detail::scaled_integer_matrix(l.basis(), d));
        matrix<rat> b(l.dim(), l.dim());
        for (int i = 0; i < l.dim(); ++i)
            for (int j = 0; j < l.dim(); ++j) b(i, j) = rat(h(i, j), d);
        return lattice<rat>(b);
    }
}

// Lattice generated by an arbitrary stack of rational row generators.
inline lattice<rat> from_generators(const matrix<rat>& gens) {
    bigint d = detail::common_denominator(gens);
    matrix<bigint> h = hnf_rows(detail::scaled_integer_matrix(gens, d));
    int n = gens.cols();
    matrix<rat> b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = rat(h(i, j), d);
    return lattice<rat>(b);
}

template <class S>
bool lattice_equal(const lattice<S>& a, const lattice<S>& b) {
    if (a.dim() != b.dim()) return false;
    return canonical_form(a).basis() == canonical_form(b).basis();
}

// Exact membership test.
inline bool lattice_contains(const lattice<rat>& l, const vec<rat>& x) {
    vec<rat> z = vecmat(x, inverse(l.basis()));
    for (auto& c : z)
        if (denominator(c) != 1) return false;
    return true;
}

// ---------------------------------------------------------------------------
// LLL reduction (Gram-based, works for exact rationals and floating scalars)
// ---------------------------------------------------------------------------

template <class S>
struct lll_result {
    matrix<S> basis;      // reduced rows
    matrix<bigint> u;     // reduced = u * original, u unimodular
};

template <class S>
lll_result<S> lll_reduce_rows(const matrix<S>& basis_in, double delta = 0.99) {
    const int n = basis_in.rows();
    matrix<S> b = basis_in;
    matrix<bigint> u = matrix<bigint>::identity(n);
    const S del = [&] {
        if constexpr (std::is_same_v<S, rat>) return rat((long long)(delta * 1000000), 1000000LL);
        else return S(delta);
    }();

    // Gram-Schmidt data: bn[i] = |b_i*|^2, mu(i,j) for j < i.
    vec<S> bn(n, S(0));
    matrix<S> mu = matrix<S>::identity(n);
    auto recompute_row = [&](int i) {
        for (int j = 0; j < i; ++j) {
            S m = dot(b.row(i), b.row(j));
            for (int l = 0; l < j; ++l) m -= mu(j, l) * mu(i, l) * bn[l];
            mu(i, j) = m / bn[j];
        }
        S v = norm2_sq(b.row(i));
        for (int j = 0; j < i; ++j) v -= mu(i, j) * mu(i, j) * bn[j];
        bn[i] = v;
    };
    for (int i = 0; i < n; ++i) recompute_row(i);

    auto size_reduce = [&](int k, int j) {
        bigint r = nearest_int(mu(k, j));
        if (r == 0) return;
        S rs = from_bigint<S>(r);
        for (int c = 0; c < n; ++c) {
            b(k, c) -= rs * b(j, c);
            u(k, c) -= r * u(j, c);
        }
        for (int l = 0; l < j; ++l) mu(k, l) -= rs * mu(j, l);
        mu(k, j) -= rs;
    };

    int k = 1;
    std::uint64_t guard = 0;
    while (k < n) {
        if (++guard > 50'000'000ULL) throw error("lll: iteration guard tripped");
        for (int j = k - 1; j >= 0; --j) size_reduce(k, j);
        if (bn[k] >= (del - mu(k, k - 1) * mu(k, k - 1)) * bn[k - 1]) {
            ++k;
            continue;
        }
        for (int c = 0; c < n; ++c) {
            std::swap(b(k, c), b(k - 1, c));
            std::swap(u(k, c), u(k - 1, c));
        }
        // O(n) Gram-Schmidt update after swapping rows k-1, k
        S m   = mu(k, k - 1);
        S bp  = bn[k] + m * m * bn[k - 1];
        S mu2 = m * bn[k - 1] / bp;
        bn[k]     = bn[k - 1] * bn[k] / bp;
        bn[k - 1] = bp;
        mu(k, k - 1) = mu2;
        for (int i = k + 1; i < n; ++i) {
            S t = mu(i, k);
            mu(i, k)     = mu(i, k - 1) - m * t;
            mu(i, k - 1) = t + mu2 * mu(i, k);
        }
        for (int j = 0; j < k - 1; ++j) std::swap(mu(k, j), mu(k - 1, j));
        k = std::max(k - 1, 1);
    }
    return {b, u};
}

template <class S>
lattice<S> lll_reduce(const lattice<S>& l, double delta = 0.99) {
    return lattice<S>(lll_reduce_rows(l.basis(), delta).basis);
}

// ---------------------------------------------------------------------------
// Euclidean enumeration
// ---------------------------------------------------------------------------

template <class S>
struct lat_point {
    vec<S> x;                   // coordinates
    S norm_sq;                  // squared Euclidean norm
    std::vector<bigint> coeff;  // coefficients in the lattice's given basis
};

struct enumerate_options {
    std::uint64_t max_points = 10'000'000;
    std::uint64_t max_nodes  = 400'000'000;
    double lll_delta         = 0.99;
};

namespace detail {

// Integer range [lo, hi] with D (z + c)^2 <= rem, widened outward so that
// rounding can only add candidates; every candidate is re-checked exactly
// in the caller's scalar type.
inline std::pair<long long, long long> level_range(double c, double rem, double d) {
    if (rem < 0) return {0, -1};
    double w     = std::sqrt(std::max(rem, 0.0) / d);
    double slack = 1e-9 * (1.0 + std::fabs(c) + w) + 1e-12;
    double lo    = -c - w - slack, hi = -c + w + slack;
    if (lo < -9.1e18 || hi > 9.1e18) throw enumeration_budget("enumerate: coefficient range overflow");
    return {(long long)std::ceil(lo), (long long)std::floor(hi)};
}

} // namespace detail

// All nonzero lattice vectors with ||x|| <= rho, one representative per +-
// pair, sorted by (norm, lexicographic coordinates). Completeness comes from
// the LDL^T bound at every level of the search tree; candidate ranges are
// widened and re-verified, never clipped.
template <class S>
std::vector<lat_point<S>> enumerate_euclidean(const lattice<S>& l, const S& rho,
                                              const enumerate_options& opts = {}) {
    const int n = l.dim();
    if (rho <= S(0)) return {};
    auto red = lll_reduce_rows(l.basis(), opts.lll_delta);
    matrix<S> g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) g(i, j) = g(j, i) = dot(red.basis.row(i), red.basis.row(j));
    auto [lmat, d] = ldl(g);
    const S rho_sq = rho * rho;
    // ||z B||^2 = sum_j d_j (z_j + sum_{i>j} z_i l_{ij})^2
    std::vector<long long> z(n, 0);
    std::vector<lat_point<S>> out;
    std::uint64_t nodes = 0, points = 0;

    // margin for inexact scalars: boundary points must not be lost to roundoff
    const S accept_bound = [&] {
        if constexpr (is_exact_v<S>) return rho_sq;
        else return rho_sq * (S(1) + S(1e-12));
    }();

    auto emit = [&](const S& nsq) {
        if (++points > opts.max_points) throw enumeration_budget("enumerate: point budget exceeded");
        lat_point<S> p;
        p.norm_sq = nsq;
        p.coeff.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            if (z[i] == 0) continue;
            for (int c = 0; c < n; ++c) p.coeff[c] += bigint(z[i]) * red.u(i, c);
        }
        p.x.assign(n, S(0));
        for (int i = 0; i < n; ++i) {
            if (z[i] == 0) continue;
            S zs = from_bigint<S>(bigint(z[i]));
            for (int c = 0; c < n; ++c) p.x[c] += zs * red.basis(i, c);
        }
        out.push_back(std::move(p));
    };

    // DFS over levels n-1 .. 0; zero_above means all chosen higher
    // coefficients vanish, in which case only z_j >= 0 is visited (one
    // representative per +- class).
    auto dfs = [&](auto&& self, int j, const S& partial, bool zero_above) -> void {
        S c(0);
        for (int i = j + 1; i < n; ++i)
            if (z[i] != 0) c += from_bigint<S>(bigint(z[i])) * lmat(i, j);
        auto [lo, hi] = detail::level_range(to_double(c), to_double(S(accept_bound - partial)),
                                            to_double(d[j]));
        if (zero_above && lo < 0) lo = 0;
        for (long long t = lo; t <= hi; ++t) {
            if (++nodes > opts.max_nodes) throw enumeration_budget("enumerate: node budget exceeded");
            S off  = from_bigint<S>(bigint(t)) + c;
            S term = d[j] * off * off;
            S np   = partial + term;
            if (np > accept_bound) continue;
            z[j] = t;
            if (j == 0) {
                if (!(zero_above && t == 0)) emit(np);
            } else {
                self(self, j - 1, np, zero_above && t == 0);
            }
            z[j] = 0;
        }
    };
    dfs(dfs, n - 1, S(0), true);

    std::sort(out.begin(), out.end(), [](const lat_point<S>& a, const lat_point<S>& b) {
        if (a.norm_sq != b.norm_sq) return a.norm_sq < b.norm_sq;
        return a.x < b.x;
    });
    return out;
}

} // namespace gon
