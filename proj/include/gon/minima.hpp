#pragma once

#include <cstdint>
#include <vector>

#include "gon/gauge.hpp"

namespace gon {

template <class S>
struct minima_result {
    vec<S> lambda;                                // ascending gauge minima
    matrix<S> witnesses;                          // rows v_i, F(v_i) = lambda_i
    std::vector<std::vector<bigint>> witness_coeffs; // in the lattice's given basis
    S certified_radius{};                         // Euclidean radius covered (normalized space)
};

struct minima_options {
    enumerate_options enumeration{};
    double eps = 1e-9; // comparison tolerance on the inexact path
};

namespace detail {

template <class S>
S base_gauge_value(base_body base, const vec<S>& x) {
    using std::sqrt;
    switch (base) {
    case base_body::cube: {
        S m(0);
        for (auto& v : x)
            if (abs_val(v) > m) m = abs_val(v);
        return m;
    }
    case base_body::cross: {
        S s(0);
        for (auto& v : x) s += abs_val(v);
        return s;
    }
    case base_body::ball:
        if constexpr (is_exact_v<S>) {
            throw unsupported_exact_op("successive_minima: Euclidean gauge value is irrational");
        } else {
            return sqrt(norm2_sq(x));
        }
    default:
        throw error("base_gauge_value: generic base has no closed form");
    }
}

// Outer Euclidean radius of the reference body (gauge <= 1 implies norm <= R).
template <class S>
S base_outer_radius(base_body base, int n) {
    switch (base) {
    case base_body::cube: return sqrt_upper(S(n));
    case base_body::cross: return S(1);
    case base_body::ball: return S(1);
    default: throw error("base_outer_radius: generic");
    }
}

inline bool extends_rank(const std::vector<std::vector<bigint>>& chosen,
                         const std::vector<bigint>& cand) {
    int k = (int)chosen.size();
    int n = (int)cand.size();
    matrix<bigint> m(k + 1, n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = chosen[(size_t)i][(size_t)j];
    for (int j = 0; j < n; ++j) m(k, j) = cand[(size_t)j];
    return rank_int(std::move(m)) == k + 1;
}

} // namespace detail

// Exact successive minima of {F <= 1} with respect to L, by complete
// enumeration in normalized coordinates: points are gauge-sorted and greedily
// collected until n independent ones are found, then the radius is enlarged
// to lambda_n * R so that nothing below the reported minima was missed.
template <class S>
minima_result<S> successive_minima(const lattice<S>& l, const gauge<S>& f,
                                   const minima_options& opts = {}) {
    const int n = l.dim();
    if (dim(f) != n) throw dimension_mismatch("successive_minima: gauge/lattice dimension");
    if (!is_bounded(f)) throw unbounded_body("successive_minima: body must be bounded");

    normal_map<S> nm = normalizer(f);
    const bool generic = nm.base == base_body::generic;
    matrix<S> bprime = nm.identity ? l.basis() : matmul(l.basis(), transpose(nm.t));
    lattice<S> lat_norm(bprime);

    S outer = generic ? outer_inner_radii(f).outer : detail::base_outer_radius<S>(nm.base, n);
    auto gauge_of = [&](const lat_point<S>& p) -> S {
        if (generic) return gauge_eval(f, p.x);
        return detail::base_gauge_value<S>(nm.base, p.x);
    };

    // smallest reduced basis vector gives a radius that surely holds a point
    auto red = lll_reduce_rows(bprime, opts.enumeration.lll_delta);
    S min_row_sq = norm2_sq(red.basis.row(0));
    for (int i = 1; i < n; ++i) {
        S s = norm2_sq(red.basis.row(i));
        if (s < min_row_sq) min_row_sq = s;
    }
    S rho = detail::sqrt_upper(min_row_sq);

    const S safety = [&] {
        if constexpr (is_exact_v<S>) return S(1);
        else return S(1) + S(opts.eps);
    }();

    for (int round = 0; round < 64; ++round) {
        auto pts = enumerate_euclidean(lat_norm, rho, opts.enumeration);
        std::vector<size_t> order(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) order[i] = i;
        std::vector<S> gv(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) gv[i] = gauge_of(pts[i]);
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            if (gv[a] != gv[b]) return gv[a] < gv[b];
            return pts[a].x < pts[b].x;
        });

        std::vector<std::vector<bigint>> chosen;
        vec<S> lambda;
        for (size_t oi = 0; oi < order.size() && (int)chosen.size() < n; ++oi) {
            const auto& p = pts[order[oi]];
            if (detail::extends_rank(chosen, p.coeff)) {
                chosen.push_back(p.coeff);
                lambda.push_back(gv[order[oi]]);
            }
        }
        if ((int)chosen.size() == n) {
            S needed = lambda.back() * outer * safety;
            if (rho >= needed) {
                minima_result<S> res;
                res.lambda = lambda;
                res.witness_coeffs = chosen;
                res.witnesses = matrix<S>(n, n);
                for (int i = 0; i < n; ++i) {
                    vec<S> x((size_t)n, S(0));
                    for (int c = 0; c < n; ++c) {
                        if (chosen[(size_t)i][(size_t)c] == 0) continue;
                        S zc = from_bigint<S>(chosen[(size_t)i][(size_t)c]);
                        for (int j = 0; j < n; ++j) x[(size_t)j] += zc * l.basis()(c, j);
                    }
                    res.witnesses.set_row(i, x);
                }
                res.certified_radius = rho;
                return res;
            }
            rho = needed;
        } else {
            rho = rho * S(2);
        }
    }
    throw error("successive_minima: failed to certify (radius loop exhausted)");
}

// First minimum only (same machinery, early exit on certification of i = 1).
template <class S>
std::pair<S, std::vector<bigint>> first_minimum(const lattice<S>& l, const gauge<S>& f,
                                                const minima_options& opts = {}) {
    // lambda_1 certification needs radius lambda_1 * R, which the full run
    // reaches anyway on its first certified round; reuse it.
    auto res = successive_minima(l, f, opts);
    return {res.lambda[0], res.witness_coeffs[0]};
}

// ---------------------------------------------------------------------------
// Minkowski second theorem: 2^n/n! <= prod(lambda) V / d <= 2^n
// ---------------------------------------------------------------------------

template <class S>
struct minkowski_report {
    S t{};
    S lower{}, upper{};
    vec<S> lambda;
    bool pass = false;
};

template <class S>
minkowski_report<S> minkowski_check(const lattice<S>& l, const gauge<S>& f,
                                    const minima_options& opts = {}) {
    if (!is_convex(f)) throw not_convex("minkowski_check: needs a convex body");
    const int n = l.dim();
    auto mr = successive_minima(l, f, opts);
    S prod(1);
    for (auto& lam : mr.lambda) prod *= lam;
    minkowski_report<S> rep;
    rep.lambda = mr.lambda;
    rep.t      = prod * volume(f).value / determinant(l);
    rep.lower  = pow_scalar(S(2), n) / from_bigint<S>(factorial_int(n));
    rep.upper  = pow_scalar(S(2), n);
    if constexpr (is_exact_v<S>) {
        rep.pass = rep.lower <= rep.t && rep.t <= rep.upper;
    } else {
        S tol = S(opts.eps);
        rep.pass = rep.t >= rep.lower * (S(1) - tol) && rep.t <= rep.upper * (S(1) + tol);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Transference for reciprocal bodies:
// 1 <= lambda_i(C, L) lambda_{n+1-i}(C*, L*) <= (n!)^2
// ---------------------------------------------------------------------------

inline bigint transference_upper_bound(int n) { return pow_int(factorial_int(n), 2); }

template <class S>
struct transference_report {
    minima_result<S> primal;
    minima_result<S> dual;
    vec<S> products; // lambda_i . lambda*_{n+1-i}
    S upper{};       // (n!)^2
    bool pass = false;
};

template <class S>
transference_report<S> mahler_transference_check(const lattice<S>& l, const gauge<S>& f,
                                                 const minima_options& opts = {}) {
    if (!is_convex(f)) throw not_convex("mahler_transference_check: needs a convex body");
    const int n = l.dim();
    transference_report<S> rep;
    rep.primal = successive_minima(l, f, opts);
    rep.dual   = successive_minima(dual_lattice(l), polar_body(f), opts);
    rep.upper  = from_bigint<S>(transference_upper_bound(n));
    rep.pass   = true;
    const S lo = [&] {
        if constexpr (is_exact_v<S>) return S(1);
        else return S(1) - S(opts.eps);
    }();
    const S hi = [&] {
        if constexpr (is_exact_v<S>) return rep.upper;
        else return rep.upper * (S(1) + S(opts.eps));
    }();
    for (int i = 0; i < n; ++i) {
        S p = rep.primal.lambda[(size_t)i] * rep.dual.lambda[(size_t)(n - 1 - i)];
        rep.products.push_back(p);
        if (p < lo || p > hi) rep.pass = false;
    }
    return rep;
}

// Constant for the inhomogeneous corollary: every a is within c4(n) C of the
// lattice when C* holds no nonzero dual point. Chaining n lambda_n(C, L) with
// lambda_n(C, L) < (n!)^2 (forced by lambda_1(C*, L*) > 1) gives n (n!)^2.
inline bigint inhomogeneous_constant(int n) { return bigint(n) * transference_upper_bound(n); }

template <class S>
struct shift_result {
    vec<S> z;    // lattice vector with a + z in n lambda_n C
    S value{};   // F(a + z)
    S bound{};   // n lambda_n
};

// Rounds a's coordinates in the witness basis; the triangle inequality gives
// F(a + z) <= (1/2) sum lambda_i <= n lambda_n.
template <class S>
shift_result<S> inhomogeneous_shift(const lattice<S>& l, const gauge<S>& f, const vec<S>& a,
                                    const minima_options& opts = {}) {
    if (!is_convex(f)) throw not_convex("inhomogeneous_shift: needs a convex body");
    const int n = l.dim();
    if ((int)a.size() != n) throw dimension_mismatch("inhomogeneous_shift: vector dimension");
    auto mr = successive_minima(l, f, opts);
    vec<S> c = vecmat(a, inverse(mr.witnesses));
    shift_result<S> out;
    out.z.assign((size_t)n, S(0));
    for (int i = 0; i < n; ++i) {
        bigint r = nearest_int(c[(size_t)i]);
        if (r == 0) continue;
        S rs = from_bigint<S>(r);
        for (int j = 0; j < n; ++j) out.z[(size_t)j] -= rs * mr.witnesses(i, j);
    }
    vec<S> shifted(a);
    for (int j = 0; j < n; ++j) shifted[(size_t)j] += out.z[(size_t)j];
    out.value = gauge_eval(f, shifted);
    out.bound = S(n) * mr.lambda.back();
    return out;
}

// ---------------------------------------------------------------------------
// Khintchine-Dyson transfer step. From a primal pair (x, y) with
// ||x||_inf <= Q, ||Ax - y||_inf <= Q^{-m(1+eta)/(n-m)}, build the body
// C_Q, take the first minimum of its polar
//     Q ||A^T u - v||_1 + Q^{-m(1+eta)/(n-m)} ||u||_1
// over Z^n, and report the dual pair with its achieved exponent.
// ---------------------------------------------------------------------------

enum class dyson_flag { ok, rational_degeneracy, unit_dual_witness };

template <class S>
struct dyson_result {
    std::vector<bigint> u, v;
    S q_prime{};        // achieved ||u||_inf
    double eta_star = 0;
    S residual{};       // ||A^T u - v||_inf
    dyson_flag flag = dyson_flag::ok;
    bool contract_ok = false;
};

template <class S>
dyson_result<S> dyson_transfer_step(const matrix<S>& a, const std::vector<long long>& x,
                                    const std::vector<long long>& y, const S& big_q,
                                    const S& eta, const minima_options& opts = {}) {
    static_assert(!is_exact_v<S>, "dyson_transfer_step: inexact scalars required");
    using std::log;
    using std::pow;
    const int nm = a.rows(), m = a.cols(), n = m + nm;
    if ((int)x.size() != m || (int)y.size() != nm)
        throw dimension_mismatch("dyson_transfer_step: witness dimensions");

    const S delta = pow(big_q, -S(m) * (S(1) + eta) / S(nm));
    // validate the primal pair
    S xn(0), res(0);
    for (auto& xi : x)
        if (S(abs_val(S(xi))) > xn) xn = S(abs_val(S(xi)));
    for (int j = 0; j < nm; ++j) {
        S r(0);
        for (int i = 0; i < m; ++i) r += a(j, i) * S(x[(size_t)i]);
        r -= S(y[(size_t)j]);
        if (abs_val(r) > res) res = abs_val(r);
    }
    if (xn == S(0)) throw error("dyson_transfer_step: x must be nonzero");
    if (xn > big_q * (S(1) + S(1e-9)) || res > delta * (S(1) + S(1e-9)))
        throw error("dyson_transfer_step: primal pair fails its inequalities");

    dyson_result<S> out;

    // integer matrix: A^T e_1 is integral, the transfer is trivially degenerate
    bool integral = true;
    for (int i = 0; i < nm && integral; ++i)
        for (int j = 0; j < m && integral; ++j)
            if (a(i, j) != from_bigint<S>(floor_int(a(i, j)))) integral = false;
    if (integral) {
        out.flag = dyson_flag::rational_degeneracy;
        out.u.assign((size_t)nm, 0);
        out.u[0] = 1;
        out.v.assign((size_t)m, 0);
        for (int i = 0; i < m; ++i) out.v[(size_t)i] = floor_int(a(0, i));
        out.q_prime    = S(1);
        out.residual   = S(0);
        out.eta_star   = std::numeric_limits<double>::infinity();
        out.contract_ok = true;
        return out;
    }

    // polar gauge of C_Q as an l1 image; coordinates z = (z_x, z_y), and the
    // dual pair is (u, v) = (z_y, -z_x)
    matrix<S> w(n, n);
    for (int i = 0; i < m; ++i) {
        w(i, i) = big_q;
        for (int j = 0; j < nm; ++j) w(i, m + j) = big_q * a(j, i);
    }
    for (int j = 0; j < nm; ++j) w(m + j, m + j) = -delta;
    lattice<S> zn(matrix<S>::identity(n));
    auto mr = successive_minima(zn, gauge<S>(cross_image_t<S>{w}), opts);

    int pick = -1;
    for (int i = 0; i < n && pick < 0; ++i) {
        for (int j = 0; j < nm; ++j)
            if (mr.witness_coeffs[(size_t)i][(size_t)(m + j)] != 0) { pick = i; break; }
    }
    if (pick < 0) throw error("dyson_transfer_step: no dual witness with u != 0");

    out.u.assign((size_t)nm, 0);
    out.v.assign((size_t)m, 0);
    for (int j = 0; j < nm; ++j) out.u[(size_t)j] = mr.witness_coeffs[(size_t)pick][(size_t)(m + j)];
    for (int i = 0; i < m; ++i) out.v[(size_t)i] = -mr.witness_coeffs[(size_t)pick][(size_t)i];

    bigint un = 0;
    for (auto& ui : out.u)
        if (abs(ui) > un) un = abs(ui);
    out.q_prime = from_bigint<S>(un);

    S r(0);
    for (int i = 0; i < m; ++i) {
        S s(0);
        for (int j = 0; j < nm; ++j) s += a(j, i) * from_bigint<S>(out.u[(size_t)j]);
        s -= from_bigint<S>(out.v[(size_t)i]);
        if (abs_val(s) > r) r = abs_val(s);
    }
    out.residual = r;

    if (r <= S(1e-40)) {
        out.flag        = dyson_flag::rational_degeneracy;
        out.eta_star    = std::numeric_limits<double>::infinity();
        out.contract_ok = true;
        return out;
    }
    if (un <= 1) {
        out.flag        = dyson_flag::unit_dual_witness;
        out.eta_star    = std::numeric_limits<double>::infinity();
        out.contract_ok = to_double(r) <= 1.0 + 1e-9;
        return out;
    }
    out.eta_star = -(double)m * to_double(S(log(r))) / ((double)nm * to_double(S(log(out.q_prime)))) - 1.0;
    S rhs        = pow(out.q_prime, -S(nm) * (S(1) + S(out.eta_star)) / S(m));
    out.contract_ok = r <= rhs * (S(1) + S(1e-9));
    return out;
}

// ---------------------------------------------------------------------------
// Finite-Q exponent estimation for ||Ax - y||_inf <= ||x||_inf^{-(m/(n-m))(1+eta)}.
// Reported value is the largest eta achieved by at least three solutions with
// geometrically increasing ||x||_inf: a declared finite-range lower proxy for
// the true supremum.
// ---------------------------------------------------------------------------

enum class exponent_side { primal, dual };

template <class S>
struct approx_solution {
    bigint x_norm;
    std::vector<bigint> x, y;
    S residual{};
    double eta = 0;
};

template <class S>
struct exponent_report {
    double omega_hat = 0;
    bool degenerate = false; // exact integer solution Ax = y found
    std::vector<approx_solution<S>> records;
};

namespace detail {

template <class S>
double achieved_eta(const S& residual, const bigint& xnorm, int m, int nm) {
    using std::log;
    if (xnorm <= 1) return 0.0;
    double lr = to_double(S(log(residual)));
    double lx = to_double(S(log(from_bigint<S>(xnorm))));
    return -(double)nm * lr / ((double)m * lx) - 1.0;
}

} // namespace detail

template <class S>
exponent_report<S> exponent_estimate(const matrix<S>& a_in, exponent_side side, long long q_max,
                                     const minima_options& opts = {}) {
    static_assert(!is_exact_v<S>, "exponent_estimate: inexact scalars required");
    matrix<S> a = side == exponent_side::primal ? a_in : transpose(a_in);
    const int nm = a.rows(), m = a.cols();
    if (q_max < 10) throw error("exponent_estimate: q_max must be >= 10");

    exponent_report<S> rep;
    auto note = [&](std::vector<bigint> x, std::vector<bigint> y, const S& r, const bigint& xn) {
        approx_solution<S> sol;
        sol.x_norm   = xn;
        sol.x        = std::move(x);
        sol.y        = std::move(y);
        sol.residual = r;
        sol.eta      = detail::achieved_eta(r, xn, m, nm);
        rep.records.push_back(std::move(sol));
    };

    if (m == 1) {
        if ((std::uint64_t)q_max > opts.enumeration.max_points)
            throw enumeration_budget("exponent_estimate: q_max exceeds point budget");
        S best = S(-1);
        for (long long xv = 1; xv <= q_max; ++xv) {
            S r(0);
            std::vector<bigint> y((size_t)nm);
            for (int j = 0; j < nm; ++j) {
                S t        = a(j, 0) * S(xv);
                bigint yj  = nearest_int(t);
                y[(size_t)j] = yj;
                S d = abs_val(S(t - from_bigint<S>(yj)));
                if (d > r) r = d;
            }
            if (r <= S(1e-40)) {
                rep.degenerate = true;
                note({bigint(xv)}, std::move(y), r, bigint(xv));
                break;
            }
            if (best < S(0) || r < best) {
                best = r;
                note({bigint(xv)}, std::move(y), r, bigint(xv));
            }
        }
    } else {
        // points (x, Ax - y); shrink the residual bound while solutions with
        // x != 0 keep appearing, recording each one found
        matrix<S> basis(m + nm, m + nm);
        for (int i = 0; i < m; ++i) {
            basis(i, i) = S(1);
            for (int j = 0; j < nm; ++j) basis(i, m + j) = a(j, i);
        }
        for (int j = 0; j < nm; ++j) basis(m + j, m + j) = S(-1);
        lattice<S> lam(basis);
        for (long long q = 2; q <= q_max; q *= 2) {
            S delta = S(1) / S(2);
            for (int shrink = 0; shrink < 200; ++shrink) {
                vec<S> scales((size_t)(m + nm));
                for (int i = 0; i < m; ++i) scales[(size_t)i] = S(q);
                for (int j = 0; j < nm; ++j) scales[(size_t)(m + j)] = delta;
                auto mr  = successive_minima(lam, gauge<S>(max_norm_t<S>{scales}), opts);
                bool hit = false;
                for (int i = 0; i < m + nm && !hit; ++i) {
                    if (mr.lambda[(size_t)i] > S(1)) break;
                    bigint xn = 0;
                    for (int c = 0; c < m; ++c)
                        if (abs(mr.witness_coeffs[(size_t)i][(size_t)c]) > xn)
                            xn = abs(mr.witness_coeffs[(size_t)i][(size_t)c]);
                    if (xn == 0) continue;
                    std::vector<bigint> xv((size_t)m), yv((size_t)nm);
                    for (int c = 0; c < m; ++c) xv[(size_t)c] = mr.witness_coeffs[(size_t)i][(size_t)c];
                    for (int c = 0; c < nm; ++c)
                        yv[(size_t)c] = -mr.witness_coeffs[(size_t)i][(size_t)(m + c)];
                    // coordinates m.. of the witness are Ax - y itself
                    S r(0);
                    for (int j = 0; j < nm; ++j) {
                        S d = abs_val(mr.witnesses(i, m + j));
                        if (d > r) r = d;
                    }
                    if (r <= S(1e-40)) {
                        rep.degenerate = true;
                        note(std::move(xv), std::move(yv), r, xn);
                        rep.omega_hat = std::numeric_limits<double>::infinity();
                        return rep;
                    }
                    note(std::move(xv), std::move(yv), r, xn);
                    delta = r / S(2);
                    hit   = true;
                }
                if (!hit) break;
            }
        }
    }

    rep.omega_hat = 0.0;
    if (rep.degenerate) {
        rep.omega_hat = std::numeric_limits<double>::infinity();
        return rep;
    }
    std::vector<double> etas;
    for (auto& s : rep.records)
        if (s.x_norm >= 2) etas.push_back(s.eta);
    std::sort(etas.rbegin(), etas.rend());
    for (double th : etas) {
        int count = 0;
        bigint last = 0;
        for (auto& s : rep.records) {
            if (s.x_norm < 2 || s.eta < th) continue;
            if (count == 0 || s.x_norm >= 2 * last) {
                ++count;
                last = s.x_norm;
            }
            if (count >= 3) break;
        }
        if (count >= 3) {
            rep.omega_hat = th;
            break;
        }
    }
    return rep;
}

} // namespace gon
