#pragma once

#include <cmath>
#include <optional>
#include <variant>

#include "gon/lattice.hpp"

namespace gon {

// ---------------------------------------------------------------------------
// Gauge variants. Each represents a distance function F (nonnegative,
// absolutely homogeneous, continuous); the body is {F <= 1}.
// ---------------------------------------------------------------------------

template <class S>
struct max_norm_t { // F = max_i |x_i| / s_i  (box with half-widths s_i)
    vec<S> scales;
};

template <class S>
struct sum_norm_t { // F = sum |x_i|  (cross-polytope)
    int n = 0;
};

template <class S>
struct euclidean_t { // F = ||x||_2
    int n = 0;
};

template <class S>
struct ellipsoid_t { // F = sqrt(x^T A x), A positive definite
    matrix<S> a;
};

template <class S>
struct parallelepiped_t { // F = max_i |a_i . x| / A_i
    matrix<S> rows;       // a_i as rows
    vec<S> bounds;        // A_i > 0
};

template <class S>
struct cross_image_t { // F = ||M x||_1  (body = M^{-1} of the l1 ball)
    matrix<S> m;
};

template <class S>
struct weighted_box_t { // F = max_i |x_i| e^{-mu_i q}  (box half-widths e^{mu_i q})
    vec<S> mu;
    S q{};
    vec<S> inv_scales; // e^{-mu_i q}, cached
};

template <class S>
struct norm_form_t { // F = |x_1 ... x_n|^{1/n}, unbounded star body
    int n = 0;
};

template <class S>
struct truncated_norm_form_t { // F = max(|x_1...x_n|^{1/n}, ||x||_inf / cap)
    int n = 0;
    S cap{};
};

template <class S>
using gauge = std::variant<max_norm_t<S>, sum_norm_t<S>, euclidean_t<S>, ellipsoid_t<S>,
                           parallelepiped_t<S>, cross_image_t<S>, weighted_box_t<S>,
                           norm_form_t<S>, truncated_norm_form_t<S>>;

template <class S>
gauge<S> make_cube(int n, const S& half_width = S(1)) {
    return max_norm_t<S>{vec<S>((size_t)n, half_width)};
}

template <class S>
gauge<S> make_weighted_box(const vec<S>& mu, const S& q) {
    if constexpr (is_exact_v<S>) {
        throw unsupported_exact_op("weighted_box: needs inexact scalars (exp)");
    } else {
        using std::exp;
        S sum(0);
        for (auto& m : mu) sum += m;
        if (abs_val(sum) > S(1e-12)) throw error("weighted_box: weights must sum to zero");
        weighted_box_t<S> w;
        w.mu = mu;
        w.q  = q;
        w.inv_scales.reserve(mu.size());
        for (auto& m : mu) w.inv_scales.push_back(exp(-m * q));
        return w;
    }
}

template <class S>
int dim(const gauge<S>& f) {
    return std::visit(
        [](const auto& g) -> int {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, max_norm_t<S>>) return (int)g.scales.size();
            else if constexpr (std::is_same_v<T, sum_norm_t<S>>) return g.n;
            else if constexpr (std::is_same_v<T, euclidean_t<S>>) return g.n;
            else if constexpr (std::is_same_v<T, ellipsoid_t<S>>) return g.a.rows();
            else if constexpr (std::is_same_v<T, parallelepiped_t<S>>) return g.rows.cols();
            else if constexpr (std::is_same_v<T, cross_image_t<S>>) return g.m.cols();
            else if constexpr (std::is_same_v<T, weighted_box_t<S>>) return (int)g.mu.size();
            else if constexpr (std::is_same_v<T, norm_form_t<S>>) return g.n;
            else return g.n;
        },
        f);
}

template <class S>
bool is_convex(const gauge<S>& f) {
    return !std::holds_alternative<norm_form_t<S>>(f) &&
           !std::holds_alternative<truncated_norm_form_t<S>>(f);
}

template <class S>
bool is_bounded(const gauge<S>& f) {
    return !std::holds_alternative<norm_form_t<S>>(f);
}

namespace detail {

template <class S>
S nth_root_abs(const S& prod, int n) {
    static_assert(!is_exact_v<S>);
    using std::pow;
    if (prod == S(0)) return S(0);
    return pow(abs_val(prod), S(1) / S(n));
}

} // namespace detail

template <class S>
S gauge_eval(const gauge<S>& f, const vec<S>& x) {
    if ((int)x.size() != dim(f)) throw dimension_mismatch("gauge_eval: wrong dimension");
    using std::sqrt;
    return std::visit(
        [&](const auto& g) -> S {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, max_norm_t<S>>) {
                S m(0);
                for (size_t i = 0; i < x.size(); ++i) {
                    S v = abs_val(x[i]) / g.scales[i];
                    if (v > m) m = v;
                }
                return m;
            } else if constexpr (std::is_same_v<T, sum_norm_t<S>>) {
                S s(0);
                for (auto& xi : x) s += abs_val(xi);
                return s;
            } else if constexpr (std::is_same_v<T, euclidean_t<S>>) {
                if constexpr (is_exact_v<S>)
                    throw unsupported_exact_op("gauge_eval: euclidean norm is irrational");
                else
                    return sqrt(norm2_sq(x));
            } else if constexpr (std::is_same_v<T, ellipsoid_t<S>>) {
                if constexpr (is_exact_v<S>)
                    throw unsupported_exact_op("gauge_eval: ellipsoid gauge is irrational");
                else {
                    S q(0);
                    for (int i = 0; i < g.a.rows(); ++i)
                        for (int j = 0; j < g.a.cols(); ++j) q += x[i] * g.a(i, j) * x[j];
                    return sqrt(q);
                }
            } else if constexpr (std::is_same_v<T, parallelepiped_t<S>>) {
                S m(0);
                for (int i = 0; i < g.rows.rows(); ++i) {
                    S v = abs_val(dot(g.rows.row(i), x)) / g.bounds[i];
                    if (v > m) m = v;
                }
                return m;
            } else if constexpr (std::is_same_v<T, cross_image_t<S>>) {
                S s(0);
                for (int i = 0; i < g.m.rows(); ++i) s += abs_val(dot(g.m.row(i), x));
                return s;
            } else if constexpr (std::is_same_v<T, weighted_box_t<S>>) {
                S m(0);
                for (size_t i = 0; i < x.size(); ++i) {
                    S v = abs_val(x[i]) * g.inv_scales[i];
                    if (v > m) m = v;
                }
                return m;
            } else if constexpr (std::is_same_v<T, norm_form_t<S>>) {
                if constexpr (is_exact_v<S>)
                    throw unsupported_exact_op("gauge_eval: norm form gauge is irrational");
                else {
                    S p(1);
                    for (auto& xi : x) p *= xi;
                    return detail::nth_root_abs(p, g.n);
                }
            } else { // truncated_norm_form_t
                if constexpr (is_exact_v<S>)
                    throw unsupported_exact_op("gauge_eval: norm form gauge is irrational");
                else {
                    S p(1), m(0);
                    for (auto& xi : x) {
                        p *= xi;
                        if (abs_val(xi) > m) m = abs_val(xi);
                    }
                    S nf = detail::nth_root_abs(p, g.n);
                    S tc = m / g.cap;
                    return nf > tc ? nf : tc;
                }
            }
        },
        f);
}

// ---------------------------------------------------------------------------
// Polar body C* = {x : x.y <= 1 for all y in C}, in closed form per variant.
// ---------------------------------------------------------------------------

template <class S>
gauge<S> polar_body(const gauge<S>& f) {
    if (!is_convex(f)) throw not_convex("polar_body: star-body variant has no polar gauge here");
    return std::visit(
        [&](const auto& g) -> gauge<S> {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, max_norm_t<S>>) {
                bool unit = true;
                for (auto& s : g.scales)
                    if (s != S(1)) unit = false;
                if (unit) return sum_norm_t<S>{(int)g.scales.size()};
                int n = (int)g.scales.size();
                matrix<S> d(n, n);
                for (int i = 0; i < n; ++i) d(i, i) = g.scales[i];
                return cross_image_t<S>{d}; // sum_i s_i |y_i|
            } else if constexpr (std::is_same_v<T, sum_norm_t<S>>) {
                return max_norm_t<S>{vec<S>((size_t)g.n, S(1))};
            } else if constexpr (std::is_same_v<T, euclidean_t<S>>) {
                return g; // self-polar
            } else if constexpr (std::is_same_v<T, ellipsoid_t<S>>) {
                return ellipsoid_t<S>{inverse(g.a)};
            } else if constexpr (std::is_same_v<T, parallelepiped_t<S>>) {
                // polar of {||Mx||_inf <= 1} is conv{+-rows of M}, gauge ||(M^T)^{-1} y||_1
                int n = g.rows.cols();
                matrix<S> m(g.rows.rows(), n);
                for (int i = 0; i < m.rows(); ++i)
                    for (int j = 0; j < n; ++j) m(i, j) = g.rows(i, j) / g.bounds[i];
                return cross_image_t<S>{inverse(transpose(m))};
            } else if constexpr (std::is_same_v<T, cross_image_t<S>>) {
                // polar of {||Mx||_1 <= 1} is M^T of the cube, gauge ||(M^T)^{-1} y||_inf
                matrix<S> rows = inverse(transpose(g.m));
                return parallelepiped_t<S>{rows, vec<S>((size_t)rows.rows(), S(1))};
            } else if constexpr (std::is_same_v<T, weighted_box_t<S>>) {
                int n = (int)g.mu.size();
                matrix<S> d(n, n);
                for (int i = 0; i < n; ++i) d(i, i) = S(1) / g.inv_scales[i]; // e^{mu_i q}
                return cross_image_t<S>{d};
            } else {
                throw not_convex("polar_body: unreachable");
            }
        },
        f);
}

// ---------------------------------------------------------------------------
// Volume
// ---------------------------------------------------------------------------

template <class S>
struct volume_result {
    S value{};
    double std_error = 0.0; // nonzero only for Monte Carlo estimates
    bool exact_form = true; // closed form (exact when S is rational)
};

struct mc_options {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed    = 20260810;
};

// Axis-aligned sampling box guaranteed to contain the body.
template <class S>
vec<S> bounding_half_widths(const gauge<S>& f);

template <class S>
volume_result<S> volume_mc(const gauge<S>& f, const mc_options& opts = {}) {
    if (!is_bounded(f)) throw unbounded_body("volume_mc: unbounded body");
    const int n = dim(f);
    vec<S> hw = bounding_half_widths(f);
    counter_rng rng{derive_key(opts.seed, "volume_mc")};
    std::uint64_t inside = 0;
    vec<S> x((size_t)n);
    for (std::uint64_t i = 0; i < opts.samples; ++i) {
        for (int j = 0; j < n; ++j) {
            double u = rng.uniform(i * (std::uint64_t)n + (std::uint64_t)j);
            x[(size_t)j] = hw[(size_t)j] * S(2.0 * u - 1.0);
        }
        if (gauge_eval(f, x) <= S(1)) ++inside;
    }
    S box(1);
    for (auto& h : hw) box *= S(2) * h;
    double p  = (double)inside / (double)opts.samples;
    double se = to_double(box) * std::sqrt(std::max(p * (1.0 - p), 0.0) / (double)opts.samples);
    volume_result<S> out;
    out.value      = box * S(p);
    out.std_error  = se;
    out.exact_form = false;
    return out;
}

template <class S>
volume_result<S> volume(const gauge<S>& f, const mc_options& mc = {}) {
    if (!is_bounded(f)) throw unbounded_body("volume: norm form body is unbounded");
    using std::sqrt;
    return std::visit(
        [&](const auto& g) -> volume_result<S> {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, max_norm_t<S>>) {
                S v(1);
                for (auto& s : g.scales) v *= S(2) * s;
                return {v, 0.0, true};
            } else if constexpr (std::is_same_v<T, sum_norm_t<S>>) {
                S v = pow_scalar(S(2), g.n) / from_bigint<S>(factorial_int(g.n));
                return {v, 0.0, true};
            } else if constexpr (std::is_same_v<T, euclidean_t<S>>) {
                if constexpr (is_exact_v<S>)
                    throw unsupported_exact_op("volume: ball volume is irrational");
                else
                    return {ball_volume<S>(g.n), 0.0, true};
            } else if constexpr (std::is_same_v<T, ellipsoid_t<S>>) {
                if constexpr (is_exact_v<S>)
                    throw unsupported_exact_op("volume: ellipsoid volume is irrational");
                else
                    return {ball_volume<S>(g.a.rows()) / sqrt(det(g.a)), 0.0, true};
            } else if constexpr (std::is_same_v<T, parallelepiped_t<S>>) {
                S v = pow_scalar(S(2), g.rows.rows());
                for (auto& b : g.bounds) v *= b;
                return {v / abs_val(det(g.rows)), 0.0, true};
            } else if constexpr (std::is_same_v<T, cross_image_t<S>>) {
                int n = g.m.rows();
                S v   = pow_scalar(S(2), n) / from_bigint<S>(factorial_int(n));
                return {v / abs_val(det(g.m)), 0.0, true};
            } else if constexpr (std::is_same_v<T, weighted_box_t<S>>) {
                S v(1);
                for (auto& is : g.inv_scales) v *= S(2) / is;
                return {v, 0.0, true};
            } else { // truncated_norm_form: no closed form, Monte Carlo
                return volume_mc(f, mc);
            }
        },
        f);
}

// ---------------------------------------------------------------------------
// Certified inner/outer Euclidean radii: r B_n <= {F<=1} <= R B_n.
// Sound containment; tightness is not promised.
// ---------------------------------------------------------------------------

namespace detail {

// sqrt with directed rounding slack so exact callers stay sound
template <class S>
S sqrt_upper(const S& x) {
    if constexpr (is_exact_v<S>) {
        double d = std::sqrt(to_double(x));
        return S(rat(d * (1.0 + 1e-9) + 1e-300));
    } else {
        using std::sqrt;
        return sqrt(x) * (S(1) + S(1e-12));
    }
}

template <class S>
S sqrt_lower(const S& x) {
    if constexpr (is_exact_v<S>) {
        double d = std::sqrt(to_double(x));
        return S(rat(d * (1.0 - 1e-9)));
    } else {
        using std::sqrt;
        return sqrt(x) * (S(1) - S(1e-12));
    }
}

template <class S>
S frobenius_sq(const matrix<S>& m) {
    S s(0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s += m(i, j) * m(i, j);
    return s;
}

} // namespace detail

template <class S>
struct radii_result {
    S inner; // r
    S outer; // R
};

template <class S>
radii_result<S> outer_inner_radii(const gauge<S>& f) {
    if (!is_bounded(f)) throw unbounded_body("outer_inner_radii: unbounded body");
    const int n = dim(f);
    const S sqrt_n_up = detail::sqrt_upper(S(n));
    return std::visit(
        [&](const auto& g) -> radii_result<S> {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, max_norm_t<S>>) {
                S mn = g.scales[0], mx = g.scales[0];
                for (auto& s : g.scales) {
                    if (s < mn) mn = s;
                    if (s > mx) mx = s;
                }
                return {mn, mx * sqrt_n_up};
            } else if constexpr (std::is_same_v<T, sum_norm_t<S>>) {
                return {detail::sqrt_lower(S(1) / S(n)), S(1)};
            } else if constexpr (std::is_same_v<T, euclidean_t<S>>) {
                return {S(1), S(1)};
            } else if constexpr (std::is_same_v<T, ellipsoid_t<S>>) {
                // lambda_max(A) <= max row sum of |A|; same bound on A^{-1}
                auto rowsum_max = [](const matrix<S>& m) {
                    S best(0);
                    for (int i = 0; i < m.rows(); ++i) {
                        S s(0);
                        for (int j = 0; j < m.cols(); ++j) s += abs_val(m(i, j));
                        if (s > best) best = s;
                    }
                    return best;
                };
                S r = S(1) / detail::sqrt_upper(rowsum_max(g.a));
                S R = detail::sqrt_upper(rowsum_max(inverse(g.a)));
                return {r, R};
            } else if constexpr (std::is_same_v<T, parallelepiped_t<S>>) {
                int k = g.rows.rows();
                matrix<S> m(k, g.rows.cols());
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < g.rows.cols(); ++j) m(i, j) = g.rows(i, j) / g.bounds[i];
                S max_row_sq(0);
                for (int i = 0; i < k; ++i) {
                    S s = norm2_sq(m.row(i));
                    if (s > max_row_sq) max_row_sq = s;
                }
                S r = S(1) / detail::sqrt_upper(max_row_sq);
                S R = sqrt_n_up * detail::sqrt_upper(detail::frobenius_sq(inverse(m)));
                return {r, R};
            } else if constexpr (std::is_same_v<T, cross_image_t<S>>) {
                S row_norm_sum(0);
                for (int i = 0; i < g.m.rows(); ++i)
                    row_norm_sum += detail::sqrt_upper(norm2_sq(g.m.row(i)));
                S r = S(1) / row_norm_sum;
                S R = detail::sqrt_upper(detail::frobenius_sq(inverse(g.m)));
                return {r, R};
            } else if constexpr (std::is_same_v<T, weighted_box_t<S>>) {
                S mn = S(1) / g.inv_scales[0], mx = mn;
                for (auto& is : g.inv_scales) {
                    S s = S(1) / is;
                    if (s < mn) mn = s;
                    if (s > mx) mx = s;
                }
                return {mn, mx * sqrt_n_up};
            } else if constexpr (std::is_same_v<T, truncated_norm_form_t<S>>) {
                S r = g.cap < S(1) ? g.cap : S(1);
                return {r, g.cap * sqrt_n_up};
            } else {
                throw unbounded_body("outer_inner_radii: unreachable");
            }
        },
        f);
}

template <class S>
vec<S> bounding_half_widths(const gauge<S>& f) {
    const int n = dim(f);
    if (auto* g = std::get_if<max_norm_t<S>>(&f)) return g->scales;
    if (auto* g = std::get_if<weighted_box_t<S>>(&f)) {
        vec<S> hw;
        for (auto& is : g->inv_scales) hw.push_back(S(1) / is);
        return hw;
    }
    if (auto* g = std::get_if<truncated_norm_form_t<S>>(&f)) return vec<S>((size_t)n, g->cap);
    S R = outer_inner_radii(f).outer;
    return vec<S>((size_t)n, R);
}

// ---------------------------------------------------------------------------
// Volume product V(C) V(C*) and its reference constants
// ---------------------------------------------------------------------------

template <class S>
struct mahler_report {
    S product{};              // V(C) . V(C*)
    double lower_bound;       // 4^n / (n!)^2
    double upper_bound;       // 4^n
    double santalo_bound;     // kappa_n^2 (sharper upper bound)
    double cube_value;        // 4^n / n!, conjectured minimum, attained by boxes
    bool within_bounds;
    bool exact;
};

inline rat mahler_lower_bound_exact(int n) { return rat(pow_int(bigint(4), n), pow_int(factorial_int(n), 2)); }
inline rat mahler_upper_bound_exact(int n) { return rat(pow_int(bigint(4), n)); }
inline rat mahler_cube_value_exact(int n) { return rat(pow_int(bigint(4), n), factorial_int(n)); }

template <class S>
mahler_report<S> mahler_volume(const gauge<S>& f, const mc_options& mc = {}) {
    if (!is_convex(f)) throw not_convex("mahler_volume: needs a convex body");
    const int n = dim(f);
    auto v  = volume(f, mc);
    auto vp = volume(polar_body(f), mc);
    mahler_report<S> rep;
    rep.product     = v.value * vp.value;
    rep.lower_bound = to_double(mahler_lower_bound_exact(n));
    rep.upper_bound = to_double(mahler_upper_bound_exact(n));
    double kn       = to_double(ball_volume<double>(n));
    rep.santalo_bound = kn * kn;
    rep.cube_value  = to_double(mahler_cube_value_exact(n));
    rep.exact       = v.exact_form && vp.exact_form && is_exact_v<S>;
    double p        = to_double(rep.product);
    double eps      = rep.exact ? 0.0 : 1e-9 * rep.upper_bound;
    rep.within_bounds = (p >= rep.lower_bound - eps) && (p <= rep.upper_bound + eps);
    return rep;
}

// Convert a gauge between scalar types (coefficient-wise).
template <class T, class S>
gauge<T> convert_gauge(const gauge<S>& f) {
    auto cv = [](const S& x) -> T {
        if constexpr (std::is_same_v<S, rat>)
            return T(numerator(x)) / T(denominator(x));
        else if constexpr (std::is_arithmetic_v<T>)
            return (T)to_double(x);
        else
            return T(x);
    };
    auto cm = [&](const matrix<S>& m) {
        matrix<T> o(m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) o(i, j) = cv(m(i, j));
        return o;
    };
    auto cvv = [&](const vec<S>& v) {
        vec<T> o;
        o.reserve(v.size());
        for (auto& x : v) o.push_back(cv(x));
        return o;
    };
    return std::visit(
        [&](const auto& g) -> gauge<T> {
            using U = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<U, max_norm_t<S>>) return max_norm_t<T>{cvv(g.scales)};
            else if constexpr (std::is_same_v<U, sum_norm_t<S>>) return sum_norm_t<T>{g.n};
            else if constexpr (std::is_same_v<U, euclidean_t<S>>) return euclidean_t<T>{g.n};
            else if constexpr (std::is_same_v<U, ellipsoid_t<S>>) return ellipsoid_t<T>{cm(g.a)};
            else if constexpr (std::is_same_v<U, parallelepiped_t<S>>)
                return parallelepiped_t<T>{cm(g.rows), cvv(g.bounds)};
            else if constexpr (std::is_same_v<U, cross_image_t<S>>) return cross_image_t<T>{cm(g.m)};
            else if constexpr (std::is_same_v<U, weighted_box_t<S>>) {
                if constexpr (is_exact_v<T>)
                    throw unsupported_exact_op("convert_gauge: weighted box needs inexact target");
                else
                    return make_weighted_box<T>(cvv(g.mu), cv(g.q));
            } else if constexpr (std::is_same_v<U, norm_form_t<S>>) return norm_form_t<T>{g.n};
            else return truncated_norm_form_t<T>{g.n, cv(g.cap)};
        },
        f);
}

// ---------------------------------------------------------------------------
// Normalizing linear map: F(x) = base(T x) where base is one of the three
// reference gauges. Lets the minima engine enumerate in well-conditioned
// coordinates. Variants without such a map report `generic`.
// ---------------------------------------------------------------------------

enum class base_body { cube, ball, cross, generic };

template <class S>
struct normal_map {
    base_body base = base_body::generic;
    matrix<S> t;       // meaningful unless generic with identity
    bool identity = true;
};

template <class S>
normal_map<S> normalizer(const gauge<S>& f) {
    const int n = dim(f);
    return std::visit(
        [&](const auto& g) -> normal_map<S> {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, max_norm_t<S>>) {
                matrix<S> t(n, n);
                for (int i = 0; i < n; ++i) t(i, i) = S(1) / g.scales[i];
                return {base_body::cube, t, false};
            } else if constexpr (std::is_same_v<T, sum_norm_t<S>>) {
                return {base_body::cross, matrix<S>::identity(n), true};
            } else if constexpr (std::is_same_v<T, euclidean_t<S>>) {
                return {base_body::ball, matrix<S>::identity(n), true};
            } else if constexpr (std::is_same_v<T, ellipsoid_t<S>>) {
                if constexpr (is_exact_v<S>)
                    throw unsupported_exact_op("normalizer: ellipsoid needs inexact scalars");
                else {
                    using std::sqrt;
                    auto [lmat, d] = ldl(g.a); // A = L D L^T, so T = sqrt(D) L^T
                    matrix<S> t(n, n);
                    for (int i = 0; i < n; ++i) {
                        S s = sqrt(d[i]);
                        for (int j = 0; j < n; ++j) t(i, j) = s * lmat(j, i);
                    }
                    return {base_body::ball, t, false};
                }
            } else if constexpr (std::is_same_v<T, parallelepiped_t<S>>) {
                matrix<S> t(g.rows.rows(), n);
                for (int i = 0; i < t.rows(); ++i)
                    for (int j = 0; j < n; ++j) t(i, j) = g.rows(i, j) / g.bounds[i];
                return {base_body::cube, t, false};
            } else if constexpr (std::is_same_v<T, cross_image_t<S>>) {
                return {base_body::cross, g.m, false};
            } else if constexpr (std::is_same_v<T, weighted_box_t<S>>) {
                matrix<S> t(n, n);
                for (int i = 0; i < n; ++i) t(i, i) = g.inv_scales[i];
                return {base_body::cube, t, false};
            } else {
                return {base_body::generic, matrix<S>::identity(n), true};
            }
        },
        f);
}

} // namespace gon
