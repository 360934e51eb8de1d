#pragma once

#include <numeric>

#include "gon/minima.hpp"

namespace gon {

// Index set for p-fold exterior coordinates: the C(n,p) increasing p-tuples
// in lexicographic order. This ordering is the single sign convention used
// everywhere (e_{i1} ^ ... ^ e_{ip} = e-hat_j for the j-th tuple).
struct wedge_index_set {
    int n = 0, p = 0;
    long long num_tuples = 0;               // N = C(n,p)
    long long det_exponent = 0;             // P = C(n-1,p-1)
    std::vector<std::vector<int>> tuples;   // 0-based, lexicographic

    wedge_index_set(int n_, int p_) : n(n_), p(p_) {
        if (p < 1 || p > n - 1) throw error("wedge_index_set: need 1 <= p <= n-1");
        num_tuples   = binomial_int(n, p).convert_to<long long>();
        det_exponent = binomial_int(n - 1, p - 1).convert_to<long long>();
        std::vector<int> t(p);
        std::iota(t.begin(), t.end(), 0);
        while (true) {
            tuples.push_back(t);
            int i = p - 1;
            while (i >= 0 && t[(size_t)i] == n - p + i) --i;
            if (i < 0) break;
            ++t[(size_t)i];
            for (int j = i + 1; j < p; ++j) t[(size_t)j] = t[(size_t)j - 1] + 1;
        }
    }
};

// Exterior product of p vectors in R^n: coordinate j is the p x p minor on
// the columns of the j-th lexicographic tuple. Multilinear and alternating.
template <class S>
vec<S> wedge(const std::vector<vec<S>>& xs, const wedge_index_set& idx) {
    const int p = idx.p, n = idx.n;
    if ((int)xs.size() != p) throw dimension_mismatch("wedge: expected p vectors");
    for (auto& x : xs)
        if ((int)x.size() != n) throw dimension_mismatch("wedge: vector dimension");
    vec<S> out;
    out.reserve((size_t)idx.num_tuples);
    matrix<S> minor(p, p);
    for (auto& t : idx.tuples) {
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) minor(i, j) = xs[(size_t)i][(size_t)t[(size_t)j]];
        out.push_back(det(minor));
    }
    return out;
}

template <class S>
vec<S> wedge(const std::vector<vec<S>>& xs) {
    if (xs.empty()) throw dimension_mismatch("wedge: no vectors");
    return wedge(xs, wedge_index_set((int)xs[0].size(), (int)xs.size()));
}

// p-th compound lattice: generated by all p-fold wedges of lattice vectors;
// the wedges of the basis p-subsets already generate it, and
// d(L_p) = d(L)^{C(n-1,p-1)}.
template <class S>
lattice<S> compound_lattice(const lattice<S>& l, int p) {
    wedge_index_set idx(l.dim(), p);
    const long long big_n = idx.num_tuples;
    matrix<S> b((int)big_n, (int)big_n);
    for (long long r = 0; r < big_n; ++r) {
        std::vector<vec<S>> rows;
        for (int i : idx.tuples[(size_t)r]) rows.push_back(l.basis().row(i));
        vec<S> w = wedge(rows, idx);
        for (long long c = 0; c < big_n; ++c) b((int)r, (int)c) = w[(size_t)c];
    }
    return lattice<S>(b);
}

// p-th pseudocompound of a parallelepiped {|a_i.x| <= A_i}: rows are the
// wedges of the a_i p-subsets, bounds are the products of the A_i.
template <class S>
parallelepiped_t<S> pseudocompound(const parallelepiped_t<S>& pi, int p) {
    const int n = pi.rows.cols();
    if (pi.rows.rows() != n) throw dimension_mismatch("pseudocompound: need full-rank system");
    wedge_index_set idx(n, p);
    const long long big_n = idx.num_tuples;
    parallelepiped_t<S> out;
    out.rows = matrix<S>((int)big_n, (int)big_n);
    out.bounds.assign((size_t)big_n, S(1));
    for (long long r = 0; r < big_n; ++r) {
        std::vector<vec<S>> rows;
        S bound(1);
        for (int i : idx.tuples[(size_t)r]) {
            rows.push_back(pi.rows.row(i));
            bound *= pi.bounds[(size_t)i];
        }
        vec<S> w = wedge(rows, idx);
        for (long long c = 0; c < big_n; ++c) out.rows((int)r, (int)c) = w[(size_t)c];
        out.bounds[(size_t)r] = bound;
    }
    return out;
}

// Pseudocompound of a weighted box: exponents add over each tuple, so the
// result is again a weighted box in dimension N with the same q.
template <class S>
weighted_box_t<S> pseudocompound(const weighted_box_t<S>& wb, int p) {
    const int n = (int)wb.mu.size();
    wedge_index_set idx(n, p);
    vec<S> mu_hat;
    mu_hat.reserve((size_t)idx.num_tuples);
    for (auto& t : idx.tuples) {
        S s(0);
        for (int i : t) s += wb.mu[(size_t)i];
        mu_hat.push_back(s);
    }
    return std::get<weighted_box_t<S>>(make_weighted_box(mu_hat, wb.q));
}

template <class S>
gauge<S> pseudocompound_gauge(const gauge<S>& f, int p) {
    if (auto* pp = std::get_if<parallelepiped_t<S>>(&f)) return pseudocompound(*pp, p);
    if (auto* wb = std::get_if<weighted_box_t<S>>(&f)) return pseudocompound(*wb, p);
    if (auto* mn = std::get_if<max_norm_t<S>>(&f)) {
        const int n = (int)mn->scales.size();
        parallelepiped_t<S> pi{matrix<S>::identity(n), mn->scales};
        return pseudocompound(pi, p);
    }
    throw error("pseudocompound_gauge: supported only for box/parallelepiped gauges");
}

// ---------------------------------------------------------------------------
// Compound minima: lambda_i(P-hat_p, L_p) against the sorted products
// mu_i = lambda_{i1} ... lambda_{ip}. The wedge of primal witnesses gives the
// provable upper bound lambda_i <= p! mu_i (Laplace expansion of the wedge
// gauge); the lower side is Minkowski's product bound in dimension N.
// ---------------------------------------------------------------------------

template <class S>
struct compound_minima_report {
    vec<S> lambda_hat;  // minima in dimension N
    vec<S> mu;          // sorted products of base minima
    vec<S> ratios;      // lambda_hat_i / mu_i
    S upper_factor{};   // p!
    bool upper_ok = false;
    bool lower_minkowski_ok = false;
    S min_ratio{}, max_ratio{};
};

template <class S>
compound_minima_report<S> compound_minima_check(const parallelepiped_t<S>& pi, const lattice<S>& l,
                                                int p, const minima_options& opts = {}) {
    const int n = l.dim();
    wedge_index_set idx(n, p);
    auto base = successive_minima(l, gauge<S>(pi), opts);
    auto lp   = compound_lattice(l, p);
    auto phat = pseudocompound(pi, p);
    auto comp = successive_minima(lp, gauge<S>(phat), opts);

    compound_minima_report<S> rep;
    rep.lambda_hat = comp.lambda;
    for (auto& t : idx.tuples) {
        S prod(1);
        for (int i : t) prod *= base.lambda[(size_t)i];
        rep.mu.push_back(prod);
    }
    std::sort(rep.mu.begin(), rep.mu.end());
    rep.upper_factor = from_bigint<S>(factorial_int(p));
    const S tol = [&] {
        if constexpr (is_exact_v<S>) return S(0);
        else return S(opts.eps);
    }();
    rep.upper_ok = true;
    for (size_t i = 0; i < rep.mu.size(); ++i) {
        rep.ratios.push_back(rep.lambda_hat[i] / rep.mu[i]);
        if (rep.lambda_hat[i] > rep.upper_factor * rep.mu[i] * (S(1) + tol)) rep.upper_ok = false;
    }
    rep.min_ratio = *std::min_element(rep.ratios.begin(), rep.ratios.end());
    rep.max_ratio = *std::max_element(rep.ratios.begin(), rep.ratios.end());

    S prod_hat(1);
    for (auto& lam : rep.lambda_hat) prod_hat *= lam;
    S lower = pow_scalar(S(2), (int)idx.num_tuples) /
              from_bigint<S>(factorial_int((int)idx.num_tuples)) * determinant(lp) /
              volume(gauge<S>(phat)).value;
    rep.lower_minkowski_ok = prod_hat >= lower * (S(1) - tol);
    return rep;
}

// Ratio V(P-hat_p) V(P)^{-P}; invariant under any nonsingular linear
// substitution of the system (the compound of the substitution has
// determinant det^P, by the Sylvester-Franke identity).
template <class S>
struct compound_volume_report {
    S ratio{};
    S ratio_substituted{};
    bool invariant_ok = false;
};

template <class S>
compound_volume_report<S> compound_volume_check(const parallelepiped_t<S>& pi, int p,
                                                const matrix<S>& substitution) {
    const int n = pi.rows.cols();
    wedge_index_set idx(n, p);
    auto ratio_of = [&](const parallelepiped_t<S>& q) {
        S vhat = volume(gauge<S>(pseudocompound(q, p))).value;
        S v    = volume(gauge<S>(q)).value;
        return vhat / pow_scalar(v, (int)idx.det_exponent);
    };
    compound_volume_report<S> rep;
    rep.ratio = ratio_of(pi);
    parallelepiped_t<S> sub{matmul(pi.rows, substitution), pi.bounds};
    rep.ratio_substituted = ratio_of(sub);
    if constexpr (is_exact_v<S>) {
        rep.invariant_ok = rep.ratio == rep.ratio_substituted;
    } else {
        rep.invariant_ok =
            abs_val(S(rep.ratio - rep.ratio_substituted)) <= S(1e-9) * abs_val(rep.ratio);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Dual via the (n-1)-st compound: L* = d(L)^{-1} phi(L_{n-1}) with
// phi(x_1..x_n) = (x_n, -x_{n-1}, ..., (-1)^{n-1} x_1).
// ---------------------------------------------------------------------------

template <class S>
matrix<S> alternating_reversal(int n) {
    matrix<S> phi(n, n);
    for (int i = 0; i < n; ++i) phi(n - 1 - i, i) = (i % 2 == 0) ? S(1) : S(-1);
    return phi;
}

template <class S>
struct dual_via_compound_report {
    lattice<S> via_compound;
    lattice<S> direct;
    bool equal = false;
};

template <class S>
dual_via_compound_report<S> dual_via_compound(const lattice<S>& l) {
    static_assert(is_exact_v<S>, "dual_via_compound: exact rational lattices only");
    const int n = l.dim();
    lattice<S> ln1 = compound_lattice(l, n - 1); // dimension C(n, n-1) = n
    // apply phi to every row: row . phi^T
    matrix<S> mapped = matmul(ln1.basis(), transpose(alternating_reversal<S>(n)));
    S d = determinant(l);
    lattice<S> via(scale_mat(mapped, S(1) / d));
    lattice<S> direct = dual_lattice(l);
    bool eq = lattice_equal(via, direct);
    return {via, direct, eq};
}

// ---------------------------------------------------------------------------
// Rescaling step: given weights rho_1 >= ... >= rho_N > 0 with
// rho_i lambda_i ascending and prod rho_i = 1, search permutations sigma and
// bounds B_i = rho_{sigma(i)}^{-1} A_i for the one whose new minima best track
// rho_i lambda_i. Exhaustive over S_N, so N is capped.
// ---------------------------------------------------------------------------

template <class S>
struct davenport_report {
    std::vector<int> sigma;           // best permutation (values are rho indices)
    parallelepiped_t<S> rescaled;
    vec<S> new_lambda;
    double score = 0;                 // max_i |log(lambda'_i / (rho_i lambda_i))|
    vec<S> target;                    // rho_i lambda_i
};

template <class S>
davenport_report<S> davenport_rescale_search(const parallelepiped_t<S>& phat,
                                             const lattice<S>& lp, const vec<S>& rho,
                                             const minima_options& opts = {}) {
    const int big_n = lp.dim();
    if ((int)rho.size() != big_n) throw dimension_mismatch("davenport: rho size");
    if (big_n > 8) throw search_space_too_large("davenport: N > 8");
    auto lam = successive_minima(lp, gauge<S>(phat), opts).lambda;

    const double tol = 1e-9;
    for (int i = 0; i < big_n; ++i)
        if (to_double(rho[(size_t)i]) <= 0) throw invalid_rho("davenport: rho must be positive");
    for (int i = 0; i + 1 < big_n; ++i) {
        if (to_double(rho[(size_t)i]) < to_double(rho[(size_t)i + 1]) * (1 - tol))
            throw invalid_rho("davenport: rho must be non-increasing");
        if (to_double(rho[(size_t)i] * lam[(size_t)i]) >
            to_double(rho[(size_t)i + 1] * lam[(size_t)i + 1]) * (1 + tol))
            throw invalid_rho("davenport: rho_i lambda_i must be non-decreasing");
    }
    S prod(1);
    for (auto& r : rho) prod *= r;
    if (abs_val(to_double(prod) - 1.0) > 1e-6) throw invalid_rho("davenport: prod rho != 1");

    davenport_report<S> rep;
    for (int i = 0; i < big_n; ++i) rep.target.push_back(rho[(size_t)i] * lam[(size_t)i]);

    std::vector<int> perm(big_n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        parallelepiped_t<S> cand{phat.rows, phat.bounds};
        for (int i = 0; i < big_n; ++i)
            cand.bounds[(size_t)i] = phat.bounds[(size_t)i] / rho[(size_t)perm[(size_t)i]];
        auto lam2  = successive_minima(lp, gauge<S>(cand), opts).lambda;
        double s   = 0;
        for (int i = 0; i < big_n; ++i) {
            double r = std::fabs(std::log(to_double(lam2[(size_t)i]) / to_double(rep.target[(size_t)i])));
            if (r > s) s = r;
        }
        if (s < best) {
            best          = s;
            rep.sigma     = perm;
            rep.rescaled  = cand;
            rep.new_lambda = lam2;
            rep.score     = s;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return rep;
}

} // namespace gon
