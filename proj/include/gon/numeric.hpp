#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <string>
#include <type_traits>

#include "gon/errors.hpp"

namespace gon {

using bigint = boost::multiprecision::cpp_int;
using rat    = boost::multiprecision::cpp_rational;

// Default inexact scalar: ~166-bit mantissa, enough head-room for the
// parametric sweeps where coordinates span e^{+-60}.
using real = boost::multiprecision::cpp_bin_float_50;

template <class S>
struct scalar_traits {
    static constexpr bool is_exact = false;
    static S comparison_eps() { return S(1e-9); }
};

template <>
struct scalar_traits<rat> {
    static constexpr bool is_exact = true;
    static rat comparison_eps() { return rat(0); }
};

template <>
struct scalar_traits<real> {
    static constexpr bool is_exact = false;
    static real comparison_eps() { return real("1e-9"); }
};

template <class S>
inline constexpr bool is_exact_v = scalar_traits<S>::is_exact;

template <class S>
double to_double(const S& x) {
    if constexpr (std::is_arithmetic_v<S>)
        return static_cast<double>(x);
    else
        return x.template convert_to<double>();
}

template <class S>
S from_bigint(const bigint& z) {
    if constexpr (std::is_arithmetic_v<S>)
        return static_cast<S>(z.convert_to<long double>());
    else
        return S(z);
}

// Largest integer <= x.
template <class S>
bigint floor_int(const S& x) {
    if constexpr (std::is_same_v<S, rat>) {
        bigint num = numerator(x), den = denominator(x); // den > 0
        bigint q   = num / den;
        if (num < 0 && q * den != num) --q;
        return q;
    } else if constexpr (std::is_arithmetic_v<S>) {
        return bigint(std::floor((long double)x));
    } else {
        S f = floor(x);
        return f.template convert_to<bigint>();
    }
}

// Nearest integer, ties rounded up (x = k + 1/2 gives k + 1).
template <class S>
bigint nearest_int(const S& x) {
    if constexpr (std::is_same_v<S, rat>) {
        return floor_int(rat(x + rat(1, 2)));
    } else {
        return floor_int(S(x + S(0.5)));
    }
}

template <class S>
S abs_val(const S& x) {
    using std::abs;
    return abs(x);
}

inline bigint factorial_int(int n) {
    bigint f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

inline bigint binomial_int(int n, int k) {
    if (k < 0 || k > n) return 0;
    bigint b = 1;
    for (int i = 0; i < k; ++i) { b *= (n - i); b /= (i + 1); }
    return b;
}

inline bigint pow_int(const bigint& b, int e) {
    bigint r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

template <class S>
S pow_scalar(const S& b, int e) {
    S r(1);
    bool neg = e < 0;
    for (int i = 0; i < (neg ? -e : e); ++i) r *= b;
    if (neg) r = S(1) / r;
    return r;
}

template <class S>
S pi_const() {
    static_assert(!is_exact_v<S>, "pi is not rational");
    using std::atan;
    return S(4) * atan(S(1));
}

// Volume of the n-dimensional Euclidean unit ball, kappa_n.
template <class S>
S ball_volume(int n) {
    S pi = pi_const<S>();
    S k0(1), k1(2); // kappa_0, kappa_1
    if (n == 0) return k0;
    if (n == 1) return k1;
    S prev = k0, cur = k1;
    for (int m = 2; m <= n; ++m) {
        S next = prev * (S(2) * pi / S(m));
        prev = cur;
        cur  = next;
    }
    return cur;
}

// zeta(s) for integer s >= 2 by Euler-Maclaurin with a few correction terms.
template <class S>
S zeta_int(int s) {
    if (s < 2) throw error("zeta_int: need s >= 2");
    const int K = 64;
    S sum(0);
    for (int k = 1; k < K; ++k) sum += S(1) / pow_scalar(S(k), s);
    S Ks = pow_scalar(S(K), s);
    sum += S(K) / (Ks * S(s - 1));       // K^{1-s}/(s-1)
    sum += S(1) / (S(2) * Ks);           // K^{-s}/2
    S t1 = S(s) / (S(12) * Ks * S(K));   // B_2 term
    sum += t1;
    S t2 = S(s) * S(s + 1) * S(s + 2) / (S(720) * Ks * S(K) * S(K) * S(K));
    sum -= t2;                           // B_4 term
    return sum;
}

// ---------------------------------------------------------------------------
// Scalar parsing / formatting
// ---------------------------------------------------------------------------

// Parse "p/q", plain integers, or decimal strings into a rational.
inline rat parse_rational(const std::string& s) {
    if (s.empty()) throw error("parse_rational: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) return rat(s);
    auto dot = s.find('.');
    auto exp = s.find_first_of("eE");
    if (dot == std::string::npos && exp == std::string::npos) return rat(s);
    // decimal form: sign, integer part, fraction part, optional exponent
    long long e10 = 0;
    std::string mant = s;
    if (exp != std::string::npos) {
        e10  = std::stoll(s.substr(exp + 1));
        mant = s.substr(0, exp);
        dot  = mant.find('.');
    }
    std::string digits = mant;
    long long frac_len = 0;
    if (dot != std::string::npos) {
        frac_len = (long long)(mant.size() - dot - 1);
        digits   = mant.substr(0, dot) + mant.substr(dot + 1);
    }
    if (digits.empty() || digits == "-" || digits == "+")
        throw error("parse_rational: bad literal '" + s + "'");
    bigint num(digits);
    long long shift = e10 - frac_len;
    bigint den = 1;
    if (shift >= 0)
        num *= pow_int(bigint(10), (int)shift);
    else
        den = pow_int(bigint(10), (int)(-shift));
    return rat(num, den);
}

template <class S>
S parse_scalar(const std::string& s) {
    if constexpr (std::is_same_v<S, rat>) {
        return parse_rational(s);
    } else if constexpr (std::is_arithmetic_v<S>) {
        return static_cast<S>(std::stold(s));
    } else {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            rat r = parse_rational(s);
            return S(numerator(r)) / S(denominator(r));
        }
        return S(s);
    }
}

// 17 significant digits: round-trips IEEE doubles exactly.
inline std::string fmt_g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

template <class S>
std::string scalar_to_string(const S& x) {
    if constexpr (std::is_same_v<S, rat>) {
        std::string s = numerator(x).str();
        if (denominator(x) != 1) s += "/" + denominator(x).str();
        return s;
    } else {
        return fmt_g17(to_double(x));
    }
}

// ---------------------------------------------------------------------------
// Counter-based random stream: value depends only on (key, counter), so any
// parallel schedule reproduces the same draws.
// ---------------------------------------------------------------------------

struct counter_rng {
    std::uint64_t key = 0;

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t at(std::uint64_t counter) const {
        return mix(mix(key) ^ mix(counter * 0xd1342543de82ef95ULL + 0x632be59bd9b4e019ULL));
    }

    double uniform(std::uint64_t counter) const {
        return (double)(at(counter) >> 11) * 0x1.0p-53;
    }

    // uniform integer in [lo, hi]
    long long uniform_int(std::uint64_t counter, long long lo, long long hi) const {
        std::uint64_t span = (std::uint64_t)(hi - lo + 1);
        return lo + (long long)(at(counter) % span);
    }
};

// Derive a sub-key from (seed, tag, index); tag keeps distinct experiment
// stages decorrelated under one seed.
inline std::uint64_t derive_key(std::uint64_t seed, const std::string& tag, std::uint64_t index = 0) {
    std::uint64_t h = 1469598103934665603ULL ^ seed;
    for (char c : tag) {
        h ^= (unsigned char)c;
        h *= 1099511628211ULL;
    }
    return counter_rng::mix(h ^ counter_rng::mix(index));
}

// Sequential convenience wrapper over counter_rng.
struct rng_stream {
    counter_rng rng;
    std::uint64_t ctr = 0;

    explicit rng_stream(std::uint64_t key) : rng{key} {}

    std::uint64_t next_u64() { return rng.at(ctr++); }
    double next_uniform() { return rng.uniform(ctr++); }
    long long next_int(long long lo, long long hi) { return rng.uniform_int(ctr++, lo, hi); }
    double next_gaussian() {
        double u1 = next_uniform(), u2 = next_uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }
};

} // namespace gon
