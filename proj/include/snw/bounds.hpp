#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "snw/error.hpp"

namespace snw {

// Reference constants quoted from earlier work on the approximate conjecture,
// kept as metadata for the comparison table (stored, not computed).
inline constexpr double csy_claimed_constant = 0.67815;  // claimed, same methods
inline constexpr double zhang_zhou_lambda3 = 0.6751;

namespace detail {

inline double pow_int(double x, int e) {
    double acc = 1.0;
    double base = x;
    for (int k = e; k > 0; k >>= 1) {
        if (k & 1) acc *= base;
        base *= base;
    }
    return acc;
}

struct Bracket {
    double lo;
    double hi;
};

// Plain bisection with a deterministic iteration count of
// ceil(log2(width / tol)). Requires f(lo) < 0 < f(hi).
template <class Fn>
Bracket bisect(Fn&& f, double lo, double hi, double tol) {
    if (tol < 1e-14 || !(tol > 0)) fail(errc::bad_tolerance, "tolerance must be >= 1e-14");
    if (!(f(lo) < 0.0) || !(f(hi) > 0.0))
        fail(errc::no_sign_change, "no sign change over the bracket");
    const int steps = static_cast<int>(std::ceil(std::log2((hi - lo) / tol)));
    for (int i = 0; i < steps; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

}  // namespace detail

// Unique positive real root of x^m + x^(m-1) = 1, the lower bound on
// lambda_m for m-free digraphs. f is strictly increasing on (0, 1] with
// f(0) = -1 and f(1) = 1, so the bracket is always [0, 1].
inline double snc_bound_root(int m, double tol = 1e-12) {
    if (m < 2) fail(errc::bad_m, "m must be >= 2");
    const auto f = [m](double x) { return detail::pow_int(x, m) + detail::pow_int(x, m - 1) - 1.0; };
    const auto b = detail::bisect(f, 0.0, 1.0, tol);
    return 0.5 * (b.lo + b.hi);
}

// Root in (0, 1) of 2x^3 - (m-3)x^2 + (2m-4)x - (m-1). The bracket is
// verified at runtime rather than assumed for every m.
inline double liang_xu_root(int m, double tol = 1e-12) {
    if (m < 2) fail(errc::bad_m, "m must be >= 2");
    const auto f = [m](double x) {
        return 2.0 * x * x * x - (m - 3.0) * x * x + (2.0 * m - 4.0) * x - (m - 1.0);
    };
    const auto b = detail::bisect(f, 0.0, 1.0, tol);
    return 0.5 * (b.lo + b.hi);
}

// Real root of 2x^3 + x^2 - 1 = 0, the Chen-Shen-Yuster constant.
inline double csy_root(double tol = 1e-12) {
    const auto f = [](double x) { return 2.0 * x * x * x + x * x - 1.0; };
    const auto b = detail::bisect(f, 0.0, 1.0, tol);
    return 0.5 * (b.lo + b.hi);
}

// (1 - ln(2)/m, 1 - sqrt(2)/sqrt(m)): the asymptotic forms of this bound and
// of the Liang-Xu bound. Not valid bounds at small m; comparison data only.
inline std::pair<double, double> asymptotic_row(int m) {
    if (m < 2) fail(errc::bad_m, "m must be >= 2");
    return {1.0 - std::log(2.0) / m, 1.0 - std::sqrt(2.0) / std::sqrt(static_cast<double>(m))};
}

struct BoundRow {
    int m;
    double snc_root;
    double liang_xu_root;
    double asym_paper;
    double asym_lx;
};

inline std::vector<BoundRow> bounds_table(int m_max, double tol = 1e-12) {
    if (m_max < 2) fail(errc::bad_m, "m_max must be >= 2");
    std::vector<BoundRow> rows;
    for (int m = 2; m <= m_max; ++m) {
        const auto [asym_paper, asym_lx] = asymptotic_row(m);
        rows.push_back({m, snc_bound_root(m, tol), liang_xu_root(m, tol), asym_paper, asym_lx});
        if (m > 2 && rows[rows.size() - 2].snc_root >= rows.back().snc_root)
            fail(errc::invariant_violation, "snc_root not strictly increasing in m");
        if (m >= 3 && rows.back().snc_root <= rows.back().liang_xu_root)
            fail(errc::invariant_violation, "snc_root does not dominate liang_xu_root");
    }
    return rows;
}

inline std::string bounds_csv(const std::vector<BoundRow>& rows) {
    std::string out = "m,snc_root,liang_xu_root,asym_paper,asym_lx\n";
    char buf[160];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%d,%.12g,%.12g,%.12g,%.12g\n", r.m, r.snc_root,
                      r.liang_xu_root, r.asym_paper, r.asym_lx);
        out += buf;
    }
    return out;
}

}  // namespace snw
