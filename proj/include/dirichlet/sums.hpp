#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dirichlet/functions.hpp"

// Summatory functions M(f,x) = sum_{n<=x} f(n), partial Dirichlet sums
// sum_{n<=x} f(n)/n^s, the discrete Abel transform
//
//   sum_{n<=x} f(n)/n^k
//     = B(x)/x^k - sum_{n<=x-1} (1/(n+1)^k - 1/n^k) B(n),   B(n) = M(f,n),
//
// and the monotone-integrand sum estimate
//
//   sum_{a<n<=x} g(n) = int_a^x g + C + O(|g(x)|),
//   C = int_a^inf (xi - [xi]) g'(xi) dxi.

namespace dirichlet {

// ---------------------------------------------------------------------------
// PrefixSums: cumulative[x-1] = M(f, x) for x = 1..N, held as double.
// Integer tables are accumulated in 128-bit and converted per entry, so the
// stored value is the correctly rounded exact sum.
// ---------------------------------------------------------------------------

class PrefixSums {
public:
    PrefixSums(std::string source, std::vector<double> cumulative)
        : source_(std::move(source)), cumulative_(std::move(cumulative)) {
        if (cumulative_.empty())
            throw std::invalid_argument("PrefixSums: limit N must be >= 1");
    }

    const std::string& source() const noexcept { return source_; }
    uint64_t limit() const noexcept { return cumulative_.size(); }

    // M(f, x), 1 <= x <= N
    double at(uint64_t x) const {
        if (x < 1 || x > cumulative_.size())
            throw std::out_of_range("PrefixSums " + source_ + ": x = " + std::to_string(x) +
                                    " outside 1.." + std::to_string(cumulative_.size()));
        return cumulative_[x - 1];
    }

    std::span<const double> cumulative() const noexcept { return cumulative_; }

private:
    std::string source_;
    std::vector<double> cumulative_;
};

inline PrefixSums prefix_sums(const IntFunctionTable& t) {
    std::vector<double> c(t.limit());
    __int128 acc = 0;
    const auto v = t.values();
    for (uint64_t n = 1; n <= t.limit(); ++n) {
        if (__builtin_add_overflow(acc, __int128(v[n - 1]), &acc))
            detail::throw_overflow("prefix_sums (128-bit accumulator)", n);
        c[n - 1] = double(acc);
    }
    return {t.name(), std::move(c)};
}

inline PrefixSums prefix_sums(const RealFunctionTable& t) {
    std::vector<double> c(t.limit());
    double acc = 0.0;
    const auto v = t.values();
    for (uint64_t n = 1; n <= t.limit(); ++n) {
        acc += v[n - 1];
        c[n - 1] = acc;
    }
    return {t.name(), std::move(c)};
}

// ---------------------------------------------------------------------------
// Partial Dirichlet sums, direct route: sum_{n<=x} t(n)/n^s, ascending n.
// ---------------------------------------------------------------------------

namespace detail {

template <class Span>
double partial_sum_direct(Span v, double s, uint64_t x, uint64_t limit) {
    if (x < 1 || x > limit)
        throw std::invalid_argument("dirichlet_partial_sum: x = " + std::to_string(x) +
                                    " outside 1.." + std::to_string(limit));
    double acc = 0.0;
    for (uint64_t n = 1; n <= x; ++n)
        acc += double(v[n - 1]) / std::pow(double(n), s);
    return acc;
}

}  // namespace detail

inline double dirichlet_partial_sum(const IntFunctionTable& t, double s, uint64_t x) {
    return detail::partial_sum_direct(t.values(), s, x, t.limit());
}

inline double dirichlet_partial_sum(const RealFunctionTable& t, double s, uint64_t x) {
    return detail::partial_sum_direct(t.values(), s, x, t.limit());
}

// ---------------------------------------------------------------------------
// Abel route: same quantity through prefix sums.  Algebraically identical to
// the direct route; numerically it must agree to ~1e-9 relative.
// ---------------------------------------------------------------------------

inline double abel_partial_sum(const PrefixSums& B, double k, uint64_t x) {
    if (x < 1 || x > B.limit())
        throw std::invalid_argument("abel_partial_sum: x = " + std::to_string(x) +
                                    " outside 1.." + std::to_string(B.limit()));
    const auto c = B.cumulative();
    const double head = c[x - 1] * std::pow(double(x), -k);
    double corr = 0.0;
    double inv_n = 1.0;  // n^-k at n = 1
    for (uint64_t n = 1; n + 1 <= x; ++n) {
        const double inv_np1 = std::pow(double(n + 1), -k);
        corr += (inv_np1 - inv_n) * c[n - 1];
        inv_n = inv_np1;
    }
    return head - corr;
}

inline double abel_partial_sum(const IntFunctionTable& t, double k, uint64_t x) {
    return abel_partial_sum(prefix_sums(t), k, x);
}

inline double abel_partial_sum(const RealFunctionTable& t, double k, uint64_t x) {
    return abel_partial_sum(prefix_sums(t), k, x);
}

// ---------------------------------------------------------------------------
// Monotone-integrand estimate of sum_{a<n<=x} g(n).
// ---------------------------------------------------------------------------

struct EulerMaclaurinEstimate {
    double integral;       // int_a^x g(xi) dxi
    double constant_term;  // C = int_a^inf (xi - [xi]) g'(xi) dxi
    double error_bound;    // |g(x)|, the scale of the O(|g(x)|) remainder

    double sum_estimate() const noexcept { return integral + constant_term; }
};

namespace detail {

// 16-point Gauss-Legendre on [-1,1]: positive abscissas and weights.
inline constexpr std::array<std::pair<double, double>, 8> kGauss16 = {{
    {0.0950125098376374, 0.1894506104550685},
    {0.2816035507792589, 0.1826034150449236},
    {0.4580167776572274, 0.1691565193950025},
    {0.6178762444026438, 0.1495959888165767},
    {0.7554044083550030, 0.1246289712555339},
    {0.8656312023878318, 0.0951585116824928},
    {0.9445750230732326, 0.0622535239386479},
    {0.9894009349916499, 0.0271524594117541},
}};

template <class F>
double gauss16(F&& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double s = 0.0;
    for (const auto& [t, w] : kGauss16) s += w * (f(mid - half * t) + f(mid + half * t));
    return s * half;
}

template <class F>
double adaptive_simpson_rec(F& f, double lo, double hi, double flo, double fmid, double fhi,
                            double whole, double tol, int depth) {
    const double mid = 0.5 * (lo + hi);
    const double lmid = 0.5 * (lo + mid), rmid = 0.5 * (mid + hi);
    const double flm = f(lmid), frm = f(rmid);
    const double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
    const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
    const double delta = left + right - whole;
    if (depth <= 0)
        throw std::runtime_error("euler_maclaurin_estimate: adaptive quadrature did not converge");
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, lo, mid, flo, flm, fmid, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth - 1);
}

template <class F>
double adaptive_simpson(F&& f, double lo, double hi, double tol) {
    if (lo == hi) return 0.0;
    const double mid = 0.5 * (lo + hi);
    const double flo = f(lo), fmid = f(mid), fhi = f(hi);
    const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    return adaptive_simpson_rec(f, lo, hi, flo, fmid, fhi, whole, tol, 60);
}

// Integrate g over [a, x] by adaptive Simpson on octave segments, so wide
// ranges like [1, 1e6] are resolved near a and coarse far out.
template <class F>
double integrate_segmented(F&& f, double a, double x, double tol) {
    double total = 0.0;
    double lo = a;
    while (lo < x) {
        const double hi = std::min(x, lo * 2.0 + 1.0);
        total += adaptive_simpson(f, lo, hi, tol);
        lo = hi;
    }
    return total;
}

}  // namespace detail

// g monotone on [a, inf), g -> 0 at infinity (caller-asserted), g_prime its
// derivative.  The constant term is integrated over unit intervals; past the
// quadrature horizon M the tail collapses to -g(M)/2 - g'(M)/12 (sawtooth
// mean 1/2 plus the first periodized-Bernoulli boundary term), leaving a
// residual below |g'(M)|/12 <= 1e-12.
template <class G, class GPrime>
EulerMaclaurinEstimate euler_maclaurin_estimate(G&& g, GPrime&& g_prime, double a, double x) {
    if (!std::isfinite(a) || !std::isfinite(x) || x < a)
        throw std::invalid_argument("euler_maclaurin_estimate: need finite a <= x");

    constexpr double kTailTol = 1e-12;
    constexpr uint64_t kMaxUnitIntervals = 50'000'000;

    const double integral = detail::integrate_segmented(g, a, x, 1e-13);

    double C = 0.0;
    double M = std::floor(a);
    if (M < a) {  // partial first interval [a, floor(a)+1)
        const double base = M;
        C += detail::gauss16([&](double xi) { return (xi - base) * g_prime(xi); }, a, M + 1.0);
        M += 1.0;
    }
    uint64_t blocks = 0;
    while (std::abs(g_prime(M)) / 12.0 > kTailTol) {
        if (++blocks > kMaxUnitIntervals)
            throw std::runtime_error(
                "euler_maclaurin_estimate: constant-term quadrature did not converge");
        const double base = M;
        C += detail::gauss16([&](double xi) { return (xi - base) * g_prime(xi); }, M, M + 1.0);
        M += 1.0;
    }
    C += -0.5 * g(M) - g_prime(M) / 12.0;

    return {integral, C, std::abs(g(x))};
}

// ---------------------------------------------------------------------------
// sum_{n<=x} n^s = x^(s+1)/(s+1) + O(x^s); this returns the leading term.
// ---------------------------------------------------------------------------

inline double power_sum_asymptote(uint32_t s, double x) {
    if (!(x >= 1.0)) throw std::invalid_argument("power_sum_asymptote: x must be >= 1");
    return std::pow(x, double(s) + 1.0) / (double(s) + 1.0);
}

}  // namespace dirichlet
