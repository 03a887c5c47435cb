#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dirichlet/functions.hpp"

// Limit constants the verifiers compare against: zeta(s) for real s > 1 and
// the Euler-Mascheroni constant gamma, each with a rigorous error bound.

namespace dirichlet {

enum class ConstantMethod { closed_form, series_with_tail };

struct ConstantValue {
    double value;
    double error_bound;  // >= 0; 0 only for closed forms
    ConstantMethod method;
};

constexpr std::string_view to_string(ConstantMethod m) noexcept {
    return m == ConstantMethod::closed_form ? "closed-form" : "series-with-tail";
}

// zeta(s), s > 1.  Closed form for s = 2, 4; otherwise
//   zeta(s) = sum_{n<=M} n^-s + M^(1-s)/(s-1) + r,  |r| <= M^-s <= tol,
// where the middle term is the integral tail correction.
inline ConstantValue zeta(double s, double tol = 1e-12) {
    if (!(s > 1.0)) throw std::domain_error("zeta: need s > 1");
    if (!(tol > 0.0)) throw std::invalid_argument("zeta: tol must be > 0");

    constexpr double pi = std::numbers::pi;
    if (s == 2.0) return {pi * pi / 6.0, 0.0, ConstantMethod::closed_form};
    if (s == 4.0) return {pi * pi * pi * pi / 90.0, 0.0, ConstantMethod::closed_form};

    const double M_needed = std::ceil(std::pow(tol, -1.0 / s));
    if (!(M_needed < 2e8))
        throw std::runtime_error("zeta: tolerance unreachable by direct summation at s = " +
                                 std::to_string(s));
    const uint64_t M = std::max<uint64_t>(2, uint64_t(M_needed));

    detail::KahanSum head;
    for (uint64_t n = 1; n <= M; ++n) head.add(std::pow(double(n), -s));
    const double tail = std::pow(double(M), 1.0 - s) / (s - 1.0);
    const double bound = std::pow(double(M), -s);
    return {head.sum + tail, bound, ConstantMethod::series_with_tail};
}

// gamma = H_M - ln M - 1/(2M) + theta/(12 M^2), |theta| <= 1, so M is sized
// from 1/(12 M^2) <= tol.
inline ConstantValue euler_gamma(double tol = 1e-12) {
    if (!(tol > 0.0)) throw std::invalid_argument("euler_gamma: tol must be > 0");
    const double M_needed = std::ceil(std::sqrt(1.0 / (12.0 * tol)));
    if (!(M_needed < 2e8))
        throw std::runtime_error("euler_gamma: tolerance unreachable by direct summation");
    const uint64_t M = std::max<uint64_t>(10, uint64_t(M_needed));

    detail::KahanSum harmonic;
    for (uint64_t n = 1; n <= M; ++n) harmonic.add(1.0 / double(n));
    const double value = harmonic.sum - std::log(double(M)) - 0.5 / double(M);
    const double bound = 1.0 / (12.0 * double(M) * double(M));
    return {value, bound, ConstantMethod::series_with_tail};
}

}  // namespace dirichlet
