#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dirichlet/functions.hpp"

// Dirichlet convolution of function tables,
//
//   (f * g)(n) = sum_{d|n} f(d) g(n/d) = sum_{ab=n} f(a) g(b),
//
// computed for all n <= N by the double loop over d <= N, m <= N/d
// (O(N log N) additions).  All divisor pairs of n <= N lie inside the
// tables, so every output value is exact/complete.
//
// convolve_naive evaluates a single point by explicit divisor enumeration
// and serves as the oracle for the sieved convolution.

namespace dirichlet {

namespace detail {

inline void require_same_limit(uint64_t a, uint64_t b) {
    if (a != b)
        throw std::invalid_argument("dirichlet_convolve: table limits differ (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
}

inline std::string convolved_name(const std::string& f, const std::string& g) {
    return "(" + f + "*" + g + ")";
}

// Real-path kernel.  Accumulation order is fixed (ascending d, then
// ascending m) so results are reproducible across runs.
template <class FA, class FB>
std::vector<double> convolve_real(FA fa, FB fb, uint64_t N) {
    std::vector<double> out(N, 0.0);
    for (uint64_t d = 1; d <= N; ++d) {
        const double fd = fa(d);
        for (uint64_t m = 1; m <= N / d; ++m)
            out[d * m - 1] += fd * fb(m);
    }
    return out;
}

}  // namespace detail

// integer x integer -> integer, overflow-checked
inline IntFunctionTable dirichlet_convolve(const IntFunctionTable& f, const IntFunctionTable& g) {
    detail::require_same_limit(f.limit(), g.limit());
    const uint64_t N = f.limit();
    const auto fv = f.values();
    const auto gv = g.values();
    std::vector<int64_t> out(N, 0);
    for (uint64_t d = 1; d <= N; ++d) {
        const int64_t fd = fv[d - 1];
        if (fd == 0) continue;
        for (uint64_t m = 1; m <= N / d; ++m) {
            const uint64_t n = d * m;
            const int64_t term = detail::checked_mul(fd, gv[m - 1], "dirichlet_convolve", n);
            out[n - 1] = detail::checked_add(out[n - 1], term, "dirichlet_convolve", n);
        }
    }
    return {detail::convolved_name(f.name(), g.name()), std::move(out)};
}

// any real operand -> real
inline RealFunctionTable dirichlet_convolve(const RealFunctionTable& f, const RealFunctionTable& g) {
    detail::require_same_limit(f.limit(), g.limit());
    const auto fv = f.values();
    const auto gv = g.values();
    return {detail::convolved_name(f.name(), g.name()),
            detail::convolve_real([&](uint64_t d) { return fv[d - 1]; },
                                  [&](uint64_t m) { return gv[m - 1]; }, f.limit())};
}

inline RealFunctionTable dirichlet_convolve(const IntFunctionTable& f, const RealFunctionTable& g) {
    detail::require_same_limit(f.limit(), g.limit());
    const auto fv = f.values();
    const auto gv = g.values();
    return {detail::convolved_name(f.name(), g.name()),
            detail::convolve_real([&](uint64_t d) { return double(fv[d - 1]); },
                                  [&](uint64_t m) { return gv[m - 1]; }, f.limit())};
}

inline RealFunctionTable dirichlet_convolve(const RealFunctionTable& f, const IntFunctionTable& g) {
    detail::require_same_limit(f.limit(), g.limit());
    const auto fv = f.values();
    const auto gv = g.values();
    return {detail::convolved_name(f.name(), g.name()),
            detail::convolve_real([&](uint64_t d) { return fv[d - 1]; },
                                  [&](uint64_t m) { return double(gv[m - 1]); }, f.limit())};
}

// ---------------------------------------------------------------------------
// Single-point oracle: (f * g)(n) by divisor enumeration of n.
// ---------------------------------------------------------------------------

namespace detail {

inline void require_in_range(uint64_t n, uint64_t fl, uint64_t gl) {
    if (n < 1 || n > fl || n > gl)
        throw std::invalid_argument("convolve_naive: n = " + std::to_string(n) +
                                    " outside both table limits");
}

}  // namespace detail

inline int64_t convolve_naive(const IntFunctionTable& f, const IntFunctionTable& g, uint64_t n) {
    detail::require_in_range(n, f.limit(), g.limit());
    int64_t total = 0;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        const uint64_t q = n / d;
        total = detail::checked_add(
            total, detail::checked_mul(f(d), g(q), "convolve_naive", n), "convolve_naive", n);
        if (d != q)
            total = detail::checked_add(
                total, detail::checked_mul(f(q), g(d), "convolve_naive", n), "convolve_naive", n);
    }
    return total;
}

template <class TF, class TG>
double convolve_naive_real(const TF& f, const TG& g, uint64_t n) {
    detail::require_in_range(n, f.limit(), g.limit());
    double total = 0.0;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        const uint64_t q = n / d;
        total += double(f(d)) * double(g(q));
        if (d != q) total += double(f(q)) * double(g(d));
    }
    return total;
}

}  // namespace dirichlet
