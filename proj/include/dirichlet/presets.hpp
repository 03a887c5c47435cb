#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dirichlet/constants.hpp"
#include "dirichlet/convolution.hpp"
#include "dirichlet/functions.hpp"
#include "dirichlet/sums.hpp"
#include "dirichlet/verify.hpp"

// Canned verification runs, one per worked example:
//
//   phi-wintner        M(phi,x)            = 3x^2/pi^2 + o(x^2)
//   sigma-k-wintner    M(sigma_k,x)        = zeta(k+1) x^(k+1)/(k+1) + o(x^(k+1))
//   phi-over-n         sum phi(n)/n        = x/zeta(2) + o(x)
//   logmean-3mu        sum (3/Id * mu/Id^2)    = (3/zeta(2)) ln x + o(ln x)
//   logmean-sigma      sum (1/Id * sigma/Id^3) = zeta(2) zeta(3) ln x + o(ln x)
//   kronecker-sigma-k  M(sigma_k,x) = o(x^(k+2)) and the Abel decay family
//   harmonic-gamma     sum 1/n = ln x + gamma + O(1/x)

namespace dirichlet {

enum class PresetId {
    phi_wintner,
    sigma_k_wintner,
    phi_over_n,
    logmean_3mu,
    logmean_sigma,
    kronecker_sigma_k,
    harmonic_gamma,
};

constexpr std::string_view to_string(PresetId id) noexcept {
    switch (id) {
        case PresetId::phi_wintner: return "phi-wintner";
        case PresetId::sigma_k_wintner: return "sigma-k-wintner";
        case PresetId::phi_over_n: return "phi-over-n";
        case PresetId::logmean_3mu: return "logmean-3mu";
        case PresetId::logmean_sigma: return "logmean-sigma";
        case PresetId::kronecker_sigma_k: return "kronecker-sigma-k";
        default: return "harmonic-gamma";
    }
}

inline PresetId preset_from_string(std::string_view name) {
    for (PresetId id : {PresetId::phi_wintner, PresetId::sigma_k_wintner, PresetId::phi_over_n,
                        PresetId::logmean_3mu, PresetId::logmean_sigma,
                        PresetId::kronecker_sigma_k, PresetId::harmonic_gamma})
        if (name == to_string(id)) return id;
    throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

inline std::vector<PresetId> all_presets() {
    return {PresetId::phi_wintner,   PresetId::sigma_k_wintner,   PresetId::phi_over_n,
            PresetId::logmean_3mu,   PresetId::logmean_sigma,
            PresetId::kronecker_sigma_k, PresetId::harmonic_gamma};
}

struct PresetOptions {
    uint64_t limit = 1'000'000;
    uint32_t k = 1;                      // sigma-family presets
    std::vector<uint64_t> checkpoints;   // empty -> preset default grid
    Tolerances tolerances{};
    double conv_tail_share = kConvergenceTailShare;
    double div_tail_share = kDivergenceTailShare;
};

struct PresetResult {
    PresetId id;
    std::vector<VerificationReport> reports;

    // worst verdict across the run: fail > inconclusive > pass
    Verdict verdict() const noexcept {
        Verdict v = Verdict::pass;
        for (const auto& r : reports) {
            if (r.verdict == Verdict::fail) return Verdict::fail;
            if (r.verdict == Verdict::inconclusive) v = Verdict::inconclusive;
        }
        return v;
    }
};

// Decade grid 10^3..limit, with limit appended when it is not a decade.
inline std::vector<uint64_t> decade_checkpoints(uint64_t limit) {
    std::vector<uint64_t> cps;
    for (uint64_t x = 1000; x <= limit; x *= 10) cps.push_back(x);
    if (cps.empty() || cps.back() != limit) cps.push_back(limit);
    while (cps.size() < 3 && cps.front() > 10) cps.insert(cps.begin(), cps.front() / 10);
    return cps;
}

// Sparser grid for log laws: the evaluator's difference quotient runs over
// the last pair, so spread it across two decades to keep ln(x_j/x_i) large.
inline std::vector<uint64_t> log_law_checkpoints(uint64_t limit) {
    std::vector<uint64_t> cps{limit / 1000, limit / 100, limit};
    for (auto& x : cps) x = std::max<uint64_t>(x, 1);
    while (cps.size() >= 2 && cps[0] >= cps[1]) cps.erase(cps.begin());
    while (cps.size() < 3 && cps.front() > 10) cps.insert(cps.begin(), cps.front() / 10);
    return cps;
}

namespace detail {

// f0(n) = A/n as a real table
inline RealFunctionTable reciprocal_table(double A, uint64_t N) {
    std::vector<double> v(N);
    for (uint64_t n = 1; n <= N; ++n) v[n - 1] = A / double(n);
    return {fmt(A) + "/Id", std::move(v)};
}

}  // namespace detail

inline PresetResult run_preset(PresetId id, const PresetOptions& opt = {}) {
    const uint64_t N = opt.limit;
    if (N < 100) throw std::invalid_argument("run_preset: limit too small to verify anything");
    PresetResult result{id, {}};

    switch (id) {
        case PresetId::phi_wintner: {
            const auto cps = opt.checkpoints.empty() ? decade_checkpoints(N) : opt.checkpoints;
            auto law = wintner_law(sieve_mobius(N), 1, opt.conv_tail_share);
            law.anchor = "M(phi,x) = 3 x^2 / pi^2 + o(x^2)";
            law.description = "M(phi,x) ~ C x^2, phi = Id * mu";
            result.reports.push_back(
                evaluate_law(law, prefix_sums(sieve_phi(N)), cps, opt.tolerances));
            break;
        }
        case PresetId::sigma_k_wintner: {
            const auto cps = opt.checkpoints.empty() ? decade_checkpoints(N) : opt.checkpoints;
            auto law = wintner_law(sieve_unit(N), opt.k, opt.conv_tail_share);
            const std::string kp1 = std::to_string(opt.k + 1);
            law.anchor = "M(sigma_" + std::to_string(opt.k) + ",x) = zeta(" + kp1 + ") x^" + kp1 +
                         "/" + kp1 + " + o(x^" + kp1 + ")";
            law.description = "M(sigma_" + std::to_string(opt.k) + ",x) ~ C x^" + kp1 +
                              ", sigma_k = Id_k * 1";
            result.reports.push_back(
                evaluate_law(law, prefix_sums(sieve_sigma_k(opt.k, N)), cps, opt.tolerances));
            break;
        }
        case PresetId::phi_over_n: {
            const auto cps = opt.checkpoints.empty() ? decade_checkpoints(N) : opt.checkpoints;
            auto law = wintner_law(scale_by_power(sieve_mobius(N), 1.0), 0, opt.conv_tail_share);
            law.anchor = "sum_{n<=x} phi(n)/n = x/zeta(2) + o(x)";
            law.description = "M(phi/Id, x) ~ C x, phi/Id = 1 * mu/Id";
            result.reports.push_back(evaluate_law(
                law, prefix_sums(scale_by_power(sieve_phi(N), 1.0)), cps, opt.tolerances));
            break;
        }
        case PresetId::logmean_3mu: {
            const auto cps = opt.checkpoints.empty() ? log_law_checkpoints(N) : opt.checkpoints;
            const auto g = scale_by_power(sieve_mobius(N), 2.0);  // mu/Id^2
            auto law = log_mean_law(g, 3.0, opt.conv_tail_share);
            law.anchor = "sum_{n<=x} (3/Id * mu/Id^2)(n) = (3/zeta(2)) ln x + o(ln x)";
            const auto f = dirichlet_convolve(detail::reciprocal_table(3.0, N), g);
            result.reports.push_back(evaluate_law(law, prefix_sums(f), cps, opt.tolerances));
            break;
        }
        case PresetId::logmean_sigma: {
            const auto cps = opt.checkpoints.empty() ? log_law_checkpoints(N) : opt.checkpoints;
            const auto g = scale_by_power(sieve_sigma_k(1, N), 3.0);  // sigma/Id^3
            auto law = log_mean_law(g, 1.0, opt.conv_tail_share);
            law.anchor = "sum_{n<=x} (1/Id * sigma/Id^3)(n) = zeta(2) zeta(3) ln x + o(ln x)";
            const auto f = dirichlet_convolve(detail::reciprocal_table(1.0, N), g);
            result.reports.push_back(evaluate_law(law, prefix_sums(f), cps, opt.tolerances));
            break;
        }
        case PresetId::kronecker_sigma_k: {
            const auto cps = opt.checkpoints.empty() ? decade_checkpoints(N) : opt.checkpoints;
            const auto f = sieve_sigma_k(opt.k, N);
            const double s = double(opt.k) + 2.0;
            // Base decay of the summatory function itself, then the family.
            auto base = little_o_law(
                s, "M(sigma_" + std::to_string(opt.k) + ",x) = o(x^" + detail::fmt(s) + ")",
                "sum f(n)/n^s converges => M(f,x) = o(x^s), f = sigma_" + std::to_string(opt.k) +
                    ", s = " + detail::fmt(s));
            result.reports.push_back(evaluate_law(base, prefix_sums(f), cps, opt.tolerances));
            auto family = kronecker_decay_family(f, s, opt.k + 1, cps, opt.tolerances,
                                                 opt.conv_tail_share, opt.div_tail_share);
            for (auto& r : family) result.reports.push_back(std::move(r));
            break;
        }
        case PresetId::harmonic_gamma: {
            const auto cps = opt.checkpoints.empty() ? log_law_checkpoints(N) : opt.checkpoints;
            auto law = log_law(1.0, "sum_{n<=x} 1/n ~ ln x + gamma",
                               "sum_{n<=x} 1/n = ln x + gamma + O(1/x)");
            const auto harmonic = scale_by_power(sieve_unit(N), 1.0);
            result.reports.push_back(evaluate_law(law, prefix_sums(harmonic), cps, opt.tolerances));
            break;
        }
    }
    return result;
}

}  // namespace dirichlet
