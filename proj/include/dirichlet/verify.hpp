#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dirichlet/functions.hpp"
#include "dirichlet/sums.hpp"

// Asymptotic-law verification.  A law is a predicted leading term:
//
//   PowerLaw:  M(f,x) = C x^alpha + o(x^alpha)
//   LogLaw:    S(x)   = A ln x (+ B) + o(ln x)
//   LittleO:   S(x)   = o(x^alpha)
//
// evaluate_law measures S at geometric checkpoints and issues a verdict.
// The o(.) claims are untestable at any finite x; they are operationalized
// as a final relative deviation below tolerance plus a monotone-trend
// requirement (PowerLaw), a difference-quotient match (LogLaw, which
// cancels the intercept B), and a decade-decay ratio (LittleO).  Series
// convergence/divergence hypotheses are operationalized as decade-tail
// contribution tests.  All thresholds are defaults and overridable.

namespace dirichlet {

// thrown when a law's series hypothesis fails its numerical test
class precondition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Last-decade share used to accept "sum converges" at the table limit.
inline constexpr double kConvergenceTailShare = 1e-4;
// Last-decade share required to accept "sum diverges".
inline constexpr double kDivergenceTailShare = 0.1;

struct PowerLaw {
    double exponent;     // alpha > 0
    double coefficient;  // C, finite and nonzero
};

struct LogLaw {
    double coefficient;                       // A (total, e.g. A * sum g(n))
    std::optional<double> intercept_estimate; // B-hat, filled by evaluate_law
};

struct LittleO {
    double exponent;  // alpha > 0
};

struct AsymptoticLaw {
    std::variant<PowerLaw, LogLaw, LittleO> kind;
    std::string description;
    std::string anchor;       // the claimed formula, carried into reports
    double series_tail = 0.0; // last-decade magnitude of the truncated coefficient series
};

inline AsymptoticLaw power_law(double exponent, double coefficient, std::string description,
                               std::string anchor, double series_tail = 0.0) {
    if (!(exponent > 0.0))
        throw std::invalid_argument("power_law: exponent must be > 0");
    if (!std::isfinite(coefficient) || coefficient == 0.0)
        throw std::invalid_argument("power_law: coefficient must be finite and nonzero");
    return {PowerLaw{exponent, coefficient}, std::move(description), std::move(anchor), series_tail};
}

inline AsymptoticLaw log_law(double coefficient, std::string description, std::string anchor,
                             double series_tail = 0.0) {
    if (!std::isfinite(coefficient))
        throw std::invalid_argument("log_law: coefficient must be finite");
    return {LogLaw{coefficient, std::nullopt}, std::move(description), std::move(anchor),
            series_tail};
}

inline AsymptoticLaw little_o_law(double exponent, std::string description, std::string anchor) {
    if (!(exponent > 0.0))
        throw std::invalid_argument("little_o_law: exponent must be > 0");
    return {LittleO{exponent}, std::move(description), std::move(anchor), 0.0};
}

struct Checkpoint {
    uint64_t x;
    double measured;
    double predicted;
    double deviation;  // relative for PowerLaw/LogLaw; |measured|/x^alpha for LittleO
};

enum class Verdict { pass, fail, inconclusive };

constexpr std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "inconclusive";
    }
}

struct Tolerances {
    double power_tol = 1e-3;       // final relative deviation, PowerLaw
    double log_tol = 1e-2;         // difference-quotient relative deviation, LogLaw
    double decay_threshold = 0.1;  // r_last/r_first, LittleO
    double trend_slack = 1.5;      // allowed growth factor between consecutive deviations
};

struct VerificationReport {
    AsymptoticLaw law;
    std::vector<Checkpoint> checkpoints;  // strictly increasing in x
    Verdict verdict;
    double tolerance_final;  // the threshold the verdict used
    double trend_slack;
};

// ---------------------------------------------------------------------------
// Series-hypothesis tests
// ---------------------------------------------------------------------------

namespace detail {

struct SeriesScan {
    double abs_total = 0.0;        // sum |w_n|, n <= N
    double abs_last_decade = 0.0;  // sum |w_n|, N/10 < n <= N
    double signed_total = 0.0;
    double signed_last_decade = 0.0;
};

// w_n = value(n) / n^exponent over the whole table
template <class ValueAt>
SeriesScan scan_weighted_series(ValueAt value, uint64_t N, double exponent) {
    KahanSum abs_total, abs_decade, signed_total, signed_decade;
    const uint64_t decade_start = N / 10;  // decade is (N/10, N]
    for (uint64_t n = 1; n <= N; ++n) {
        const double w = double(value(n)) / std::pow(double(n), exponent);
        abs_total.add(std::abs(w));
        signed_total.add(w);
        if (n > decade_start) {
            abs_decade.add(std::abs(w));
            signed_decade.add(w);
        }
    }
    return {abs_total.sum, abs_decade.sum, signed_total.sum, signed_decade.sum};
}

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

template <class ValueAt>
AsymptoticLaw wintner_law_impl(ValueAt value, const std::string& gname, uint64_t N, uint32_t s,
                               double tail_share) {
    const auto scan = scan_weighted_series(value, N, double(s) + 1.0);
    if (scan.abs_total <= 0.0)
        throw precondition_error("wintner_law: sum |g(n)|/n^" + std::to_string(s + 1) +
                                 " is identically zero, no law to build");
    const double share = scan.abs_last_decade / scan.abs_total;
    if (!(share < tail_share))
        throw precondition_error(
            "wintner_law: hypothesis sum |g(n)|/n^" + std::to_string(s + 1) +
            " < inf fails the convergence test: last decade contributes " + fmt(share) +
            " of the total (limit " + fmt(tail_share) + ")");
    const double coeff = scan.signed_total / (double(s) + 1.0);
    if (coeff == 0.0)
        throw precondition_error("wintner_law: coefficient series sums to zero");
    const std::string alpha = std::to_string(s + 1);
    return power_law(double(s) + 1.0, coeff,
                     "M(Id_" + std::to_string(s) + "*" + gname + ", x) ~ C x^" + alpha,
                     "M(f,x) = x^" + alpha + "/" + alpha + " * sum g(n)/n^" + alpha +
                         " + o(x^" + alpha + "), g = " + gname,
                     scan.abs_last_decade);
}

template <class ValueAt>
AsymptoticLaw log_mean_law_impl(ValueAt value, const std::string& gname, uint64_t N, double A,
                                double tail_share) {
    const auto scan = scan_weighted_series(value, N, 0.0);
    if (scan.abs_total > 0.0) {
        const double share = scan.abs_last_decade / scan.abs_total;
        if (!(share < tail_share))
            throw precondition_error(
                "log_mean_law: hypothesis sum |g(n)| < inf fails the convergence test: "
                "last decade contributes " + fmt(share) + " of the total (limit " +
                fmt(tail_share) + ")");
    }
    return log_law(A * scan.signed_total,
                   "sum_{n<=x} (" + fmt(A) + "/Id * " + gname + ")(n) ~ A ln x",
                   "S(x) = A ln x * sum g(n) + o(ln x), g = " + gname + ", A = " + fmt(A),
                   scan.abs_last_decade);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Law constructors from tables
// ---------------------------------------------------------------------------

// f = Id_s * g with sum |g(n)|/n^(s+1) < inf gives
// M(f,x) = x^(s+1)/(s+1) * sum g(n)/n^(s+1) + o(x^(s+1)); s = 0 is the
// classical linear asymptotic mean.
inline AsymptoticLaw wintner_law(const IntFunctionTable& g, uint32_t s,
                                 double tail_share = kConvergenceTailShare) {
    return detail::wintner_law_impl([v = g.values()](uint64_t n) { return double(v[n - 1]); },
                                    g.name(), g.limit(), s, tail_share);
}

inline AsymptoticLaw wintner_law(const RealFunctionTable& g, uint32_t s,
                                 double tail_share = kConvergenceTailShare) {
    return detail::wintner_law_impl([v = g.values()](uint64_t n) { return v[n - 1]; }, g.name(),
                                    g.limit(), s, tail_share);
}

// f = (A/Id) * g with sum |g(n)| < inf gives S(x) = A ln x * sum g(n) + o(ln x).
inline AsymptoticLaw log_mean_law(const IntFunctionTable& g, double A,
                                  double tail_share = kConvergenceTailShare) {
    return detail::log_mean_law_impl([v = g.values()](uint64_t n) { return double(v[n - 1]); },
                                     g.name(), g.limit(), A, tail_share);
}

inline AsymptoticLaw log_mean_law(const RealFunctionTable& g, double A,
                                  double tail_share = kConvergenceTailShare) {
    return detail::log_mean_law_impl([v = g.values()](uint64_t n) { return v[n - 1]; }, g.name(),
                                     g.limit(), A, tail_share);
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace detail {

inline void require_checkpoints(std::span<const uint64_t> xs) {
    if (xs.size() < 3)
        throw std::invalid_argument("evaluate_law: need at least 3 checkpoints");
    for (size_t i = 1; i < xs.size(); ++i)
        if (xs[i] <= xs[i - 1])
            throw std::invalid_argument("evaluate_law: checkpoints must be strictly increasing");
}

// PowerLaw trend rule: over the last (up to) four checkpoints, the step
// dev_i <= slack * dev_{i-1} may fail at most once.
inline bool trend_holds(std::span<const Checkpoint> cps, double slack) {
    const size_t n = cps.size();
    const size_t window = std::min<size_t>(4, n);
    int violations = 0;
    for (size_t i = n - window + 1; i < n; ++i)
        if (!(cps[i].deviation <= slack * cps[i - 1].deviation)) ++violations;
    return violations <= 1;
}

}  // namespace detail

template <class Provider>
    requires std::invocable<Provider&, uint64_t>
VerificationReport evaluate_law(const AsymptoticLaw& law, Provider&& measured_at,
                                std::span<const uint64_t> checkpoints,
                                const Tolerances& tols = {}) {
    detail::require_checkpoints(checkpoints);

    std::vector<double> measured(checkpoints.size());
    for (size_t i = 0; i < checkpoints.size(); ++i) {
        measured[i] = measured_at(checkpoints[i]);
        if (!std::isfinite(measured[i]))
            throw std::runtime_error("evaluate_law: non-finite measured value at x = " +
                                     std::to_string(checkpoints[i]));
    }

    VerificationReport report;
    report.law = law;
    report.trend_slack = tols.trend_slack;
    report.checkpoints.reserve(checkpoints.size());

    if (const auto* pl = std::get_if<PowerLaw>(&law.kind)) {
        for (size_t i = 0; i < checkpoints.size(); ++i) {
            const double pred = pl->coefficient * std::pow(double(checkpoints[i]), pl->exponent);
            const double dev = std::abs(measured[i] / pred - 1.0);
            report.checkpoints.push_back({checkpoints[i], measured[i], pred, dev});
        }
        report.tolerance_final = tols.power_tol;
        const bool final_ok = report.checkpoints.back().deviation <= tols.power_tol;
        const bool trend_ok = detail::trend_holds(report.checkpoints, tols.trend_slack);
        report.verdict = final_ok ? (trend_ok ? Verdict::pass : Verdict::inconclusive)
                                  : Verdict::fail;
    } else if (const auto* ll = std::get_if<LogLaw>(&law.kind)) {
        const size_t n = checkpoints.size();
        const double lx1 = std::log(double(checkpoints[n - 2]));
        const double lx2 = std::log(double(checkpoints[n - 1]));
        // Difference quotient over the last pair cancels the intercept B.
        const double a_hat = (measured[n - 1] - measured[n - 2]) / (lx2 - lx1);
        const double b_hat = measured[n - 1] - a_hat * lx2;
        std::get<LogLaw>(report.law.kind).intercept_estimate = b_hat;
        for (size_t i = 0; i < n; ++i) {
            const double pred = ll->coefficient * std::log(double(checkpoints[i])) + b_hat;
            const double dev =
                pred != 0.0 ? std::abs(measured[i] / pred - 1.0) : std::abs(measured[i]);
            report.checkpoints.push_back({checkpoints[i], measured[i], pred, dev});
        }
        report.tolerance_final = tols.log_tol;
        const double quotient_dev = ll->coefficient != 0.0
                                        ? std::abs(a_hat / ll->coefficient - 1.0)
                                        : std::abs(a_hat);
        report.verdict = quotient_dev <= tols.log_tol ? Verdict::pass : Verdict::fail;
    } else {
        const auto& lo = std::get<LittleO>(law.kind);
        for (size_t i = 0; i < checkpoints.size(); ++i) {
            const double r = std::abs(measured[i]) / std::pow(double(checkpoints[i]), lo.exponent);
            report.checkpoints.push_back({checkpoints[i], measured[i], 0.0, r});
        }
        report.tolerance_final = tols.decay_threshold;
        const double r_first = report.checkpoints.front().deviation;
        const double r_last = report.checkpoints.back().deviation;
        const bool ok = (r_first == 0.0) ? (r_last == 0.0)
                                         : (r_last / r_first <= tols.decay_threshold);
        report.verdict = ok ? Verdict::pass : Verdict::fail;
    }
    return report;
}

inline VerificationReport evaluate_law(const AsymptoticLaw& law, const PrefixSums& sums,
                                       std::span<const uint64_t> checkpoints,
                                       const Tolerances& tols = {}) {
    return evaluate_law(law, [&](uint64_t x) { return sums.at(x); }, checkpoints, tols);
}

// ---------------------------------------------------------------------------
// Kronecker decay family: sum f(n)/n^s converges, sum f(n)/n^(s-1) diverges,
// hence sum_{n<=x} f(n)/n^k = o(x^(s-k)) for k = 1..k_max, and
// sum_{n<=x} f(n)/n^(s-k) = o(x^k).  All measured sums go through the Abel
// route.  The returned list holds the k = 1..k_max reports followed by the
// fractional-weight report at k = k_max.
// ---------------------------------------------------------------------------

inline std::vector<VerificationReport> kronecker_decay_family(
    const IntFunctionTable& f, double s, uint32_t k_max, std::span<const uint64_t> checkpoints,
    const Tolerances& tols = {}, double conv_tail_share = kConvergenceTailShare,
    double div_tail_share = kDivergenceTailShare) {
    if (k_max < 1) throw std::invalid_argument("kronecker_decay_family: k_max must be >= 1");
    if (!(s - double(k_max) > 0.0))
        throw std::invalid_argument("kronecker_decay_family: need s - k_max > 0");

    const auto values = f.values();
    auto value_at = [values](uint64_t n) { return double(values[n - 1]); };

    const auto conv = detail::scan_weighted_series(value_at, f.limit(), s);
    if (conv.abs_total <= 0.0)
        throw precondition_error("kronecker_decay_family: sum f(n)/n^s is identically zero");
    const double conv_share = conv.abs_last_decade / conv.abs_total;
    if (!(conv_share < conv_tail_share))
        throw precondition_error(
            "kronecker_decay_family: hypothesis sum f(n)/n^" + detail::fmt(s) +
            " converges fails the tail test: last decade contributes " + detail::fmt(conv_share) +
            " of the total (limit " + detail::fmt(conv_tail_share) + ")");

    const auto div = detail::scan_weighted_series(value_at, f.limit(), s - 1.0);
    const double div_share = div.signed_total != 0.0
                                 ? std::abs(div.signed_last_decade) / std::abs(div.signed_total)
                                 : 0.0;
    if (!(div_share > div_tail_share))
        throw precondition_error(
            "kronecker_decay_family: hypothesis sum f(n)/n^" + detail::fmt(s - 1.0) +
            " diverges fails the tail test: last decade contributes only " +
            detail::fmt(div_share) + " of the running total (needs > " +
            detail::fmt(div_tail_share) + ")");

    const PrefixSums B = prefix_sums(f);
    std::vector<VerificationReport> reports;
    reports.reserve(k_max + 1);
    for (uint32_t k = 1; k <= k_max; ++k) {
        const auto law = little_o_law(
            s - double(k),
            "sum_{n<=x} " + f.name() + "(n)/n^" + std::to_string(k) + " = o(x^" +
                detail::fmt(s - double(k)) + ")",
            "sum_{n<=x} f(n)/n^" + std::to_string(k) + " = o(x^(s-" + std::to_string(k) +
                ")), f = " + f.name() + ", s = " + detail::fmt(s));
        reports.push_back(evaluate_law(
            law, [&, k](uint64_t x) { return abel_partial_sum(B, double(k), x); }, checkpoints,
            tols));
    }
    {
        const double w = s - double(k_max);
        const auto law = little_o_law(
            double(k_max),
            "sum_{n<=x} " + f.name() + "(n)/n^" + detail::fmt(w) + " = o(x^" +
                std::to_string(k_max) + ")",
            "sum_{n<=x} f(n)/n^(s-k) = o(x^k), f = " + f.name() + ", s = " + detail::fmt(s) +
                ", k = " + std::to_string(k_max));
        reports.push_back(evaluate_law(
            law, [&, w](uint64_t x) { return abel_partial_sum(B, w, x); }, checkpoints, tols));
    }
    return reports;
}

}  // namespace dirichlet
