// dirichlet-lab: arithmetic-function tables, Dirichlet convolutions,
// summatory/partial sums, zeta/gamma constants, and asymptotic-law
// verification with CSV/JSON reports.
//
// Exit codes: 0 ok/pass, 2 verification failed, 3 inconclusive or a series
// hypothesis failed its numerical test, 64 usage error, 70 numeric/overflow.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "dirichlet/constants.hpp"
#include "dirichlet/convolution.hpp"
#include "dirichlet/functions.hpp"
#include "dirichlet/presets.hpp"
#include "dirichlet/report_io.hpp"
#include "dirichlet/sums.hpp"
#include "dirichlet/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitUsage = 64;
constexpr int kExitNumeric = 70;

uint64_t default_limit() {
    if (const char* env = std::getenv("DIRICHLET_LAB_LIMIT")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return v;
        throw std::invalid_argument("DIRICHLET_LAB_LIMIT is not a positive integer");
    }
    return 1'000'000;
}

using AnyTable = std::variant<dirichlet::IntFunctionTable, dirichlet::RealFunctionTable>;

dirichlet::IntFunctionTable build_int_table(const std::string& fn, uint32_t k, uint64_t N) {
    using namespace dirichlet;
    if (fn == "unit" || fn == "one" || fn == "1") return sieve_unit(N);
    if (fn == "id") return sieve_id_pow(k, N);
    if (fn == "mu" || fn == "mobius") return sieve_mobius(N);
    if (fn == "phi") return sieve_phi(N);
    if (fn == "sigma") return sieve_sigma_k(k, N);
    if (fn == "eps" || fn == "epsilon") return epsilon_table(N);
    throw std::invalid_argument("unknown function '" + fn +
                                "' (expected unit|id|mu|phi|sigma|eps)");
}

AnyTable build_table(const std::string& fn, uint32_t k, double scale, uint64_t N) {
    auto t = build_int_table(fn, k, N);
    if (scale == 0.0) return t;
    return dirichlet::scale_by_power(t, scale);
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);  // binary keeps CRLF intact on all platforms
    if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
    return file;
}

void write_table_csv(std::ostream& os, const AnyTable& table) {
    os << "n,value\r\n";
    std::visit(
        [&](const auto& t) {
            for (uint64_t n = 1; n <= t.limit(); ++n) {
                if constexpr (std::is_same_v<std::decay_t<decltype(t(n))>, double>)
                    os << n << ',' << dirichlet::format_double17(t(n)) << "\r\n";
                else
                    os << n << ',' << t(n) << "\r\n";
            }
        },
        table);
}

int verdict_exit(dirichlet::Verdict v) {
    switch (v) {
        case dirichlet::Verdict::pass: return kExitPass;
        case dirichlet::Verdict::fail: return kExitFail;
        default: return kExitInconclusive;
    }
}

void emit_preset(std::ostream& os, const dirichlet::PresetResult& result,
                 const std::string& format) {
    if (format == "json") {
        os << dirichlet::to_json(result).dump(2) << "\n";
    } else if (format == "csv") {
        dirichlet::write_checkpoints_csv(os, result.reports);
    } else {
        for (const auto& r : result.reports) dirichlet::write_report_text(os, r);
        os << "overall: " << dirichlet::to_string(result.verdict()) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    using namespace dirichlet;

    CLI::App app{"dirichlet-lab: arithmetic-function asymptotics at desk scale"};
    app.require_subcommand(1);

    // ---- gen ----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "emit a function table as CSV");
    std::string gen_fn = "unit", gen_out;
    uint32_t gen_k = 1;
    double gen_scale = 0.0;
    uint64_t gen_limit = 0;
    gen->add_option("--fn", gen_fn, "unit|id|mu|phi|sigma|eps")->required();
    gen->add_option("--k", gen_k, "exponent for id / order for sigma");
    gen->add_option("--scale", gen_scale, "divide by n^s (real output)");
    gen->add_option("--limit,-N", gen_limit, "table limit N");
    gen->add_option("--out,-o", gen_out, "output file (default stdout)");

    // ---- convolve -----------------------------------------------------
    auto* conv = app.add_subcommand("convolve", "Dirichlet convolution of two tables, CSV output");
    std::string conv_lhs = "unit", conv_rhs = "unit", conv_out;
    uint32_t conv_lhs_k = 1, conv_rhs_k = 1;
    double conv_lhs_scale = 0.0, conv_rhs_scale = 0.0;
    uint64_t conv_limit = 0;
    conv->add_option("--lhs", conv_lhs, "left function")->required();
    conv->add_option("--rhs", conv_rhs, "right function")->required();
    conv->add_option("--lhs-k", conv_lhs_k, "k for the left function");
    conv->add_option("--rhs-k", conv_rhs_k, "k for the right function");
    conv->add_option("--lhs-scale", conv_lhs_scale, "scale left by n^-s");
    conv->add_option("--rhs-scale", conv_rhs_scale, "scale right by n^-s");
    conv->add_option("--limit,-N", conv_limit, "table limit N");
    conv->add_option("--out,-o", conv_out, "output file (default stdout)");

    // ---- sum ----------------------------------------------------------
    auto* sum = app.add_subcommand("sum", "sum_{n<=x} f(n)/n^s as a single value");
    std::string sum_fn = "unit", sum_method = "direct";
    uint32_t sum_k = 1;
    double sum_s = 0.0, sum_scale = 0.0;
    uint64_t sum_x = 0, sum_limit = 0;
    sum->add_option("--fn", sum_fn, "unit|id|mu|phi|sigma|eps")->required();
    sum->add_option("--k", sum_k, "exponent for id / order for sigma");
    sum->add_option("--scale", sum_scale, "pre-scale the table by n^-s");
    sum->add_option("--s", sum_s, "Dirichlet exponent s (default 0 = summatory M(f,x))");
    sum->add_option("--x", sum_x, "upper limit x (default: table limit)");
    sum->add_option("--limit,-N", sum_limit, "table limit N");
    sum->add_option("--method", sum_method, "direct|abel")
        ->check(CLI::IsMember({"direct", "abel"}));

    // ---- series -------------------------------------------------------
    auto* series = app.add_subcommand("series", "partial Dirichlet sums at checkpoints");
    std::string series_fn = "unit", series_format = "csv", series_out;
    uint32_t series_k = 1;
    double series_s = 0.0, series_scale = 0.0;
    uint64_t series_limit = 0;
    std::vector<uint64_t> series_cps;
    series->add_option("--fn", series_fn, "unit|id|mu|phi|sigma|eps")->required();
    series->add_option("--k", series_k, "exponent for id / order for sigma");
    series->add_option("--scale", series_scale, "pre-scale the table by n^-s");
    series->add_option("--s", series_s, "Dirichlet exponent s");
    series->add_option("--limit,-N", series_limit, "table limit N");
    series->add_option("--checkpoints", series_cps, "x values (default: decades)")
        ->delimiter(',');
    series->add_option("--format", series_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    series->add_option("--out,-o", series_out, "output file (default stdout)");

    // ---- verify -------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "verify an asymptotic law (preset or custom)");
    std::string verify_target, verify_format = "text", verify_out;
    uint64_t verify_limit = 0;
    uint32_t verify_k = 1;
    std::vector<uint64_t> verify_cps;
    std::optional<double> verify_tol;
    std::optional<double> verify_decay;
    std::optional<double> verify_slack;
    std::optional<double> verify_conv_tail;
    std::string custom_law = "power", custom_fn = "unit";
    uint32_t custom_fn_k = 1;
    double custom_alpha = 1.0, custom_coefficient = 1.0, custom_scale = 0.0;
    verify
        ->add_option("preset", verify_target,
                     "phi-wintner|sigma-k-wintner|phi-over-n|logmean-3mu|logmean-sigma|"
                     "kronecker-sigma-k|harmonic-gamma|all|custom")
        ->required();
    verify->add_option("--limit,-N", verify_limit, "table limit N");
    verify->add_option("--k", verify_k, "k for the sigma presets");
    verify->add_option("--checkpoints", verify_cps, "checkpoint grid")->delimiter(',');
    verify->add_option("--tol", verify_tol, "final tolerance override");
    verify->add_option("--decay-threshold", verify_decay, "little-o decay threshold override");
    verify->add_option("--trend-slack", verify_slack, "trend slack override");
    verify->add_option("--conv-tail", verify_conv_tail,
                       "convergence decade-tail share override");
    verify->add_option("--format", verify_format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--out,-o", verify_out, "output file (default stdout)");
    verify->add_option("--law", custom_law, "custom: power|log|little-o")
        ->check(CLI::IsMember({"power", "log", "little-o"}));
    verify->add_option("--alpha", custom_alpha, "custom: exponent");
    verify->add_option("--coefficient", custom_coefficient, "custom: coefficient");
    verify->add_option("--fn", custom_fn, "custom: measured function");
    verify->add_option("--fn-k", custom_fn_k, "custom: k for the measured function");
    verify->add_option("--scale", custom_scale, "custom: pre-scale the table by n^-s");

    // ---- constants ----------------------------------------------------
    auto* consts = app.add_subcommand("constants", "print zeta values and gamma");
    std::vector<double> const_zeta_args;
    bool const_gamma = false;
    double const_tol = 1e-12;
    consts->add_option("--zeta", const_zeta_args, "zeta at these s values")
        ->delimiter(',');
    consts->add_flag("--gamma", const_gamma, "print the Euler-Mascheroni constant");
    consts->add_option("--tol", const_tol, "error-bound target");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*gen) {
            const uint64_t N = gen_limit ? gen_limit : default_limit();
            std::ofstream file;
            write_table_csv(open_output(gen_out, file), build_table(gen_fn, gen_k, gen_scale, N));
            return kExitPass;
        }

        if (*conv) {
            const uint64_t N = conv_limit ? conv_limit : default_limit();
            const AnyTable lhs = build_table(conv_lhs, conv_lhs_k, conv_lhs_scale, N);
            const AnyTable rhs = build_table(conv_rhs, conv_rhs_k, conv_rhs_scale, N);
            const AnyTable out = std::visit(
                [](const auto& a, const auto& b) -> AnyTable { return dirichlet_convolve(a, b); },
                lhs, rhs);
            std::ofstream file;
            write_table_csv(open_output(conv_out, file), out);
            return kExitPass;
        }

        if (*sum) {
            const uint64_t N = sum_limit ? sum_limit : std::max(default_limit(), sum_x);
            const uint64_t x = sum_x ? sum_x : N;
            const AnyTable t = build_table(sum_fn, sum_k, sum_scale, N);
            const double value = std::visit(
                [&](const auto& table) {
                    return sum_method == "abel" ? abel_partial_sum(table, sum_s, x)
                                                : dirichlet_partial_sum(table, sum_s, x);
                },
                t);
            std::cout << format_double17(value) << "\n";
            return kExitPass;
        }

        if (*series) {
            const uint64_t N = series_limit ? series_limit : default_limit();
            const AnyTable t = build_table(series_fn, series_k, series_scale, N);
            const auto cps = series_cps.empty() ? decade_checkpoints(N) : series_cps;
            std::ofstream file;
            std::ostream& os = open_output(series_out, file);
            if (series_format == "json") {
                nlohmann::json j;
                j["fn"] = std::visit([](const auto& tb) { return tb.name(); }, t);
                j["s"] = series_s;
                j["values"] = nlohmann::json::array();
                for (uint64_t x : cps) {
                    const double v = std::visit(
                        [&](const auto& tb) { return dirichlet_partial_sum(tb, series_s, x); }, t);
                    j["values"].push_back({{"x", x}, {"value", v}});
                }
                os << j.dump(2) << "\n";
            } else {
                os << "x,value\r\n";
                for (uint64_t x : cps) {
                    const double v = std::visit(
                        [&](const auto& tb) { return dirichlet_partial_sum(tb, series_s, x); }, t);
                    os << x << ',' << format_double17(v) << "\r\n";
                }
            }
            return kExitPass;
        }

        if (*verify) {
            PresetOptions opt;
            opt.limit = verify_limit ? verify_limit : default_limit();
            opt.k = verify_k;
            opt.checkpoints = verify_cps;
            if (verify_tol) {
                opt.tolerances.power_tol = *verify_tol;
                opt.tolerances.log_tol = *verify_tol;
            }
            if (verify_decay) opt.tolerances.decay_threshold = *verify_decay;
            if (verify_slack) opt.tolerances.trend_slack = *verify_slack;
            if (verify_conv_tail) opt.conv_tail_share = *verify_conv_tail;

            std::ofstream file;
            std::ostream& os = open_output(verify_out, file);

            if (verify_target == "custom") {
                AsymptoticLaw law = custom_law == "power"
                                        ? power_law(custom_alpha, custom_coefficient,
                                                    "custom power law", "user-specified")
                                    : custom_law == "log"
                                        ? log_law(custom_coefficient, "custom log law",
                                                  "user-specified")
                                        : little_o_law(custom_alpha, "custom little-o law",
                                                       "user-specified");
                const AnyTable t = build_table(custom_fn, custom_fn_k, custom_scale, opt.limit);
                const PrefixSums sums =
                    std::visit([](const auto& tb) { return prefix_sums(tb); }, t);
                const auto cps =
                    opt.checkpoints.empty() ? decade_checkpoints(opt.limit) : opt.checkpoints;
                const auto report = evaluate_law(law, sums, cps, opt.tolerances);
                if (verify_format == "json")
                    os << to_json(report).dump(2) << "\n";
                else if (verify_format == "csv")
                    write_checkpoints_csv(os, report);
                else
                    write_report_text(os, report);
                return verdict_exit(report.verdict);
            }

            if (verify_target == "all") {
                Verdict worst = Verdict::pass;
                nlohmann::json all = nlohmann::json::array();
                for (PresetId id : all_presets()) {
                    const auto result = run_preset(id, opt);
                    if (verify_format == "json")
                        all.push_back(to_json(result));
                    else
                        emit_preset(os, result, verify_format);
                    const Verdict v = result.verdict();
                    if (v == Verdict::fail) worst = Verdict::fail;
                    else if (v == Verdict::inconclusive && worst == Verdict::pass)
                        worst = Verdict::inconclusive;
                }
                if (verify_format == "json") os << all.dump(2) << "\n";
                return verdict_exit(worst);
            }

            const auto result = run_preset(preset_from_string(verify_target), opt);
            emit_preset(os, result, verify_format);
            return verdict_exit(result.verdict());
        }

        if (*consts) {
            for (double s : const_zeta_args) {
                const auto z = zeta(s, const_tol);
                std::cout << "zeta(" << s << ") = " << format_double17(z.value)
                          << " (error <= " << format_double17(z.error_bound) << ", "
                          << to_string(z.method) << ")\n";
            }
            if (const_gamma) {
                const auto g = euler_gamma(const_tol);
                std::cout << "gamma = " << format_double17(g.value) << " (error <= "
                          << format_double17(g.error_bound) << ", " << to_string(g.method)
                          << ")\n";
            }
            if (const_zeta_args.empty() && !const_gamma)
                throw CLI::ValidationError("constants", "nothing requested: use --zeta and/or --gamma");
            return kExitPass;
        }
    } catch (const precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const std::overflow_error& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitPass;
}
