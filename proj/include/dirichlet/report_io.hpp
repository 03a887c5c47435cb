#pragma once

#include <cstdio>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "dirichlet/presets.hpp"
#include "dirichlet/verify.hpp"

// Report wire formats.
//
// JSON:  { "law": { "kind", "alpha", "coefficient", "paper_anchor", ... },
//          "checkpoints": [ { "x", "measured", "predicted", "deviation" } ],
//          "verdict", "tolerances": { "tolerance_final", "trend_slack" } }
//
// CSV:   header "x,measured,predicted,deviation", one checkpoint per row,
//        CRLF line endings, doubles printed with 17 significant digits.

namespace dirichlet {

inline bool operator==(const Checkpoint& a, const Checkpoint& b) {
    return a.x == b.x && a.measured == b.measured && a.predicted == b.predicted &&
           a.deviation == b.deviation;
}

inline bool operator==(const PowerLaw& a, const PowerLaw& b) {
    return a.exponent == b.exponent && a.coefficient == b.coefficient;
}
inline bool operator==(const LogLaw& a, const LogLaw& b) {
    return a.coefficient == b.coefficient && a.intercept_estimate == b.intercept_estimate;
}
inline bool operator==(const LittleO& a, const LittleO& b) { return a.exponent == b.exponent; }

inline bool operator==(const AsymptoticLaw& a, const AsymptoticLaw& b) {
    return a.kind == b.kind && a.description == b.description && a.anchor == b.anchor &&
           a.series_tail == b.series_tail;
}

inline bool operator==(const VerificationReport& a, const VerificationReport& b) {
    return a.law == b.law && a.checkpoints == b.checkpoints && a.verdict == b.verdict &&
           a.tolerance_final == b.tolerance_final && a.trend_slack == b.trend_slack;
}

// %.17g: enough digits to reproduce the double exactly
inline std::string format_double17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const AsymptoticLaw& law) {
    nlohmann::json j;
    if (const auto* pl = std::get_if<PowerLaw>(&law.kind)) {
        j["kind"] = "power-law";
        j["alpha"] = pl->exponent;
        j["coefficient"] = pl->coefficient;
    } else if (const auto* ll = std::get_if<LogLaw>(&law.kind)) {
        j["kind"] = "log-law";
        j["alpha"] = 0.0;
        j["coefficient"] = ll->coefficient;
        if (ll->intercept_estimate) j["intercept_estimate"] = *ll->intercept_estimate;
    } else {
        j["kind"] = "little-o";
        j["alpha"] = std::get<LittleO>(law.kind).exponent;
        j["coefficient"] = 0.0;
    }
    j["paper_anchor"] = law.anchor;
    j["description"] = law.description;
    j["series_tail"] = law.series_tail;
    return j;
}

inline nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json j;
    j["law"] = to_json(report.law);
    j["checkpoints"] = nlohmann::json::array();
    for (const auto& c : report.checkpoints)
        j["checkpoints"].push_back({{"x", c.x},
                                    {"measured", c.measured},
                                    {"predicted", c.predicted},
                                    {"deviation", c.deviation}});
    j["verdict"] = std::string(to_string(report.verdict));
    j["tolerances"] = {{"tolerance_final", report.tolerance_final},
                       {"trend_slack", report.trend_slack}};
    return j;
}

inline nlohmann::json to_json(const PresetResult& result) {
    if (result.reports.size() == 1) {
        nlohmann::json j = to_json(result.reports.front());
        j["preset"] = std::string(to_string(result.id));
        return j;
    }
    nlohmann::json j;
    j["preset"] = std::string(to_string(result.id));
    j["verdict"] = std::string(to_string(result.verdict()));
    j["reports"] = nlohmann::json::array();
    for (const auto& r : result.reports) j["reports"].push_back(to_json(r));
    return j;
}

inline AsymptoticLaw law_from_json(const nlohmann::json& j) {
    AsymptoticLaw law;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "power-law") {
        law.kind = PowerLaw{j.at("alpha").get<double>(), j.at("coefficient").get<double>()};
    } else if (kind == "log-law") {
        LogLaw ll{j.at("coefficient").get<double>(), std::nullopt};
        if (j.contains("intercept_estimate"))
            ll.intercept_estimate = j.at("intercept_estimate").get<double>();
        law.kind = ll;
    } else if (kind == "little-o") {
        law.kind = LittleO{j.at("alpha").get<double>()};
    } else {
        throw std::invalid_argument("law_from_json: unknown kind '" + kind + "'");
    }
    law.anchor = j.at("paper_anchor").get<std::string>();
    law.description = j.value("description", std::string{});
    law.series_tail = j.value("series_tail", 0.0);
    return law;
}

inline Verdict verdict_from_string(std::string_view s) {
    if (s == "pass") return Verdict::pass;
    if (s == "fail") return Verdict::fail;
    if (s == "inconclusive") return Verdict::inconclusive;
    throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.law = law_from_json(j.at("law"));
    for (const auto& c : j.at("checkpoints"))
        r.checkpoints.push_back({c.at("x").get<uint64_t>(), c.at("measured").get<double>(),
                                 c.at("predicted").get<double>(), c.at("deviation").get<double>()});
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.tolerance_final = j.at("tolerances").at("tolerance_final").get<double>();
    r.trend_slack = j.at("tolerances").at("trend_slack").get<double>();
    return r;
}

// ---------------------------------------------------------------------------
// CSV (RFC 4180 line conventions: CRLF, header row)
// ---------------------------------------------------------------------------

inline void write_checkpoints_csv(std::ostream& os, std::span<const VerificationReport> reports) {
    os << "x,measured,predicted,deviation\r\n";
    for (const auto& r : reports)
        for (const auto& c : r.checkpoints)
            os << c.x << ',' << format_double17(c.measured) << ',' << format_double17(c.predicted)
               << ',' << format_double17(c.deviation) << "\r\n";
}

inline void write_checkpoints_csv(std::ostream& os, const VerificationReport& report) {
    write_checkpoints_csv(os, std::span<const VerificationReport>(&report, 1));
}

// ---------------------------------------------------------------------------
// Plain-text rendering for terminals
// ---------------------------------------------------------------------------

inline void write_report_text(std::ostream& os, const VerificationReport& r) {
    os << r.law.description << "\n  claim: " << r.law.anchor << "\n";
    if (const auto* ll = std::get_if<LogLaw>(&r.law.kind); ll && ll->intercept_estimate)
        os << "  intercept estimate B = " << format_double17(*ll->intercept_estimate) << "\n";
    char line[160];
    for (const auto& c : r.checkpoints) {
        std::snprintf(line, sizeof line, "  x = %-10llu measured = %-22.15g deviation = %.6g\n",
                      static_cast<unsigned long long>(c.x), c.measured, c.deviation);
        os << line;
    }
    os << "  verdict: " << to_string(r.verdict) << "  (tolerance " << r.tolerance_final
       << ", trend slack " << r.trend_slack << ")\n";
}

}  // namespace dirichlet
