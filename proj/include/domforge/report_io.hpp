#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "domforge/dompoly.hpp"
#include "domforge/rational.hpp"
#include "domforge/verify.hpp"

namespace domforge {

using json = nlohmann::ordered_json;

// Every numeric value is emitted as a native integer or a decimal string:
// report payloads never contain floating point.

inline json poly_to_json(const DomPolynomial& p) {
    json arr = json::array();
    for (const BigInt& c : p.coeffs) arr.push_back(c.to_string());
    return arr;
}

inline json rational_to_json(const Rational& r) {
    return json{{"num", r.num().to_string()}, {"den", r.den().to_string()}};
}

inline json bound_report_to_json(const BoundReport& r) {
    json j;
    j["n"] = r.n;
    j["lhs"] = r.lhs.to_string();
    j["rhs"] = r.rhs.to_string();
    j["status"] = bound_status_name(r.status);
    j["avd"] = rational_to_json(r.avd_value);
    j["extremal_shape"] = r.extremal_shape;
    return j;
}

// timing is off by default so reports are byte-identical across runs and
// worker counts; pass include_timing for wall-clock numbers
inline json sweep_report_to_json(const SweepReport& r, bool include_timing = false) {
    json j;
    j["family"] = r.family;
    j["n"] = r.n;
    j["total"] = r.total;
    j["violations"] = r.violations;
    j["equality_cases"] = r.equality_cases;
    j["mismatches"] = r.mismatches;
    if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline json conjecture_report_to_json(const ConjectureReport& r, bool include_timing = false) {
    json j;
    j["conjecture"] = "edge-removal";
    j["mode"] = r.mode;
    j["n"] = r.n;
    j["tested"] = r.tested;
    json arr = json::array();
    for (const ConjectureFinding& f : r.counterexamples)
        arr.push_back(json{{"canonical", f.canonical}, {"graph6", f.graph6}, {"detail", f.detail}});
    j["counterexamples"] = arr;
    if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline json lemma_suite_report_to_json(const LemmaSuiteReport& r, bool include_timing = false) {
    json j;
    j["suite"] = r.name;
    j["checked"] = r.checked;
    j["gated"] = r.gated;
    j["failures"] = r.failures;
    if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

// per-graph CSV rows matching BoundReport fields
inline void write_bound_csv_header(std::ostream& os) {
    os << "canonical,n,d1,dp1,avd_num,avd_den,status,extremal_shape\n";
}

inline void write_bound_csv_row(std::ostream& os, const std::string& canonical,
                                const BoundReport& r, const EvalPair& e) {
    os << canonical << ',' << r.n << ',' << e.d1.to_string() << ',' << e.dp1.to_string() << ','
       << r.avd_value.num().to_string() << ',' << r.avd_value.den().to_string() << ','
       << bound_status_name(r.status) << ',' << (r.extremal_shape ? "true" : "false") << '\n';
}

}  // namespace domforge
