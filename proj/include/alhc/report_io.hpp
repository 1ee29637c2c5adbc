#pragma once

// Text forms of identity reports: one record per check as plain text, a JSON
// line, or a CSV row. Coefficients print in full as decimal strings.

#include "alhc/identities.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace alhc {

inline std::string params_to_string(const Params& params) {
    std::string s;
    for (const auto& [name, value] : params) {
        if (!s.empty()) s += ' ';
        s += name + "=" + std::to_string(value);
    }
    return s;
}

inline std::string report_plain(const IdentityReport& r) {
    std::ostringstream out;
    out << (r.passed ? "pass" : "FAIL") << "  " << r.id;
    std::string p = params_to_string(r.params);
    if (!p.empty()) out << " [" << p << "]";
    out << "  order=" << r.order;
    if (r.mismatch)
        out << "  first mismatch at q^" << r.mismatch->exponent << ": lhs=" << r.mismatch->lhs
            << " rhs=" << r.mismatch->rhs;
    out << "  (" << r.wall_time_ms << " ms)";
    return out.str();
}

inline nlohmann::json report_json(const IdentityReport& r) {
    nlohmann::json j{{"id", r.id},
                     {"params", r.params},
                     {"order", r.order},
                     {"passed", r.passed},
                     {"wall_time_ms", r.wall_time_ms}};
    if (r.mismatch)
        j["first_mismatch"] = {{"exponent", r.mismatch->exponent},
                               {"lhs", r.mismatch->lhs.str()},
                               {"rhs", r.mismatch->rhs.str()}};
    else
        j["first_mismatch"] = nullptr;
    return j;
}

inline std::string report_csv_header() {
    return "id,params,order,passed,mismatch_exponent,mismatch_lhs,mismatch_rhs,wall_time_ms";
}

inline std::string report_csv(const IdentityReport& r) {
    std::ostringstream out;
    out << r.id << ',' << params_to_string(r.params) << ',' << r.order << ','
        << (r.passed ? "true" : "false") << ',';
    if (r.mismatch)
        out << r.mismatch->exponent << ',' << r.mismatch->lhs << ',' << r.mismatch->rhs;
    else
        out << ",,";
    out << ',' << r.wall_time_ms;
    return out.str();
}

}  // namespace alhc
