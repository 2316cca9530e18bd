#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "liptree/exact_norm.hpp"
#include "liptree/operator_analysis.hpp"
#include "liptree/spaces.hpp"
#include "liptree/symbol.hpp"
#include "liptree/tree.hpp"

namespace liptree {

inline nlohmann::json to_json(const NormReport& r) {
    return {{"k", r.k},
            {"depth", r.depth},
            {"abs_root", r.abs_root},
            {"seminorm", r.seminorm},
            {"total", r.total},
            {"argmax", r.argmax.to_string()}};
}

inline nlohmann::json to_json(const TreeFunction& f) {
    auto arr = nlohmann::json::array();
    for (std::size_t i = 0; i < f.size(); ++i) arr.push_back(complex_to_json(f[i]));
    nlohmann::json j;
    j["kind"] = "explicit";
    j["values"] = arr;
    j["depth"] = f.tree().depth();
    return j;
}

inline nlohmann::json to_json(const MuNuProfile& p) {
    nlohmann::json j;
    j["m"] = p.m;
    j["n"] = p.n;
    j["depth"] = p.depth;
    j["mu_by_depth"] = std::vector<double>(p.mu_by_depth.begin() + 1, p.mu_by_depth.end());
    j["nu_by_depth"] = std::vector<double>(p.nu_by_depth.begin() + 1, p.nu_by_depth.end());
    j["mu_sup"] = p.mu_sup;
    j["nu_sup"] = p.nu_sup;
    j["mu_argmax"] = p.mu_argmax.to_string();
    j["nu_argmax"] = p.nu_argmax.to_string();
    return j;
}

inline nlohmann::json to_json(const TailReport& t) {
    return {{"mu", to_string(t.mu)}, {"nu", to_string(t.nu)}, {"joint", to_string(t.joint)}};
}

inline nlohmann::json to_json(const IsometryDefect& d) {
    return {{"defect", d.defect},
            {"from_one", d.from_one},
            {"from_half_chi_o", d.from_half_chi_o},
            {"from_chi", d.from_chi},
            {"chi_argmax", d.chi_argmax.to_string()}};
}

inline nlohmann::json to_json(const NormSolution& s) {
    return {{"value", s.value},
            {"max_vertex", s.max_vertex.to_string()},
            {"endpoint_t", s.endpoint_t},
            {"witness", to_json(s.witness)}};
}

inline nlohmann::json to_json(const SandwichReport& s) {
    return {{"lower", s.lower},
            {"exact", s.exact},
            {"upper", s.upper},
            {"slack_lower", s.slack_lower},
            {"slack_upper", s.slack_upper},
            {"holds", s.holds}};
}

/// Full analysis of M_psi on a truncation: mu/nu profile, norm bounds,
/// optional exact norm with witness, tail classification, and (for distinct
/// indices) the isometry defect.  Every value is labeled with the depth D.
struct OperatorReport {
    int m = 0;
    int n = 0;
    int depth = 0;
    MuNuProfile profile;
    double lower = 0.0;
    double upper = 0.0;
    std::optional<NormSolution> exact;
    TailReport tail;
    std::optional<IsometryDefect> isometry;
};

inline OperatorReport analyze(const Symbol& psi, int m, int n, const TreeTruncation& t,
                              bool with_exact = false, const TailConfig& cfg = {}) {
    OperatorReport r;
    r.m = m;
    r.n = n;
    r.depth = t.depth();
    r.profile = mu_nu_profile(psi, m, n, t);
    if (m == n) {
        auto [lo, up] = bounds_equal(psi, m, t);
        r.lower = lo;
        r.upper = up;
    } else {
        auto [lo, up] = bounds_distinct(psi, m, n, t);
        r.lower = lo;
        r.upper = up;
        r.isometry = isometry_defect(psi, m, n, t);
    }
    if (with_exact) r.exact = exact_operator_norm(psi, m, n, t);
    r.tail = classify_tail(r.profile, cfg);
    return r;
}

inline nlohmann::json to_json(const OperatorReport& r, bool include_witness = true) {
    nlohmann::json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["depth"] = r.depth;
    j["profile"] = to_json(r.profile);
    j["lower_bound"] = r.lower;
    j["upper_bound"] = r.upper;
    j["tail"] = to_json(r.tail);
    if (r.exact) {
        j["exact"] = to_json(*r.exact);
        if (!include_witness) j["exact"].erase("witness");
    }
    if (r.isometry) j["isometry"] = to_json(*r.isometry);
    return j;
}

}  // namespace liptree
