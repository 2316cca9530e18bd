#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "liptree/exact_norm.hpp"
#include "liptree/operator_analysis.hpp"
#include "liptree/rng.hpp"
#include "liptree/spaces.hpp"
#include "liptree/symbol.hpp"
#include "liptree/testfns.hpp"
#include "liptree/tree.hpp"
#include "liptree/weights.hpp"

namespace liptree {

struct VerifyOptions {
    int branching = 2;
    int depth = 8;
    int trials = 100;
    std::uint64_t seed = 1;
    TailConfig tail;
    std::size_t vertex_cap = TreeTruncation::kDefaultVertexCap;
};

struct SuiteResult {
    std::string suite;
    bool pass = true;
    nlohmann::json report;
};

namespace verify_detail {

inline void fail(SuiteResult& r, const std::string& what, const nlohmann::json& instance) {
    r.pass = false;
    nlohmann::json f;
    f["check"] = what;
    f["instance"] = instance;
    r.report["failures"].push_back(f);
}

inline TreeFunction random_function(const TreeTruncation& t, CounterRng& rng) {
    TreeFunction f{t};
    double scale = std::exp(rng.range(-2.0, 3.0));
    for (std::size_t i = 0; i < f.size(); ++i) {
        double theta = rng.range(0.0, 6.283185307179586);
        f[i] = scale * rng.u01() * Complex{std::cos(theta), std::sin(theta)};
    }
    return f;
}

/// Random radial symbol as a per-depth table with a random growth trend.
inline Symbol random_radial_symbol(int depth, CounterRng& rng) {
    double base = rng.range(0.5, 1.4);
    double amp = std::exp(rng.range(-1.5, 1.0));
    std::vector<Complex> vals;
    vals.reserve(static_cast<std::size_t>(depth) + 1);
    double mag = amp;
    for (int j = 0; j <= depth; ++j) {
        double theta = rng.range(0.0, 6.283185307179586);
        vals.push_back(mag * rng.range(0.2, 1.0) * Complex{std::cos(theta), std::sin(theta)});
        mag *= base;
    }
    return Symbol::tabulated(std::move(vals));
}

inline Symbol chi_o_symbol(int depth) {
    std::vector<Complex> vals(static_cast<std::size_t>(depth) + 1, Complex{0.0, 0.0});
    vals[0] = Complex{1.0, 0.0};
    return Symbol::tabulated(std::move(vals));
}

inline const std::vector<std::pair<int, int>>& index_pairs() {
    static const std::vector<std::pair<int, int>> pairs{{0, 1}, {1, 0}, {1, 2},
                                                        {2, 1}, {0, 2}, {2, 0}};
    return pairs;
}

}  // namespace verify_detail

/// Weight laws on a log grid of x in [1, 1e6], k <= 6.
inline SuiteResult verify_weights(const VerifyOptions&) {
    using nlohmann::json;
    SuiteResult r;
    r.suite = "weights";
    r.report["grid_points"] = 10000;
    const int kmax = 6;
    double worst_product = 0.0;
    for (int i = 0; i < 10000; ++i) {
        double x = std::pow(10.0, 6.0 * i / 9999.0);
        double prod = 1.0;
        for (int k = 0; k <= kmax; ++k) {
            double lam = lambda_weight(k, x);
            if (k >= 1) {
                double lk = ell(k, x);
                if (lk < 1.0)
                    verify_detail::fail(r, "ell >= 1", json{{"j", k}, {"x", x}, {"value", lk}});
            }
            if (lambda_weight(k + 1, x) < lam)
                verify_detail::fail(r, "Lambda monotone in k", json{{"k", k}, {"x", x}});
            double rel = std::abs(lam - prod) / std::max(1.0, std::abs(prod));
            worst_product = std::max(worst_product, rel);
            if (rel > 1e-12)
                verify_detail::fail(r, "product identity", json{{"k", k}, {"x", x}, {"rel", rel}});
            prod *= ell(k, x);
        }
    }
    for (int k = 0; k <= kmax + 1; ++k)
        if (lambda_weight(k, 1.0) != 1.0)
            verify_detail::fail(r, "Lambda(k,1) == 1", json{{"k", k}});
    r.report["worst_product_rel_error"] = worst_product;
    return r;
}

/// Norm chain ||f||_0 <= ... <= ||f||_4 for random complex f.
inline SuiteResult verify_embedding(const VerifyOptions& o) {
    using nlohmann::json;
    SuiteResult r;
    r.suite = "embedding";
    auto t = TreeTruncation::build(TreeShape::uniform(o.branching), o.depth, o.vertex_cap);
    CounterRng rng{o.seed};
    r.report["trials"] = o.trials;
    for (int trial = 0; trial < o.trials; ++trial) {
        TreeFunction f = verify_detail::random_function(t, rng);
        auto chain = check_embedding_chain(f, 4);
        for (std::size_t k = 1; k < chain.size(); ++k)
            if (chain[k] < chain[k - 1] - 1e-12)
                verify_detail::fail(r, "norm chain nondecreasing",
                                    json{{"trial", trial}, {"k", k}, {"chain", chain}});
    }
    return r;
}

/// Point-evaluation bound slack >= -1e-9 for random f, k in 0..3.
inline SuiteResult verify_pointbound(const VerifyOptions& o) {
    using nlohmann::json;
    SuiteResult r;
    r.suite = "pointbound";
    auto t = TreeTruncation::build(TreeShape::uniform(o.branching), o.depth, o.vertex_cap);
    CounterRng rng{o.seed};
    double worst = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < o.trials; ++trial) {
        TreeFunction f = verify_detail::random_function(t, rng);
        for (int k = 0; k <= 3; ++k) {
            double slack = check_point_bound(f, k);
            worst = std::min(worst, slack);
            if (slack < -1e-9)
                verify_detail::fail(r, "point bound slack",
                                    json{{"trial", trial}, {"k", k}, {"slack", slack}});
        }
    }
    r.report["worst_slack"] = worst;
    return r;
}

/// Normalization facts for the canonical test functions.
inline SuiteResult verify_testfns(const VerifyOptions& o) {
    using nlohmann::json;
    SuiteResult r;
    r.suite = "testfns";
    auto t = TreeTruncation::build(TreeShape::uniform(o.branching), o.depth, o.vertex_cap);
    for (int m = 0; m <= 4; ++m) {
        // f_v seminorm equals 1 for every admissible v
        for (int j = 1; j <= t.depth() - 1; ++j) {
            for (std::size_t i = 0; i < t.sphere_size(j); ++i) {
                VertexId v = t.vertex_at(t.sphere_offset(j) + i);
                double s = norm_k(make_fv(v, m, t), m).seminorm;
                if (std::abs(s - 1.0) > 1e-12)
                    verify_detail::fail(r, "f_v seminorm 1",
                                        json{{"m", m}, {"v", v.to_string()}, {"seminorm", s}});
            }
        }
        double g0 = norm_k(make_g_radial(m, t), 0).total;
        if (std::abs(g0 - 1.0) > 0.0)
            verify_detail::fail(r, "||g||_0 == 1", json{{"m", m}, {"value", g0}});
        double h = norm_k(make_half_chi_o(t), m).total;
        if (std::abs(h - 1.0) > 1e-12)
            verify_detail::fail(r, "||half chi_o||_m == 1", json{{"m", m}, {"value", h}});
    }
    for (int m = 1; m <= 4; ++m) {
        double bound = 2.0;
        for (int j = 1; j <= m; ++j) bound *= ell(j, 2.0);
        double gm = norm_k(make_g_radial(m, t), m).total;
        if (gm > bound + 1e-9)
            verify_detail::fail(r, "||g||_m <= 2 prod ell_j(2)",
                                json{{"m", m}, {"value", gm}, {"bound", bound}});
    }
    return r;
}

/// Operator norm sandwich for random radial symbols and the known cases.
inline SuiteResult verify_sandwich_suite(const VerifyOptions& o) {
    using nlohmann::json;
    SuiteResult r;
    r.suite = "sandwich";
    CounterRng rng{o.seed};
    r.report["trials"] = o.trials;
    for (int depth : {6, 8}) {
        auto t = TreeTruncation::build(TreeShape::uniform(o.branching), depth, o.vertex_cap);
        for (int trial = 0; trial < o.trials; ++trial) {
            Symbol psi = verify_detail::random_radial_symbol(depth, rng);
            for (auto [m, n] : verify_detail::index_pairs()) {
                SandwichReport s = verify_sandwich(psi, m, n, t);
                if (!s.holds)
                    verify_detail::fail(r, "sandwich",
                                        json{{"trial", trial},
                                             {"depth", depth},
                                             {"m", m},
                                             {"n", n},
                                             {"lower", s.lower},
                                             {"exact", s.exact},
                                             {"upper", s.upper}});
            }
        }
        // known values
        Symbol one = Symbol::constant(Complex{1.0, 0.0});
        for (auto [m, n] : verify_detail::index_pairs()) {
            if (m <= n) continue;
            double exact = exact_operator_norm(one, m, n, t).value;
            if (std::abs(exact - 1.0) > 1e-12)
                verify_detail::fail(r, "psi == 1, m > n: exact == 1",
                                    json{{"depth", depth}, {"m", m}, {"n", n}, {"exact", exact}});
        }
        Symbol chi_o = verify_detail::chi_o_symbol(depth);
        for (auto [m, n] : verify_detail::index_pairs()) {
            double exact = exact_operator_norm(chi_o, m, n, t).value;
            if (std::abs(exact - 2.0) > 1e-12)
                verify_detail::fail(r, "psi == chi_o: exact == 2",
                                    json{{"depth", depth}, {"m", m}, {"n", n}, {"exact", exact}});
        }
    }
    return r;
}

/// Isometry defect strictly positive for random symbols, and the exact
/// defect value for unimodular constant symbols.
inline SuiteResult verify_isometry(const VerifyOptions& o) {
    using nlohmann::json;
    SuiteResult r;
    r.suite = "isometry";
    auto t = TreeTruncation::build(TreeShape::uniform(o.branching), o.depth, o.vertex_cap);
    CounterRng rng{o.seed};
    r.report["trials"] = o.trials;
    for (int trial = 0; trial < o.trials; ++trial) {
        Symbol psi = verify_detail::random_radial_symbol(o.depth, rng);
        for (auto [m, n] : verify_detail::index_pairs()) {
            double d = isometry_defect(psi, m, n, t).defect;
            if (d <= 1e-6)
                verify_detail::fail(r, "defect > 1e-6",
                                    json{{"trial", trial}, {"m", m}, {"n", n}, {"defect", d}});
        }
    }
    for (int i = 0; i < 8; ++i) {
        double theta = rng.range(0.0, 6.283185307179586);
        Symbol psi = Symbol::constant(Complex{std::cos(theta), std::sin(theta)});
        for (auto [m, n] : verify_detail::index_pairs()) {
            IsometryDefect d = isometry_defect(psi, m, n, t);
            double expected = std::abs(lambda_weight(m, 3.0) - lambda_weight(n, 3.0));
            if (std::abs(d.chi_by_depth[2] - expected) > 1e-9)
                verify_detail::fail(r, "unimodular defect at |w| == 2",
                                    json{{"m", m},
                                         {"n", n},
                                         {"value", d.chi_by_depth[2]},
                                         {"expected", expected}});
        }
    }
    return r;
}

/// Tail classification of the known symbols at D = 14.
inline SuiteResult verify_tails(const VerifyOptions& o) {
    using nlohmann::json;
    SuiteResult r;
    r.suite = "tails";
    int depth = std::max(o.depth, 14);
    auto t = TreeTruncation::build(TreeShape::uniform(o.branching), depth, o.vertex_cap);
    Symbol one = Symbol::constant(Complex{1.0, 0.0});
    for (auto [m, n] : verify_detail::index_pairs()) {
        if (m <= n) continue;
        TailReport tr = classify_tail(mu_nu_profile(one, m, n, t), o.tail);
        if (tr.mu != TailClass::Vanishing || tr.nu != TailClass::Vanishing)
            verify_detail::fail(r, "psi == 1, m > n: both tails vanishing",
                                json{{"m", m},
                                     {"n", n},
                                     {"mu", to_string(tr.mu)},
                                     {"nu", to_string(tr.nu)}});
    }
    // nu = Lambda_n / Lambda_m grows polynomially only when m == 0; for
    // 1 <= m < n the growth is logarithmic and invisible at this depth.
    for (auto [m, n] : verify_detail::index_pairs()) {
        if (m != 0 || n <= 0) continue;
        TailReport tr = classify_tail(mu_nu_profile(one, m, n, t), o.tail);
        if (tr.nu != TailClass::Growing)
            verify_detail::fail(r, "psi == 1, m < n: nu tail growing",
                                json{{"m", m}, {"n", n}, {"nu", to_string(tr.nu)}});
    }
    Symbol zero = Symbol::constant(Complex{0.0, 0.0});
    TailReport tz = classify_tail(mu_nu_profile(zero, 1, 0, t), o.tail);
    if (tz.joint != TailClass::Vanishing)
        verify_detail::fail(r, "psi == 0: vanishing", json{{"joint", to_string(tz.joint)}});
    return r;
}

inline SuiteResult run_suite(const std::string& name, const VerifyOptions& o) {
    SuiteResult r;
    if (name == "weights") r = verify_weights(o);
    else if (name == "embedding") r = verify_embedding(o);
    else if (name == "pointbound") r = verify_pointbound(o);
    else if (name == "testfns") r = verify_testfns(o);
    else if (name == "sandwich") r = verify_sandwich_suite(o);
    else if (name == "isometry") r = verify_isometry(o);
    else if (name == "tails") r = verify_tails(o);
    else throw std::invalid_argument("unknown suite: " + name);
    r.report["suite"] = r.suite;
    r.report["pass"] = r.pass;
    r.report["seed"] = o.seed;
    r.report["branching"] = o.branching;
    r.report["depth"] = o.depth;
    r.report["trials"] = o.trials;
    if (!r.report.contains("failures")) r.report["failures"] = nlohmann::json::array();
    return r;
}

}  // namespace liptree
