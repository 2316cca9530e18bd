#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liptree/spaces.hpp"
#include "liptree/symbol.hpp"
#include "liptree/testfns.hpp"
#include "liptree/tree.hpp"
#include "liptree/weights.hpp"

namespace liptree {

/// M_psi f = psi * f, pointwise on the truncation.
inline TreeFunction multiply(const Symbol& psi, const TreeFunction& f) {
    TreeFunction out{f.tree()};
    const auto& t = f.tree();
    if (psi.is_radial()) {
        for (int j = 0; j <= t.depth(); ++j) {
            Complex c = psi.value_at_depth(j);
            std::size_t off = t.sphere_offset(j);
            for (std::size_t i = 0; i < t.sphere_size(j); ++i) out[off + i] = c * f[off + i];
        }
    } else {
        for (std::size_t i = 0; i < f.size(); ++i) out[i] = psi.value_at(t, i) * f[i];
    }
    return out;
}

/// Per-depth maxima and overall suprema of the pointwise quantities
///   mu(v) = |psi'(v)| ell_m(|v|) Lambda_n(|v|)
///   nu(v) = |psi(v^-)| Lambda_n(|v|) / Lambda_m(|v|)
/// over the truncation.  Entry 0 of the per-depth arrays is unused.
struct MuNuProfile {
    int m = 0;
    int n = 0;
    int depth = 0;
    std::vector<double> mu_by_depth;
    std::vector<double> nu_by_depth;
    double mu_sup = 0.0;
    double nu_sup = 0.0;
    VertexId mu_argmax;
    VertexId nu_argmax;
};

inline MuNuProfile mu_nu_profile(const Symbol& psi, int m, int n, const TreeTruncation& t) {
    if (m < 0 || n < 0) throw std::invalid_argument("mu_nu_profile: indices must be >= 0");
    MuNuProfile p;
    p.m = m;
    p.n = n;
    p.depth = t.depth();
    p.mu_by_depth.assign(static_cast<std::size_t>(t.depth()) + 1, 0.0);
    p.nu_by_depth.assign(static_cast<std::size_t>(t.depth()) + 1, 0.0);
    DepthWeights w{std::max(m, n), t.depth()};
    std::size_t mu_idx = 0, nu_idx = 0;
    if (psi.is_radial()) {
        // All vertices at equal depth give the same value; one representative
        // per depth suffices.
        Complex prev = psi.value_at_depth(0);
        for (int j = 1; j <= t.depth(); ++j) {
            Complex cur = psi.value_at_depth(j);
            double mu = std::abs(cur - prev) * w.ell_at(m, j) * w.lambda_at(n, j);
            double nu = std::abs(prev) * w.lambda_at(n, j) / w.lambda_at(m, j);
            p.mu_by_depth[static_cast<std::size_t>(j)] = mu;
            p.nu_by_depth[static_cast<std::size_t>(j)] = nu;
            if (mu > p.mu_sup) { p.mu_sup = mu; mu_idx = t.sphere_offset(j); }
            if (nu > p.nu_sup) { p.nu_sup = nu; nu_idx = t.sphere_offset(j); }
            prev = cur;
        }
    } else {
        for (std::size_t i = 1; i < t.vertex_count(); ++i) {
            int j = t.depth_of_index(i);
            Complex at_v = psi.value_at(t, i);
            Complex at_parent = psi.value_at(t, t.parent_index(i));
            double mu = std::abs(at_v - at_parent) * w.ell_at(m, j) * w.lambda_at(n, j);
            double nu = std::abs(at_parent) * w.lambda_at(n, j) / w.lambda_at(m, j);
            auto jz = static_cast<std::size_t>(j);
            p.mu_by_depth[jz] = std::max(p.mu_by_depth[jz], mu);
            p.nu_by_depth[jz] = std::max(p.nu_by_depth[jz], nu);
            if (mu > p.mu_sup) { p.mu_sup = mu; mu_idx = i; }
            if (nu > p.nu_sup) { p.nu_sup = nu; nu_idx = i; }
        }
    }
    p.mu_argmax = t.vertex_at(mu_idx);
    p.nu_argmax = t.vertex_at(nu_idx);
    return p;
}

/// Distinct-index norm bounds: lower = ||psi||_n on the truncation,
/// upper = |psi(o)| + mu + nu.
inline std::pair<double, double> bounds_distinct(const Symbol& psi, int m, int n,
                                                 const TreeTruncation& t) {
    if (m == n) throw std::invalid_argument("bounds_distinct: m and n must differ");
    MuNuProfile p = mu_nu_profile(psi, m, n, t);
    double lower = norm_k(psi.materialize(t), n).total;
    double upper = std::abs(psi.value_at(t, std::size_t{0})) + p.mu_sup + p.nu_sup;
    return {lower, upper};
}

/// Same-space norm bounds:
/// max{||psi||_k, ||psi||_inf} <= ||M_psi|| <= ||psi||_inf + sup |psi'| Lambda_{k+1}.
inline std::pair<double, double> bounds_equal(const Symbol& psi, int k, const TreeTruncation& t) {
    if (k < 0) throw std::invalid_argument("bounds_equal: k must be >= 0");
    TreeFunction f = psi.materialize(t);
    double norm_kk = norm_k(f, k).total;
    double sup_norm = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) sup_norm = std::max(sup_norm, std::abs(f[i]));
    double lower = std::max(norm_kk, sup_norm);
    double upper = sup_norm + norm_k(f, k + 1).seminorm;
    return {lower, upper};
}

enum class TailClass { Vanishing, Bounded, Growing, Inconclusive };

inline std::string to_string(TailClass c) {
    switch (c) {
        case TailClass::Vanishing: return "vanishing";
        case TailClass::Bounded: return "bounded";
        case TailClass::Growing: return "growing";
        case TailClass::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

struct TailConfig {
    double eps_tail = 1e-3;     // absolute smallness threshold
    double decay_factor = 3.0;  // last-quarter max must drop below first-quarter max / this
    double band_factor = 2.0;   // "bounded" band around the first-quarter maximum
};

struct TailReport {
    TailClass mu = TailClass::Inconclusive;
    TailClass nu = TailClass::Inconclusive;
    TailClass joint = TailClass::Inconclusive;
};

namespace detail {

/// Heuristic trend of a per-depth maxima array (index 1..D).  Finite data
/// cannot decide the limit; this only labels the observed profile.
inline TailClass classify_sequence(const std::vector<double>& a, int depth,
                                   const TailConfig& cfg) {
    int q = std::max(1, depth / 4);
    double first_max = 0.0, first_min = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= q; ++j) {
        first_max = std::max(first_max, a[static_cast<std::size_t>(j)]);
        first_min = std::min(first_min, a[static_cast<std::size_t>(j)]);
    }
    double last_max = 0.0, last_min = std::numeric_limits<double>::infinity();
    bool nonincreasing = true;
    for (int j = depth - q + 1; j <= depth; ++j) {
        double v = a[static_cast<std::size_t>(j)];
        last_max = std::max(last_max, v);
        last_min = std::min(last_min, v);
        if (j > depth - q + 1 && v > a[static_cast<std::size_t>(j) - 1] + 1e-15)
            nonincreasing = false;
    }
    if (nonincreasing &&
        (last_max <= cfg.eps_tail || last_max <= first_max / cfg.decay_factor))
        return TailClass::Vanishing;
    if (last_min > 2.0 * first_max) return TailClass::Growing;
    if (last_max <= cfg.band_factor * first_max && last_min >= first_min / cfg.band_factor)
        return TailClass::Bounded;
    return TailClass::Inconclusive;
}

}  // namespace detail

inline TailReport classify_tail(const MuNuProfile& p, const TailConfig& cfg = {}) {
    TailReport r;
    r.mu = detail::classify_sequence(p.mu_by_depth, p.depth, cfg);
    r.nu = detail::classify_sequence(p.nu_by_depth, p.depth, cfg);
    if (r.mu == TailClass::Growing || r.nu == TailClass::Growing) {
        r.joint = TailClass::Growing;
    } else if (r.mu == TailClass::Vanishing && r.nu == TailClass::Vanishing) {
        r.joint = TailClass::Vanishing;
    } else if ((r.mu == TailClass::Vanishing || r.mu == TailClass::Bounded) &&
               (r.nu == TailClass::Vanishing || r.nu == TailClass::Bounded)) {
        r.joint = TailClass::Bounded;
    } else {
        r.joint = TailClass::Inconclusive;
    }
    return r;
}

/// Largest deviation |  ||M_psi f||_n - ||f||_m  | over the canonical test
/// set {1, (1/2) chi_o, chi_w for 2 <= |w| <= D-1}.  Strictly positive
/// output certifies non-isometry on the truncation.
struct IsometryDefect {
    double defect = 0.0;
    double from_one = 0.0;
    double from_half_chi_o = 0.0;
    double from_chi = 0.0;
    VertexId chi_argmax;

    /// Defect of the chi_w test at a given depth (radial symbols only have
    /// one value per depth; for explicit symbols this is the per-depth max).
    std::vector<double> chi_by_depth;
};

inline IsometryDefect isometry_defect(const Symbol& psi, int m, int n, const TreeTruncation& t) {
    if (m == n) throw std::invalid_argument("isometry_defect: m and n must differ");
    if (t.depth() < 3) throw std::invalid_argument("isometry_defect: depth >= 3 required");
    IsometryDefect r;
    TreeFunction psif = psi.materialize(t);
    r.from_one = std::abs(norm_k(psif, n).total - 1.0);
    r.from_half_chi_o = std::abs(std::abs(psif[0]) - 1.0);
    // ||chi_w||_k = Lambda_k(|w|+1) when the children of w are inside the
    // truncation, and ||psi(w) chi_w||_n = |psi(w)| Lambda_n(|w|+1).
    DepthWeights w{std::max(m, n), t.depth()};
    r.chi_by_depth.assign(static_cast<std::size_t>(t.depth()) + 1, 0.0);
    std::size_t arg_idx = 0;
    for (int j = 2; j <= t.depth() - 1; ++j) {
        double lam_m = w.lambda_at(m, j + 1);
        double lam_n = w.lambda_at(n, j + 1);
        if (psi.is_radial()) {
            double d = std::abs(std::abs(psi.value_at_depth(j)) * lam_n - lam_m);
            r.chi_by_depth[static_cast<std::size_t>(j)] = d;
            if (d > r.from_chi) { r.from_chi = d; arg_idx = t.sphere_offset(j); }
        } else {
            std::size_t off = t.sphere_offset(j);
            for (std::size_t i = 0; i < t.sphere_size(j); ++i) {
                double d = std::abs(std::abs(psi.value_at(t, off + i)) * lam_n - lam_m);
                auto jz = static_cast<std::size_t>(j);
                r.chi_by_depth[jz] = std::max(r.chi_by_depth[jz], d);
                if (d > r.from_chi) { r.from_chi = d; arg_idx = off + i; }
            }
        }
    }
    r.chi_argmax = t.vertex_at(arg_idx);
    r.defect = std::max({r.from_one, r.from_half_chi_o, r.from_chi});
    return r;
}

}  // namespace liptree
