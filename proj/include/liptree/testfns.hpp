#pragma once

#include <stdexcept>
#include <string>

#include "liptree/spaces.hpp"
#include "liptree/tree.hpp"
#include "liptree/weights.hpp"

namespace liptree {

/// Characteristic function of {v}.
inline TreeFunction make_chi(const VertexId& v, const TreeTruncation& t) {
    if (!t.contains(v)) throw std::out_of_range("make_chi: vertex outside truncation");
    TreeFunction f{t};
    f[t.index_of(v)] = Complex{1.0, 0.0};
    return f;
}

inline TreeFunction make_one(const TreeTruncation& t) {
    TreeFunction f{t};
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = Complex{1.0, 0.0};
    return f;
}

inline TreeFunction make_half_chi_o(const TreeTruncation& t) {
    TreeFunction f{t};
    f[0] = Complex{0.5, 0.0};
    return f;
}

/// chi_v / Lambda_m(|v|+1); its m-seminorm equals 1, attained at the
/// children of v.  Requires the children to exist inside the truncation.
inline TreeFunction make_fv(const VertexId& v, int m, const TreeTruncation& t) {
    if (v.is_root()) throw std::invalid_argument("make_fv: v must not be the root");
    if (v.depth() > t.depth() - 1)
        throw std::out_of_range("make_fv: children of v are outside the truncation");
    if (!t.contains(v)) throw std::out_of_range("make_fv: vertex outside truncation");
    double scale = 1.0 / lambda_weight(m, static_cast<double>(v.depth() + 1));
    TreeFunction f{t};
    f[t.index_of(v)] = Complex{scale, 0.0};
    return f;
}

/// Radial function: 0 at the root, ell_m(|v|) elsewhere.
inline TreeFunction make_g_radial(int m, const TreeTruncation& t) {
    if (m < 0) throw std::invalid_argument("make_g_radial: m must be >= 0");
    TreeFunction f{t};
    for (int j = 1; j <= t.depth(); ++j) {
        Complex c{ell(m, static_cast<double>(j)), 0.0};
        std::size_t off = t.sphere_offset(j);
        for (std::size_t i = 0; i < t.sphere_size(j); ++i) f[off + i] = c;
    }
    return f;
}

/// chi of the parent of vk, scaled by 1/Lambda_m(|vk|).
inline TreeFunction make_gk(const VertexId& vk, int m, const TreeTruncation& t) {
    if (vk.is_root()) throw std::invalid_argument("make_gk: vk must not be the root");
    if (!t.contains(vk)) throw std::out_of_range("make_gk: vertex outside truncation");
    double scale = 1.0 / lambda_weight(m, static_cast<double>(vk.depth()));
    return scaled(make_chi(vk.parent(), t), Complex{scale, 0.0});
}

/// Radial piecewise function: 0 on |w| <= 1, ell_m(|w|)^2 / ell_m(|vk|) on
/// 2 <= |w| < |vk|-1, and ell_m(|vk|) on |w| >= |vk|-1.
inline TreeFunction make_hk(const VertexId& vk, int m, const TreeTruncation& t) {
    if (vk.depth() <= 3) throw std::invalid_argument("make_hk: |vk| > 3 required");
    if (vk.depth() > t.depth()) throw std::out_of_range("make_hk: vk outside truncation");
    double em_vk = ell(m, static_cast<double>(vk.depth()));
    TreeFunction f{t};
    for (int j = 2; j <= t.depth(); ++j) {
        double value = (j < vk.depth() - 1)
                           ? ell(m, static_cast<double>(j)) * ell(m, static_cast<double>(j)) / em_vk
                           : em_vk;
        std::size_t off = t.sphere_offset(j);
        for (std::size_t i = 0; i < t.sphere_size(j); ++i) f[off + i] = Complex{value, 0.0};
    }
    return f;
}

struct TestFunctionSpec {
    std::string kind;  // chi | f_v | g_radial | g_k | h_k | half_chi_o | one
    VertexId target;
    int m = 0;
};

inline TreeFunction make_test_function(const TestFunctionSpec& spec, const TreeTruncation& t) {
    if (spec.kind == "chi") return make_chi(spec.target, t);
    if (spec.kind == "f_v") return make_fv(spec.target, spec.m, t);
    if (spec.kind == "g_radial") return make_g_radial(spec.m, t);
    if (spec.kind == "g_k") return make_gk(spec.target, spec.m, t);
    if (spec.kind == "h_k") return make_hk(spec.target, spec.m, t);
    if (spec.kind == "half_chi_o") return make_half_chi_o(t);
    if (spec.kind == "one") return make_one(t);
    throw std::invalid_argument("unknown test function kind: " + spec.kind);
}

}  // namespace liptree
