#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "liptree/operator_analysis.hpp"
#include "liptree/rng.hpp"
#include "liptree/spaces.hpp"
#include "liptree/symbol.hpp"
#include "liptree/testfns.hpp"
#include "liptree/tree.hpp"
#include "liptree/weights.hpp"

namespace liptree {

/// Exact operator norm of M_psi between truncated spaces, with an achieving
/// unit-norm witness.  See docs/exact_norm.md for the derivation: the
/// maximizer can be taken supported on a single root path, with aligned
/// phases and root mass t at an endpoint of [0, 1].
struct NormSolution {
    double value = 0.0;
    TreeFunction witness;
    VertexId max_vertex;
    int endpoint_t = 1;  // 0 or 1

    explicit NormSolution(TreeFunction w) : witness(std::move(w)) {}
};

namespace detail {

inline Complex align_dir(Complex c) {
    double a = std::abs(c);
    return a > 0.0 ? std::conj(c) / a : Complex{1.0, 0.0};
}

/// Unit-m-norm function carrying root mass t and the remaining derivative
/// budget along the path from the root to v, phases aligned against psi
/// so that the objective terms at v add constructively.
inline TreeFunction build_path_function(const Symbol& psi, int m, const VertexId& v, double t,
                                        const TreeTruncation& tree) {
    int j = v.depth();
    DepthWeights w{m, tree.depth()};
    Complex psi_v = psi.value_at(tree, v);
    Complex psi_parent = j >= 1 ? psi.value_at(tree, v.parent()) : psi.value_at(tree, std::size_t{0});
    Complex dprime = psi_v - psi_parent;
    Complex dir_interior = align_dir(dprime);
    Complex dir_last = align_dir(dprime + psi_parent);

    TreeFunction f{tree};
    f[0] = t * dir_interior;
    if (j >= 1) {
        // Derivative increments on the path; everything off the path copies
        // its parent value (zero derivative).
        std::vector<Complex> delta(static_cast<std::size_t>(j) + 1, Complex{0.0, 0.0});
        for (int i = 1; i < j; ++i)
            delta[static_cast<std::size_t>(i)] = (1.0 - t) / w.lambda_at(m, i) * dir_interior;
        delta[static_cast<std::size_t>(j)] = (1.0 - t) / w.lambda_at(m, j) * dir_last;

        std::vector<std::size_t> path_idx(static_cast<std::size_t>(j) + 1, 0);
        VertexId u = v;
        for (int d = j; d >= 1; --d) {
            path_idx[static_cast<std::size_t>(d)] = tree.index_of(u);
            u = u.parent();
        }
        for (std::size_t i = 1; i < tree.vertex_count(); ++i) {
            int d = tree.depth_of_index(i);
            Complex inc = (d <= j && path_idx[static_cast<std::size_t>(d)] == i)
                              ? delta[static_cast<std::size_t>(d)]
                              : Complex{0.0, 0.0};
            f[i] = f[tree.parent_index(i)] + inc;
        }
    } else {
        for (std::size_t i = 1; i < tree.vertex_count(); ++i) f[i] = f[0];
    }
    return f;
}

struct Candidate {
    double value = -1.0;
    std::size_t vertex_index = 0;
    int endpoint_t = 1;
};

inline void consider(Candidate& best, double value, std::size_t idx, int t) {
    if (value > best.value) best = Candidate{value, idx, t};
}

}  // namespace detail

inline NormSolution exact_operator_norm(const Symbol& psi, int m, int n,
                                        const TreeTruncation& t) {
    if (m < 0 || n < 0) throw std::invalid_argument("exact_operator_norm: indices must be >= 0");
    DepthWeights w{std::max(m, n), t.depth()};
    double abs_o = std::abs(psi.value_at(t, std::size_t{0}));

    // Prefix sums of the derivative budget 1/Lambda_m along a root path;
    // these depend on depth only.
    std::vector<double> budget(static_cast<std::size_t>(t.depth()) + 1, 0.0);
    for (int j = 1; j <= t.depth(); ++j)
        budget[static_cast<std::size_t>(j)] =
            budget[static_cast<std::size_t>(j) - 1] + 1.0 / w.lambda_at(m, j);

    detail::Candidate best;
    auto scan = [&](std::size_t idx, int depth, Complex at_v, Complex at_parent) {
        double a = std::abs(at_v - at_parent);
        double b = std::abs((at_v - at_parent) + at_parent);  // |psi'(v) + psi(v^-)| = |psi(v)|
        double lam_n = w.lambda_at(n, depth);
        detail::consider(best, abs_o + a * lam_n, idx, 1);
        double val0 = (a * budget[static_cast<std::size_t>(depth) - 1] +
                       b / w.lambda_at(m, depth)) *
                      lam_n;
        detail::consider(best, val0, idx, 0);
    };

    if (psi.is_radial()) {
        Complex prev = psi.value_at_depth(0);
        for (int j = 1; j <= t.depth(); ++j) {
            Complex cur = psi.value_at_depth(j);
            scan(t.sphere_offset(j), j, cur, prev);
            prev = cur;
        }
    } else {
        for (std::size_t i = 1; i < t.vertex_count(); ++i)
            scan(i, t.depth_of_index(i), psi.value_at(t, i), psi.value_at(t, t.parent_index(i)));
    }

    VertexId vstar = t.vertex_at(best.vertex_index);
    NormSolution sol{detail::build_path_function(psi, m, vstar, static_cast<double>(best.endpoint_t), t)};
    sol.value = best.value;
    sol.max_vertex = vstar;
    sol.endpoint_t = best.endpoint_t;
    return sol;
}

/// Stochastic lower bound: the best ||M_psi f||_n over sampled unit-m-norm
/// functions (constants, path functions with endpoint and interior root
/// mass, random sparse functions, and the canonical test functions).
/// Deterministic given the seed; never exceeds the exact value.
inline double random_search_lower_bound(const Symbol& psi, int m, int n,
                                        const TreeTruncation& t, int trials,
                                        std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("random_search_lower_bound: trials >= 1");
    CounterRng rng{seed};
    double best = 0.0;

    auto score = [&](const TreeFunction& f) {
        double nm = norm_k(f, m).total;
        if (nm <= 0.0) return;
        TreeFunction g = scaled(f, Complex{1.0 / nm, 0.0});
        best = std::max(best, norm_k(multiply(psi, g), n).total);
    };

    auto random_vertex = [&](int min_depth, int max_depth) {
        int depth = min_depth + static_cast<int>(rng.below(
                                    static_cast<std::uint64_t>(max_depth - min_depth + 1)));
        std::size_t pos = rng.below(t.sphere_size(depth));
        return t.vertex_at(t.sphere_offset(depth) + pos);
    };

    for (int trial = 0; trial < trials; ++trial) {
        switch (trial % 6) {
            case 0: {  // unimodular constant
                double theta = rng.range(0.0, 6.283185307179586);
                score(scaled(make_one(t), Complex{std::cos(theta), std::sin(theta)}));
                break;
            }
            case 1: {  // aligned path function, endpoint root mass
                VertexId v = random_vertex(1, t.depth());
                double tt = rng.below(2) ? 1.0 : 0.0;
                score(detail::build_path_function(psi, m, v, tt, t));
                break;
            }
            case 2: {  // aligned path function, interior root mass
                VertexId v = random_vertex(1, t.depth());
                score(detail::build_path_function(psi, m, v, rng.u01(), t));
                break;
            }
            case 3: {  // random sparse derivatives, then normalized
                TreeFunction f{t};
                double theta0 = rng.range(0.0, 6.283185307179586);
                f[0] = rng.u01() * Complex{std::cos(theta0), std::sin(theta0)};
                std::size_t nnz = 1 + rng.below(8);
                std::vector<Complex> delta(t.vertex_count(), Complex{0.0, 0.0});
                for (std::size_t s = 0; s < nnz; ++s) {
                    std::size_t idx = 1 + rng.below(t.vertex_count() - 1);
                    double theta = rng.range(0.0, 6.283185307179586);
                    delta[idx] = rng.u01() * Complex{std::cos(theta), std::sin(theta)};
                }
                for (std::size_t i = 1; i < t.vertex_count(); ++i)
                    f[i] = f[t.parent_index(i)] + delta[i];
                score(f);
                break;
            }
            case 4: {  // f_v at a random admissible vertex
                if (t.depth() >= 2) score(make_fv(random_vertex(1, t.depth() - 1), m, t));
                break;
            }
            case 5: {  // rotate through the remaining canonical functions
                switch (rng.below(3)) {
                    case 0: score(make_g_radial(m, t)); break;
                    case 1: score(make_gk(random_vertex(1, t.depth()), m, t)); break;
                    default:
                        if (t.depth() >= 4) score(make_hk(random_vertex(4, t.depth()), m, t));
                        break;
                }
                break;
            }
        }
    }
    return best;
}

struct SandwichReport {
    double lower = 0.0;
    double exact = 0.0;
    double upper = 0.0;
    double slack_lower = 0.0;  // exact - lower
    double slack_upper = 0.0;  // upper - exact
    bool holds = false;
};

/// Checks lower <= exact <= upper within 1e-9 for distinct indices.
inline SandwichReport verify_sandwich(const Symbol& psi, int m, int n, const TreeTruncation& t) {
    if (m == n) throw std::invalid_argument("verify_sandwich: m and n must differ");
    SandwichReport r;
    auto [lower, upper] = bounds_distinct(psi, m, n, t);
    r.lower = lower;
    r.upper = upper;
    r.exact = exact_operator_norm(psi, m, n, t).value;
    r.slack_lower = r.exact - r.lower;
    r.slack_upper = r.upper - r.exact;
    r.holds = r.slack_lower >= -1e-9 && r.slack_upper >= -1e-9;
    return r;
}

}  // namespace liptree
