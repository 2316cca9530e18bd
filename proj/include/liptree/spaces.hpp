#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "liptree/tree.hpp"
#include "liptree/weights.hpp"

namespace liptree {

using Complex = std::complex<double>;

/// Complex values on every vertex of a truncation, indexed breadth-first.
class TreeFunction {
public:
    explicit TreeFunction(TreeTruncation tree)
        : tree_(std::move(tree)), values_(tree_.vertex_count(), Complex{0.0, 0.0}) {}

    TreeFunction(TreeTruncation tree, std::vector<Complex> values)
        : tree_(std::move(tree)), values_(std::move(values)) {
        if (values_.size() != tree_.vertex_count())
            throw std::invalid_argument("TreeFunction: value count must match vertex count");
    }

    const TreeTruncation& tree() const { return tree_; }
    std::size_t size() const { return values_.size(); }

    Complex operator[](std::size_t idx) const { return values_[idx]; }
    Complex& operator[](std::size_t idx) { return values_[idx]; }

    Complex at(const VertexId& v) const { return values_[tree_.index_of(v)]; }
    void set(const VertexId& v, Complex c) { values_[tree_.index_of(v)] = c; }

    Complex root_value() const { return values_[0]; }
    const std::vector<Complex>& values() const { return values_; }

private:
    TreeTruncation tree_;
    std::vector<Complex> values_;
};

/// Discrete derivative: 0 at the root, f(v) - f(v^-) elsewhere.
inline TreeFunction derivative(const TreeFunction& f) {
    TreeFunction d{f.tree()};
    const auto& t = f.tree();
    d[0] = Complex{0.0, 0.0};
    for (std::size_t i = 1; i < f.size(); ++i) d[i] = f[i] - f[t.parent_index(i)];
    return d;
}

inline TreeFunction scaled(const TreeFunction& f, Complex c) {
    TreeFunction out{f.tree()};
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = c * f[i];
    return out;
}

inline TreeFunction sum(const TreeFunction& f, const TreeFunction& g) {
    if (f.size() != g.size()) throw std::invalid_argument("sum: mismatched truncations");
    TreeFunction out{f.tree()};
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] + g[i];
    return out;
}

struct NormReport {
    int k = 0;
    int depth = 0;
    double abs_root = 0.0;
    double seminorm = 0.0;
    double total = 0.0;
    VertexId argmax;  // first vertex (in BFS order) attaining the seminorm
};

/// Norm of the k-th iterated logarithmic Lipschitz space, evaluated on the
/// truncation: |f(o)| + max over 1 <= |v| <= D of |f'(v)| Lambda_k(|v|).
inline NormReport norm_k(const TreeFunction& f, int k) {
    const auto& t = f.tree();
    DepthWeights w{k, t.depth()};
    NormReport r;
    r.k = k;
    r.depth = t.depth();
    r.abs_root = std::abs(f.root_value());
    double best = 0.0;
    std::size_t best_idx = 0;
    bool found = false;
    for (std::size_t i = 1; i < f.size(); ++i) {
        int d = t.depth_of_index(i);
        double term = std::abs(f[i] - f[t.parent_index(i)]) * w.lambda_at(k, d);
        if (!found || term > best) {
            best = term;
            best_idx = i;
            found = true;
        }
    }
    r.seminorm = best;
    r.total = r.abs_root + r.seminorm;
    r.argmax = found ? t.vertex_at(best_idx) : VertexId::root();
    return r;
}

/// Worst-case slack of the point-evaluation bound over T*:
/// min over v of bound(v) - |f(v)|, with bound (1+|v|)||f||_0 for k = 0
/// and ell_k(|v|)||f||_k for k >= 1.  Non-negative means the bound holds.
inline double check_point_bound(const TreeFunction& f, int k) {
    const auto& t = f.tree();
    double nrm = norm_k(f, k).total;
    DepthWeights w{k, t.depth()};
    double slack = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < f.size(); ++i) {
        int d = t.depth_of_index(i);
        double bound = (k == 0) ? (1.0 + d) * nrm : w.ell_at(k, d) * nrm;
        slack = std::min(slack, bound - std::abs(f[i]));
    }
    return slack;
}

/// (||f||_0, ..., ||f||_kmax); nondecreasing since the weights are
/// pointwise monotone in k.
inline std::vector<double> check_embedding_chain(const TreeFunction& f, int kmax) {
    if (kmax < 1) throw std::invalid_argument("check_embedding_chain: kmax must be >= 1");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) out.push_back(norm_k(f, k).total);
    return out;
}

}  // namespace liptree
