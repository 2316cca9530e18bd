#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace liptree {

/// Iterated logarithm hierarchy: ell(0,x) = x, ell(j,x) = 1 + log ell(j-1,x).
/// Defined for x >= 1; natural logarithm throughout.
inline double ell(int j, double x) {
    if (j < 0) throw std::invalid_argument("ell: index must be non-negative");
    if (x < 1.0) throw std::domain_error("ell: argument must be >= 1");
    double v = x;
    for (int i = 0; i < j; ++i) v = 1.0 + std::log(v);
    return v;
}

/// Running product of the iterated logarithms:
/// Lambda(0,x) = 1, Lambda(k,x) = Lambda(k-1,x) * ell(k-1,x).
inline double lambda_weight(int k, double x) {
    if (k < 0) throw std::invalid_argument("lambda_weight: index must be non-negative");
    if (x < 1.0) throw std::domain_error("lambda_weight: argument must be >= 1");
    double prod = 1.0;
    double v = x;
    for (int j = 0; j < k; ++j) {
        prod *= v;
        v = 1.0 + std::log(v);
    }
    return prod;
}

/// Memoized ell/Lambda values at integer depths 1..max_depth.
/// Built once per truncation; read-only afterwards.
class DepthWeights {
public:
    DepthWeights(int kmax, int max_depth) : kmax_(kmax), max_depth_(max_depth) {
        if (kmax < 0 || max_depth < 1)
            throw std::invalid_argument("DepthWeights: kmax >= 0 and max_depth >= 1 required");
        ell_.assign(static_cast<std::size_t>(kmax + 1),
                    std::vector<double>(static_cast<std::size_t>(max_depth + 1), 0.0));
        lambda_.assign(static_cast<std::size_t>(kmax + 1),
                       std::vector<double>(static_cast<std::size_t>(max_depth + 1), 0.0));
        for (int d = 1; d <= max_depth; ++d) {
            double v = static_cast<double>(d);
            double prod = 1.0;
            for (int j = 0; j <= kmax; ++j) {
                ell_[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)] = v;
                lambda_[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)] = prod;
                prod *= v;
                v = 1.0 + std::log(v);
            }
        }
    }

    double ell_at(int j, int depth) const {
        check(j, depth);
        return ell_[static_cast<std::size_t>(j)][static_cast<std::size_t>(depth)];
    }

    double lambda_at(int k, int depth) const {
        check(k, depth);
        return lambda_[static_cast<std::size_t>(k)][static_cast<std::size_t>(depth)];
    }

    int kmax() const { return kmax_; }
    int max_depth() const { return max_depth_; }

private:
    void check(int j, int depth) const {
        if (j < 0 || j > kmax_) throw std::out_of_range("DepthWeights: index out of range");
        if (depth < 1 || depth > max_depth_) throw std::out_of_range("DepthWeights: depth out of range");
    }

    int kmax_;
    int max_depth_;
    std::vector<std::vector<double>> ell_;
    std::vector<std::vector<double>> lambda_;
};

}  // namespace liptree
