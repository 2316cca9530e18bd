#include <doctest.h>

#include <cmath>

#include "liptree/weights.hpp"

using namespace liptree;

TEST_CASE("ell base cases") {
    CHECK(ell(0, 7.0) == 7.0);
    CHECK(ell(1, 1.0) == 1.0);
    CHECK(ell(2, 1.0) == 1.0);
    CHECK(ell(1, std::exp(1.0)) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("Lambda base cases") {
    for (double x : {1.0, 2.0, 100.0, 1e6}) CHECK(lambda_weight(0, x) == 1.0);
    CHECK(lambda_weight(1, 5.0) == 5.0);
    double e = std::exp(1.0);
    CHECK(lambda_weight(2, e) == doctest::Approx(2.0 * e).epsilon(1e-14));
    for (int k = 0; k <= 6; ++k) CHECK(lambda_weight(k, 1.0) == 1.0);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(ell(1, 0.5), std::domain_error);
    CHECK_THROWS_AS(lambda_weight(2, 0.0), std::domain_error);
    CHECK_THROWS_AS(ell(-1, 2.0), std::invalid_argument);
}

TEST_CASE("monotone in k and in x on a log grid") {
    double prev_x = 0.0;
    for (int i = 0; i <= 300; ++i) {
        double x = std::pow(10.0, 6.0 * i / 300.0);
        for (int k = 0; k <= 6; ++k) {
            CHECK(lambda_weight(k, x) <= lambda_weight(k + 1, x));
            if (k >= 1) CHECK(ell(k, x) >= 1.0);
            if (prev_x >= 1.0) {
                CHECK(lambda_weight(k, prev_x) <= lambda_weight(k, x));
                CHECK(ell(k, prev_x) <= ell(k, x));
            }
        }
        prev_x = x;
    }
}

TEST_CASE("product identity") {
    for (double x : {1.0, 2.0, 7.5, 100.0, 1e6}) {
        for (int k = 0; k <= 6; ++k) {
            double prod = 1.0;
            for (int j = 0; j < k; ++j) prod *= ell(j, x);
            CHECK(lambda_weight(k, x) == doctest::Approx(prod).epsilon(1e-12));
        }
    }
}

TEST_CASE("DepthWeights agrees with the scalar functions") {
    DepthWeights w{5, 20};
    for (int d = 1; d <= 20; ++d) {
        for (int j = 0; j <= 5; ++j) {
            CHECK(w.ell_at(j, d) == ell(j, static_cast<double>(d)));
            CHECK(w.lambda_at(j, d) == lambda_weight(j, static_cast<double>(d)));
        }
    }
    CHECK_THROWS_AS(w.ell_at(6, 1), std::out_of_range);
    CHECK_THROWS_AS(w.lambda_at(0, 0), std::out_of_range);
}
