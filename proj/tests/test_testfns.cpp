#include <doctest.h>

#include <cmath>

#include "liptree/spaces.hpp"
#include "liptree/testfns.hpp"
#include "liptree/weights.hpp"

using namespace liptree;

TEST_CASE("chi examples") {
    auto t = TreeTruncation::build(TreeShape::uniform(2), 6);
    TreeFunction chi_o = make_chi(VertexId::root(), t);
    CHECK(chi_o[0] == Complex{1.0, 0.0});
    for (std::size_t i = 1; i < chi_o.size(); ++i) CHECK(chi_o[i] == Complex{0.0, 0.0});

    for (int j = 1; j <= t.depth() - 1; ++j) {
        VertexId w = t.vertex_at(t.sphere_offset(j));
        CHECK(norm_k(make_chi(w, t), 0).total == 1.0);
    }
    CHECK_THROWS_AS(make_chi(VertexId{{0, 0, 0, 0, 0, 0, 0}}, t), std::out_of_range);
}

TEST_CASE("f_v examples and invariants") {
    auto t = TreeTruncation::build(TreeShape::uniform(2), 6);
    for (int m = 0; m <= 4; ++m) {
        for (int j = 1; j <= t.depth() - 1; ++j) {
            VertexId v = t.vertex_at(t.sphere_offset(j) + t.sphere_size(j) / 2);
            TreeFunction f = make_fv(v, m, t);
            CHECK(norm_k(f, m).seminorm == doctest::Approx(1.0).epsilon(1e-12));
            // derivative nonzero exactly at v and its children
            TreeFunction d = derivative(f);
            for (std::size_t i = 1; i < d.size(); ++i) {
                VertexId u = t.vertex_at(i);
                bool expected = (u == v) || (!u.is_root() && u.parent() == v);
                CHECK((std::abs(d[i]) > 0.0) == expected);
            }
        }
    }
    // m = 0 reduces to chi_v
    VertexId v{{1, 0}};
    TreeFunction f0 = make_fv(v, 0, t);
    CHECK(f0.at(v) == Complex{1.0, 0.0});

    CHECK_THROWS_AS(make_fv(VertexId::root(), 1, t), std::invalid_argument);
    CHECK_THROWS_AS(make_fv(VertexId{{0, 0, 0, 0, 0, 0}}, 1, t), std::out_of_range);
}

TEST_CASE("g_radial examples") {
    auto t = TreeTruncation::build(TreeShape::uniform(2), 8);
    for (int m = 0; m <= 4; ++m) CHECK(norm_k(make_g_radial(m, t), 0).total == 1.0);
    CHECK(make_g_radial(1, t).at(VertexId{{0}}) == Complex{1.0, 0.0});  // ell_1(1) = 1
    for (int m = 1; m <= 4; ++m) {
        double bound = 2.0;
        for (int j = 1; j <= m; ++j) bound *= ell(j, 2.0);
        CHECK(norm_k(make_g_radial(m, t), m).total <= bound + 1e-9);
        if (m == 1) CHECK(bound == doctest::Approx(2.0 * (1.0 + std::log(2.0))).epsilon(1e-12));
    }
}

TEST_CASE("g_k norm stays below 2 and vanishes pointwise") {
    auto t = TreeTruncation::build(TreeShape::uniform(2), 10);
    for (int m = 0; m <= 3; ++m) {
        for (int j = 2; j <= t.depth(); ++j) {
            VertexId vk = t.vertex_at(t.sphere_offset(j));
            TreeFunction gk = make_gk(vk, m, t);
            CHECK(norm_k(gk, m).total <= 2.0 + 1e-12);
        }
    }
    // fixed w: g_k(w) -> 0 as |v_k| grows
    VertexId w{{0, 0}};
    double prev = 1e300;
    for (int j = 4; j <= t.depth(); ++j) {
        VertexId vk = t.vertex_at(t.sphere_offset(j));
        double val = std::abs(make_gk(vk, 2, t).at(w));
        CHECK(val == 0.0);  // chi of v_k's parent is zero away from it
        prev = val;
    }
    (void)prev;
}

TEST_CASE("h_k piecewise shape and bounded norms") {
    auto t = TreeTruncation::build(TreeShape::uniform(2), 12);
    int m = 1;
    for (int jk = 4; jk <= 11; ++jk) {
        VertexId vk = t.vertex_at(t.sphere_offset(jk));
        TreeFunction h = make_hk(vk, m, t);
        double em_vk = ell(m, static_cast<double>(jk));
        CHECK(h.at(VertexId::root()) == Complex{0.0, 0.0});
        CHECK(h.at(VertexId{{0}}) == Complex{0.0, 0.0});
        for (int j = 2; j <= t.depth(); ++j) {
            Complex val = h[t.sphere_offset(j)];
            if (j < jk - 1) {
                double e = ell(m, static_cast<double>(j));
                CHECK(val.real() == doctest::Approx(e * e / em_vk).epsilon(1e-12));
            } else {
                CHECK(val.real() == doctest::Approx(em_vk).epsilon(1e-12));
            }
        }
        CHECK(norm_k(h, m).total < 20.0);  // bounded over k for fixed m
    }
    CHECK_THROWS_AS(make_hk(VertexId{{0, 0, 0}}, 1, t), std::invalid_argument);
}

TEST_CASE("h_k vanishes pointwise as |v_k| grows") {
    auto t = TreeTruncation::build(TreeShape::uniform(2), 12);
    VertexId w{{0, 0}};
    double prev = 1e300;
    for (int jk = 4; jk <= 12; ++jk) {
        VertexId vk = t.vertex_at(t.sphere_offset(jk));
        double val = std::abs(make_hk(vk, 2, t).at(w));
        CHECK(val <= prev + 1e-12);
        prev = val;
    }
    CHECK(prev < std::abs(make_hk(t.vertex_at(t.sphere_offset(4)), 2, t).at(w)));
}

TEST_CASE("test function dispatcher") {
    auto t = TreeTruncation::build(TreeShape::uniform(2), 6);
    CHECK(make_test_function({"one", VertexId::root(), 0}, t).at(VertexId{{1, 1}}) ==
          Complex{1.0, 0.0});
    CHECK(make_test_function({"half_chi_o", VertexId::root(), 2}, t).root_value() ==
          Complex{0.5, 0.0});
    CHECK_THROWS_AS(make_test_function({"bogus", VertexId::root(), 0}, t),
                    std::invalid_argument);
}
