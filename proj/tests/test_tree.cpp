#include <doctest.h>

#include "liptree/tree.hpp"

using namespace liptree;

TEST_CASE("build_truncation vertex counts") {
    auto t = TreeTruncation::build(TreeShape::uniform(2), 3);
    CHECK(t.vertex_count() == 15);
    CHECK(t.sphere_size(0) == 1);
    CHECK(t.sphere_size(1) == 2);
    CHECK(t.sphere_size(2) == 4);
    CHECK(t.sphere_size(3) == 8);

    auto ray = TreeTruncation::build(TreeShape::uniform(1), 5);
    CHECK(ray.vertex_count() == 6);

    auto t3 = TreeTruncation::build(TreeShape::uniform(3), 2);
    CHECK(t3.vertex_count() == 13);  // 1 + 3 + 9
}

TEST_CASE("build errors") {
    CHECK_THROWS_AS(TreeShape::uniform(0), InvalidShapeError);
    CHECK_THROWS_AS(TreeShape::per_level({2, 0, 2}), InvalidShapeError);
    CHECK_THROWS_AS(TreeTruncation::build(TreeShape::uniform(2), 30, 1000), CapacityError);
    CHECK_THROWS_AS(TreeTruncation::build(TreeShape::uniform(2), 0), std::invalid_argument);
}

TEST_CASE("per-level branching repeats last entry") {
    auto t = TreeTruncation::build(TreeShape::per_level({3, 2}), 4);
    CHECK(t.sphere_size(1) == 3);
    CHECK(t.sphere_size(2) == 6);
    CHECK(t.sphere_size(3) == 12);
    CHECK(t.sphere_size(4) == 24);
}

TEST_CASE("parent") {
    CHECK(VertexId{{0, 1}}.parent() == VertexId{{0}});
    CHECK(VertexId{{2}}.parent() == VertexId::root());
    CHECK_THROWS_AS(VertexId::root().parent(), std::logic_error);
}

TEST_CASE("children") {
    auto t = TreeTruncation::build(TreeShape::uniform(2), 3);
    auto kids = children(VertexId::root(), t);
    REQUIRE(kids.size() == 2);
    CHECK(kids[0] == VertexId{{0}});
    CHECK(kids[1] == VertexId{{1}});

    auto kids0 = children(VertexId{{0}}, t);
    REQUIRE(kids0.size() == 2);
    CHECK(kids0[0] == VertexId{{0, 0}});
    CHECK(kids0[1] == VertexId{{0, 1}});

    VertexId leaf{{0, 0, 0}};
    CHECK(children(leaf, t).empty());
    CHECK(t.at_boundary(leaf));
}

TEST_CASE("sphere") {
    auto t = TreeTruncation::build(TreeShape::uniform(3), 3);
    CHECK(sphere(t, 0) == std::vector<VertexId>{VertexId::root()});
    CHECK(sphere(t, 1).size() == 3);
    CHECK(sphere(t, 3).size() == 27);
    CHECK_THROWS_AS(sphere(t, 4), std::out_of_range);
}

TEST_CASE("distance examples") {
    CHECK(distance(VertexId{{0, 1}}, VertexId{{0, 1}}) == 0);
    CHECK(distance(VertexId::root(), VertexId{{0, 1}}) == 2);
    CHECK(distance(VertexId{{0, 0}}, VertexId{{0, 1}}) == 2);
}

TEST_CASE("distance is a metric on all pairs of b=2 D=4") {
    auto t = TreeTruncation::build(TreeShape::uniform(2), 4);
    std::vector<VertexId> all;
    for (std::size_t i = 0; i < t.vertex_count(); ++i) all.push_back(t.vertex_at(i));
    for (const auto& v : all) {
        for (const auto& w : all) {
            int d = distance(v, w);
            CHECK(d >= 0);
            CHECK(d == distance(w, v));
            CHECK((d == 0) == (v == w));
        }
    }
    // triangle inequality on a subsample of triples
    for (std::size_t a = 0; a < all.size(); a += 3)
        for (std::size_t b = 0; b < all.size(); b += 2)
            for (std::size_t c = 0; c < all.size(); c += 5)
                CHECK(distance(all[a], all[c]) <= distance(all[a], all[b]) + distance(all[b], all[c]));
}

TEST_CASE("BFS index ordering and round trips") {
    auto t = TreeTruncation::build(TreeShape::per_level({2, 3}), 4);
    for (std::size_t i = 1; i < t.vertex_count(); ++i) {
        VertexId v = t.vertex_at(i);
        CHECK(t.index_of(v) == i);
        CHECK(v.depth() == v.parent().depth() + 1);
        CHECK(t.parent_index(i) < i);
        CHECK(t.index_of(v.parent()) == t.parent_index(i));
    }
}

TEST_CASE("vertex id string round trip") {
    CHECK(VertexId::from_string("o") == VertexId::root());
    CHECK(VertexId::from_string("0/1/0") == VertexId{{0, 1, 0}});
    CHECK(VertexId{{0, 1, 0}}.to_string() == "0/1/0");
}
