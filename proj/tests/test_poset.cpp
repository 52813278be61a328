#include <doctest.h>

#include <algorithm>

#include "lieposet/poset.hpp"

using namespace lieposet;

namespace {

// The running example: type-C poset on {-3..-1,1..3} with -2 < 1,3; -3 < 2; -1 < 2.
SignedPoset example_c3() {
    return SignedPoset::from_generators(Family::C, 3, {{-2, 1}, {-2, 3}, {-3, 2}, {-1, 2}});
}

// Height-(1,1) poset whose relation graph has a dashed edge, a solid edge and
// a self-loop: -3 < -2, -3 < 1, -3 < 3 (mirrors 2 < 3 and -1 < 3 implied).
SignedPoset loop_dash_c3() {
    return SignedPoset::from_generators(Family::C, 3, {{-3, -2}, {-3, 1}, {-3, 3}});
}

bool mirror_symmetric(const SignedPoset& p) {
    for (auto [x, y] : p.relations()) {
        if (x == -y) continue;
        if (!p.related(-y, -x)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("from_generators closes and symmetrizes the running example") {
    auto p = example_c3();
    // The four listed relations; each mirror coincides with another listed one.
    std::vector<std::pair<int, int>> expected = {{-3, 2}, {-2, 1}, {-2, 3}, {-1, 2}};
    CHECK(p.relations() == expected);
    CHECK(mirror_symmetric(p));
}

TEST_CASE("antichain has no relations") {
    auto p = SignedPoset::from_generators(Family::C, 2, {});
    CHECK(p.relations().empty());
    CHECK(p.height() == 0);
    CHECK(p.separable());
}

TEST_CASE("a covering -i < i is rejected for families B and D") {
    CHECK_THROWS_AS(SignedPoset::from_generators(Family::D, 2, {{-1, 1}}), CoverViolation);
    CHECK_THROWS_AS(SignedPoset::from_generators(Family::B, 2, {{-1, 1}}), CoverViolation);
    // Type C accepts it.
    CHECK_NOTHROW(SignedPoset::from_generators(Family::C, 2, {{-1, 1}}));
    // A non-covering -i < i is fine in type D (chain -2 < -1 < 2 forces -2 < 2).
    auto p = SignedPoset::from_generators(Family::D, 2, {{-2, 1}, {-2, -1}});
    CHECK(p.related(-2, 2));
    CHECK_FALSE(p.is_cover(-2, 2));
    CHECK(p.height() == 2);
}

TEST_CASE("order violations are rejected") {
    CHECK_THROWS_AS(SignedPoset::from_generators(Family::C, 2, {{2, -1}}), OrderViolation);
    CHECK_THROWS_AS(SignedPoset::from_generators(Family::C, 2, {{2, 1}}), OrderViolation);
}

TEST_CASE("generators must live in the ground set") {
    CHECK_THROWS_AS(SignedPoset::from_generators(Family::C, 2, {{-3, 1}}), GroundSetViolation);
    CHECK_THROWS_AS(SignedPoset::from_generators(Family::C, 2, {{0, 1}}), GroundSetViolation);
    CHECK_THROWS_AS(SignedPoset::from_generators(Family::C, 2, {{1, 1}}), GroundSetViolation);
    CHECK_NOTHROW(SignedPoset::from_generators(Family::B, 1, {{-1, 0}}));
}

TEST_CASE("height and height pair") {
    CHECK(example_c3().height() == 1);
    CHECK(example_c3().height_pair().plus_height == 0);
    CHECK(example_c3().height_pair().total_height == 1);

    auto dashed = SignedPoset::from_generators(Family::C, 2, {{-2, -1}});
    CHECK(dashed.height() == 1);

    auto fig3 = loop_dash_c3();
    CHECK(fig3.height_pair().plus_height == 1);
    CHECK(fig3.height_pair().total_height == 1);

    auto anti = SignedPoset::from_generators(Family::C, 3, {});
    CHECK(anti.height_pair().plus_height == 0);
    CHECK(anti.height_pair().total_height == 0);
}

TEST_CASE("separability") {
    CHECK(SignedPoset::from_generators(Family::C, 2, {{-2, -1}}).separable());
    CHECK_FALSE(example_c3().separable());
}

TEST_CASE("induced subposets") {
    auto p = example_c3();
    auto plus = p.induced({1, 2, 3});
    CHECK(plus.elements() == std::vector<int>{1, 2, 3});
    CHECK(plus.relations().empty());

    auto all = p.induced(p.ground());
    CHECK(all.relations() == p.relations());

    // Dropping an isolated 0 from a type-B poset leaves the type-C relations.
    auto b = SignedPoset::from_generators(Family::B, 3, {{-2, 1}, {-2, 3}, {-3, 2}, {-1, 2}});
    auto p0 = b.induced({-3, -2, -1, 1, 2, 3});
    CHECK(p0.relations() == p.relations());
    auto c = SignedPoset::from_generators(Family::C, 3, p0.relations());
    CHECK(c.relations() == p.relations());
}

TEST_CASE("from_generators is idempotent on closed relation sets") {
    for (const auto& p : {example_c3(), loop_dash_c3(),
                          SignedPoset::from_generators(Family::C, 2, {{-2, -1}})}) {
        auto q = SignedPoset::from_generators(p.family(), p.n(), p.relations());
        CHECK(q.relations() == p.relations());
    }
}

TEST_CASE("height zero iff no relations, height one means no 3-chains") {
    auto probe = [](const SignedPoset& p) {
        CHECK((p.height() == 0) == p.relations().empty());
        if (p.height() == 1) {
            for (auto [x, y] : p.relations())
                for (int z : p.ground())
                    CHECK_FALSE((p.related(x, z) && p.related(z, y)));
        }
    };
    probe(example_c3());
    probe(loop_dash_c3());
    probe(SignedPoset::from_generators(Family::C, 3, {}));
    probe(SignedPoset::from_generators(Family::C, 1, {{-1, 1}}));
}

TEST_CASE("type-B posets may relate 0 only through a chain (height >= 2)") {
    auto b = SignedPoset::from_generators(Family::B, 1, {{-1, 0}});
    CHECK(b.related(-1, 0));
    CHECK(b.related(0, 1));
    CHECK(b.related(-1, 1));
    CHECK(b.height() == 2);
    CHECK_FALSE(b.separable());
}

TEST_CASE("covering relations") {
    auto p = example_c3();
    CHECK(p.is_cover(-2, 1));
    auto d = SignedPoset::from_generators(Family::C, 2, {{-2, 1}, {-2, -1}});
    CHECK(d.related(-2, 2));
    CHECK_FALSE(d.is_cover(-2, 2));
    CHECK(d.is_cover(-2, -1));
}

TEST_CASE("disjoint union shifts the second poset past the first") {
    auto edge = SignedPoset::from_generators(Family::C, 2, {{-2, 1}});
    auto tri = SignedPoset::from_generators(Family::C, 3, {{-2, 1}, {-3, 1}, {-3, 2}});
    auto u = disjoint_union(edge, tri);
    CHECK(u.n() == 5);
    CHECK(u.related(-2, 1));
    CHECK(u.related(-4, 3));
    CHECK(u.related(-5, 3));
    CHECK(u.related(-5, 4));
    CHECK(u.relations().size() == edge.relations().size() + tri.relations().size());
    CHECK(mirror_symmetric(u));
}
