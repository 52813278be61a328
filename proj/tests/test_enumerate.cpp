#include <doctest.h>

#include <set>

#include "lieposet/enumerate.hpp"

using namespace lieposet;

TEST_CASE("candidate counts") {
    CHECK(candidate_count(Family::C, 1) == 2);
    CHECK(candidate_count(Family::C, 2) == 12);
    CHECK(candidate_count(Family::C, 3) == 216);
    CHECK(candidate_count(Family::C, 4) == 11664);
    CHECK(candidate_count(Family::D, 3) == 27);
    CHECK(candidate_count(Family::B, 3) == 27);
}

TEST_CASE("n = 1 type C: antichain and loop poset") {
    auto all = generate_height_one(Family::C, 1);
    REQUIRE(all.size() == 2);
    CHECK(all[0].first.relations().empty());
    CHECK(all[1].first.related(-1, 1));
}

TEST_CASE("n = 2 type C: exactly the ten height-one posets survive") {
    auto all = generate_height_one(Family::C, 2);
    CHECK(all.size() == 10);

    // Duplicate-free: candidate -> relation set is injective on valid posets.
    std::set<std::vector<Relation>> seen;
    for (const auto& [p, idx] : all) seen.insert(p.relations());
    CHECK(seen.size() == all.size());

    // dashed {1,2} with a loop at 1 closes to the chain -1 < 1 < 2.
    for (const auto& [p, idx] : all) {
        bool dashedWithLoop1 = p.related(-2, -1) && p.related(-1, 1);
        CHECK_FALSE(dashedWithLoop1);
    }
}

TEST_CASE("type D and B candidates never carry loops") {
    for (auto fam : {Family::D, Family::B}) {
        auto all = generate_height_one(fam, 3);
        for (const auto& [p, idx] : all)
            for (int i = 1; i <= 3; ++i) CHECK_FALSE(p.related(-i, i));
    }
}

TEST_CASE("valid counts coincide across families on loop-free candidates") {
    for (int n = 1; n <= 3; ++n) {
        auto c = generate_height_one(Family::C, n);
        std::size_t loopFree = 0;
        for (const auto& [p, idx] : c) {
            bool hasLoop = false;
            for (int i = 1; i <= n; ++i) hasLoop = hasLoop || p.related(-i, i);
            loopFree += hasLoop ? 0 : 1;
        }
        CHECK(generate_height_one(Family::D, n).size() == loopFree);
        CHECK(generate_height_one(Family::B, n).size() == loopFree);
    }
}

TEST_CASE("verify_theorems: type C, n = 2") {
    auto s = verify_theorems(Family::C, 2, 8, 1, kDefaultPrime);
    CHECK(s.candidate_count == 12);
    CHECK(s.valid_count == 10);
    CHECK(s.checks_run > 0);
    CHECK(s.failures.empty());
}

TEST_CASE("verify_theorems: type C, n = 3") {
    auto s = verify_theorems(Family::C, 3, 8, 1, kDefaultPrime);
    CHECK(s.candidate_count == 216);
    CHECK(s.failures.empty());
}

TEST_CASE("verify_theorems: types D and B, n = 3") {
    auto d = verify_theorems(Family::D, 3, 8, 1, kDefaultPrime);
    CHECK(d.candidate_count == 27);
    CHECK(d.failures.empty());
    auto b = verify_theorems(Family::B, 3, 8, 1, kDefaultPrime);
    CHECK(b.candidate_count == 27);
    CHECK(b.valid_count == d.valid_count);
    CHECK(b.failures.empty());
}

TEST_CASE("verify_theorems: index routes agree for all families at n = 4") {
    for (auto fam : {Family::B, Family::D}) {
        auto s = verify_theorems(fam, 4, 8, 1, kDefaultPrime);
        CHECK(s.candidate_count == 729);
        CHECK(s.failures.empty());
    }
}

TEST_CASE("verification is independent of the worker count") {
    auto one = verify_theorems(Family::C, 3, 4, 7, kDefaultPrime, 1);
    auto four = verify_theorems(Family::C, 3, 4, 7, kDefaultPrime, 4);
    CHECK(one.valid_count == four.valid_count);
    CHECK(one.checks_run == four.checks_run);
    CHECK(one.failures == four.failures);
}
