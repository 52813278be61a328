#include <doctest.h>

#include "lieposet/dot.hpp"
#include "lieposet/json_io.hpp"

using namespace lieposet;

TEST_CASE("poset JSON round trip") {
    auto p = poset_from_json_text(
        R"({"family": "C", "n": 3, "relations": [[-2,1],[-2,3],[-3,2],[-1,2]]})");
    CHECK(p.family() == Family::C);
    CHECK(p.relations().size() == 4);

    auto j = poset_json(p);
    auto q = poset_from_json(j);
    CHECK(q.relations() == p.relations());
}

TEST_CASE("poset JSON validation") {
    CHECK_THROWS_AS(poset_from_json_text(R"({"family": "X", "n": 2, "relations": []})"),
                    GroundSetViolation);
    CHECK_THROWS_AS(poset_from_json_text(R"({"n": 2, "relations": []})"), GroundSetViolation);
    CHECK_THROWS_AS(poset_from_json_text(R"({"family": "C", "n": 2, "relations": [[1]]})"),
                    GroundSetViolation);
}

TEST_CASE("report JSON carries the documented fields in order") {
    auto p = poset_from_json_text(R"({"family": "C", "n": 3, "relations": [[-2,1],[-3,2]]})");
    auto j = report_json(classify(p, ClassifyOptions{}));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"family", "n", "relations", "dim", "index", "eta",
                                           "frobenius", "contact", "method", "determinant",
                                           "seed", "samples", "prime"});
    CHECK(j["dim"] == 5);
    CHECK(j["index"] == 1);
    CHECK(j["contact"] == true);
    CHECK(j["determinant"] == "1");
}

TEST_CASE("same seed gives byte-identical reports") {
    auto p = poset_from_json_text(R"({"family": "C", "n": 3, "relations": [[-3,-2],[-3,1],[-3,3]]})");
    ClassifyOptions opts;
    opts.seed = 42;
    auto a = report_json(classify(p, opts)).dump();
    auto b = report_json(classify(p, opts)).dump();
    CHECK(a == b);
}

TEST_CASE("scalar strings are exact") {
    CHECK(scalar_string(Rational(1)) == "1");
    CHECK(scalar_string(Rational(-3, 2)) == "-3/2");
}

TEST_CASE("verification summary JSON") {
    VerificationSummary s;
    s.family = Family::C;
    s.n = 2;
    s.candidate_count = 12;
    s.valid_count = 10;
    auto with = summary_json(s, true);
    CHECK(with.contains("wallTime"));
    auto without = summary_json(s, false);
    CHECK_FALSE(without.contains("wallTime"));
    CHECK(without["failures"].is_array());
}

TEST_CASE("DOT export") {
    auto p = poset_from_json_text(R"({"family": "C", "n": 3, "relations": [[-3,-2],[-3,1],[-3,3]]})");
    auto rg = relation_graph_dot(build_relation_graph(p));
    CHECK(rg.find("2 -- 3 [style=dashed]") != std::string::npos);
    CHECK(rg.find("3 -- 3") != std::string::npos);
    CHECK(rg.find("1 -- 3;") != std::string::npos);

    auto h = hasse_dot(p);
    CHECK(h.find("\"-3\" -> \"-2\"") != std::string::npos);
    CHECK(h.find("\"-3\" -> \"3\"") != std::string::npos);
    // -3 < 3 is a covering relation here (nothing lies between).
    auto deep = poset_from_json_text(R"({"family": "C", "n": 2, "relations": [[-2,1],[-2,-1]]})");
    auto hd = hasse_dot(deep);
    CHECK(hd.find("\"-2\" -> \"2\"") == std::string::npos);  // not a cover
}
