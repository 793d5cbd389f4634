#include "doctest.h"

#include "ckq/json_io.hpp"
#include "ckq/multiplier.hpp"

using namespace ckq;

TEST_CASE("series round trip") {
    VSeries s(2, 5);
    s.add_term(JMonomial({2, -1}), GaussianRational(Rational(-3, 7), Rational(1, 2)), 3);
    s.add_term(JMonomial({0, 0}), 1, 0);
    Json j = to_json(s);
    CHECK(j["order"] == 5);
    CHECK(series_from_json(j) == s);
    CHECK(series_from_json(Json::parse(j.dump())) == s);
}

TEST_CASE("presentation round trip") {
    for (const char* text : {"1,2,3", "2,1,3", "2,1,4,3"}) {
        CAPTURE(text);
        auto s = SigmaPermutation::parse(text);
        Presentation p = generate_relations(s, theorem_multiplier(s), 5);
        Json j = to_json(p);
        CHECK(j["n"] == s.size());
        CHECK(j["multiplier"]["exponents"] == theorem_multiplier(s).exponents());
        Presentation back = presentation_from_json(Json::parse(j.dump()));
        CHECK(same_expanded(p, back));
        CHECK(to_json(back)["rules"] == j["rules"]);
    }
}

TEST_CASE("contracted presentation round trip") {
    auto s = SigmaPermutation::identity(4);
    Presentation closed = generate_closed(s, theorem_multiplier(s));
    closed.order = 4;
    Presentation p = specialize_presentation(closed, JAssignment::parse("1,iota,i"));
    Presentation back = presentation_from_json(to_json(p));
    CHECK(same_expanded(p, back));
}

TEST_CASE("a changed rule is noticed") {
    auto s = SigmaPermutation::parse("1,3,2");
    Presentation p = generate_relations(s, theorem_multiplier(s), 4);
    Json j = to_json(p);
    Json other = to_json(generate_relations(SigmaPermutation::parse("2,1,3"), theorem_multiplier(SigmaPermutation::parse("2,1,3")), 4));
    j["rules"] = other["rules"];
    CHECK_FALSE(same_expanded(p, presentation_from_json(j)));
}

TEST_CASE("malformed documents") {
    CHECK_THROWS(presentation_from_json(Json::object()));
    CHECK_THROWS(series_from_json(Json{{"order", 2}}));
}
