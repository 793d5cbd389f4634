#include "doctest.h"

#include "ckq/classifier.hpp"
#include "ckq/multiplier.hpp"
#include "ckq/paper_data.hpp"

using namespace ckq;

namespace {

RewriteSystem vector_system(const std::string& sigma, const JAssignment& a) {
    auto s = SigmaPermutation::parse(sigma);
    Presentation p = generate_closed(s, theorem_multiplier(s));
    p.order = 4;
    return specialize_presentation(p, a).system;
}

RewriteSystem sphere_system(int N, const std::string& sigma, const JAssignment& a) {
    return specialize_sphere(sphere_presentation(N, SigmaPermutation::parse(sigma)), a, 4).system;
}

GeneratorMap identity_map(std::size_t n, std::size_t params) {
    GeneratorMap m;
    for (std::size_t k = 0; k < n; ++k) {
        m.perm.push_back(static_cast<int>(k));
        m.scale.emplace_back(params);
    }
    return m;
}

}  // namespace

TEST_CASE("families") {
    CHECK(parse_family("vector") == Family::Vector);
    CHECK(parse_family("sphere") == Family::Sphere);
    CHECK(family_name(Family::Sphere) == "sphere");
    CHECK_THROWS(parse_family("plane"));
    CHECK(family_assignment(4, Family::Vector, 2).str() == "1,iota,1");
    CHECK(family_assignment(4, Family::Sphere, 2).str() == "j,iota,j");
}

TEST_CASE("reflexivity and inverse witnesses") {
    auto a = family_assignment(4, Family::Vector, 2);
    for (const char* s : {"1,2,3,4", "3,1,2,4", "2,1,4,3"}) {
        CAPTURE(s);
        RewriteSystem A = vector_system(s, a);
        auto m = find_isomorphism(A, A, vector_fibering(a));
        REQUIRE(m.has_value());
        CHECK(verify_isomorphism(A, A, *m));
        CHECK(verify_isomorphism(A, A, identity_map(4, 3)));
    }
}

TEST_CASE("transcribed isomorphism claims") {
    for (const auto& c : paper_data().isomorphisms) {
        CAPTURE(c.id);
        auto a = JAssignment::parse(c.j);
        bool vec = parse_family(c.family) == Family::Vector;
        RewriteSystem A = vec ? vector_system(c.a, a) : sphere_system(c.n, c.a, a);
        RewriteSystem B = vec ? vector_system(c.b, a) : sphere_system(c.n, c.b, a);
        Fibering fib = vec ? vector_fibering(a) : sphere_fibering(a);
        auto m = find_isomorphism(A, B, fib);
        CHECK(m.has_value() == c.isomorphic);
        if (m) {
            CHECK(verify_isomorphism(A, B, *m));
            CHECK(verify_isomorphism(B, A, m->inverse()));
        }
    }
}

TEST_CASE("distinct spaces are not identified by the identity map") {
    auto a = family_assignment(3, Family::Vector, 1);
    RewriteSystem A = vector_system("1,2,3", a);
    RewriteSystem B = vector_system("2,1,3", a);
    CHECK_FALSE(verify_isomorphism(A, B, identity_map(3, 2)));
    CHECK_FALSE(find_isomorphism(A, B, vector_fibering(a)).has_value());
}

TEST_CASE("transcribed class counts") {
    for (const auto& c : paper_data().class_counts) {
        CAPTURE(c.id);
        auto rep = classify(c.n, parse_family(c.family), JAssignment::parse(c.j), 4);
        CHECK(rep.errors.empty());
        CHECK(static_cast<int>(rep.classes.size()) == c.classes);
        std::size_t members = 0;
        for (const auto& b : rep.classes) members += b.size();
        CHECK(members == rep.entries.size());
        CHECK(rep.strict_classes >= static_cast<int>(rep.classes.size()));
        for (const auto& w : rep.witnesses)
            CHECK(verify_isomorphism(rep.entries[w.from].system, rep.entries[w.to].system, w.map));
    }
}

TEST_CASE("renumbering alone separates a rescaled pair") {
    auto a = family_assignment(4, Family::Sphere, 3);
    RewriteSystem A = sphere_system(4, "3,1,2,4", a);
    RewriteSystem B = sphere_system(4, "2,1,3,4", a);
    CHECK_FALSE(permutation_isomorphic(A, B, sphere_fibering(a)).has_value());
    auto m = find_isomorphism(A, B, sphere_fibering(a));
    REQUIRE(m.has_value());
    CHECK_FALSE(m->is_permutation());

    IsomorphismOptions strict;
    strict.rescale = false;
    auto rep = classify(4, Family::Sphere, a, 4, strict);
    CHECK(rep.classes.size() == 6);
    CHECK(rep.strict_classes == 6);
}
