#include "doctest.h"

#include "ckq/multiplier.hpp"
#include "ckq/paper_data.hpp"
#include "ckq/relations.hpp"

using namespace ckq;

namespace {

bool dominates(const JMonomial& a, const JMonomial& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] < b[k]) return false;
    return true;
}

}  // namespace

TEST_CASE("hand-derived multipliers") {
    CHECK(theorem_multiplier(SigmaPermutation::parse("1,2,3")) == JMonomial({1, 1}));
    CHECK(theorem_multiplier(SigmaPermutation::parse("1,3,2")) == JMonomial({1, 0}));
    CHECK(theorem_multiplier(SigmaPermutation::parse("2,1,4,3")) == JMonomial({2, 1, 0}));
    CHECK(j_zero(SigmaPermutation::parse("1,2,3,4")) == JMonomial({1, 1, 1}));
    CHECK(multiplier_union(JMonomial({2, 0, 1}), JMonomial({1, 1, 0})) == JMonomial({2, 1, 1}));
}

TEST_CASE("transcribed multiplier records") {
    const auto& data = paper_data();
    REQUIRE(!data.multipliers.empty());
    for (const auto& m : data.multipliers) {
        CAPTURE(m.id);
        CAPTURE(m.sigma);
        CHECK(theorem_multiplier(SigmaPermutation::parse(m.sigma)) == parse_monomial(m.J, m.n - 1));
    }
}

TEST_CASE("theorem multiplier matches the prefactor oracle") {
    for (int N : {2, 3, 4})
        for (const auto& s : SigmaPermutation::all(N)) {
            CAPTURE(s.str());
            JMonomial t = theorem_multiplier(s);
            CHECK(t == oracle_multiplier(s));
            CHECK(dominates(t, j_zero(s)));
            CHECK(t.is_nonnegative());
        }
}

TEST_CASE("theorem multiplier clears every prefactor for N = 5") {
    int checked = 0;
    for (const auto& s : SigmaPermutation::all(5)) {
        if ((checked++) % 10) continue;
        CAPTURE(s.str());
        CHECK(dominates(theorem_multiplier(s), oracle_multiplier(s)));
    }
}

TEST_CASE("first-power multiplier leaves undefined contractions") {
    const auto& named = paper_data().named_sigma.at(4);
    for (const char* name : {"sigmaIII", "sigmaIV", "sigmaV"}) {
        CAPTURE(name);
        auto s = SigmaPermutation::parse(named.at(name));
        auto iota1 = JAssignment::contraction(3, 1);
        Presentation bad = generate_closed(s, j_zero(s));
        CHECK_THROWS_AS(specialize_presentation(bad, iota1), UndefinedContraction);
        Presentation good = generate_closed(s, theorem_multiplier(s));
        CHECK_NOTHROW(specialize_presentation(good, iota1));
    }
}

TEST_CASE("multiplier kinds") {
    CHECK(parse_multiplier_kind("theorem") == MultiplierKind::Theorem);
    CHECK(parse_multiplier_kind("j0") == MultiplierKind::JZero);
    CHECK(parse_multiplier_kind("oracle") == MultiplierKind::Oracle);
    CHECK_THROWS(parse_multiplier_kind("other"));
}
