// Acceptance criteria 1-10.  One PASS/FAIL line per criterion; the exit
// status is nonzero when any criterion fails.  An optional argument names
// the ckq executable used for the determinism run.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "ckq/classifier.hpp"
#include "ckq/json_io.hpp"
#include "ckq/multiplier.hpp"
#include "ckq/paper_data.hpp"
#include "ckq/parser.hpp"
#include "ckq/verify.hpp"

using namespace ckq;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimit1 = 1, kLimit2 = 1, kLimit3 = 120, kLimit4Each = 1, kLimit5Each = 1, kLimit6 = 5, kLimit7 = 10,
                 kLimit8 = 60, kLimit9 = 300, kLimit10 = 600;
constexpr int kSymbolicOrder = 6;
constexpr int kStarOrder = 8;
constexpr int kFixtureOrder = 8;
constexpr int kLimitOrder = 4;
constexpr int kClassOrder = 4;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
    std::vector<std::string> problems;
    void fail(const std::string& s) { problems.push_back(s); }
    void expect(bool ok, const std::string& s) {
        if (!ok) fail(s);
    }
};

std::string plain(const SigmaPermutation& s) {
    std::string t = s.str();
    return t.substr(1, t.size() - 2);
}

const std::vector<std::pair<std::string, std::string>> kNamedN4 = {
    {"sigma0", "1,2,3,4"}, {"sigmaI", "1,2,4,3"}, {"sigmaII", "1,3,4,2"},
    {"sigmaIII", "3,1,2,4"}, {"sigmaIV", "2,1,3,4"}, {"sigmaV", "2,1,4,3"}};

std::vector<SigmaPermutation> property_sigmas() {
    std::vector<SigmaPermutation> out = SigmaPermutation::all(3);
    for (const auto& [name, s] : kNamedN4) out.push_back(SigmaPermutation::parse(s));
    return out;
}

Presentation contracted(const SigmaPermutation& s, const JAssignment& a, int order) {
    Presentation closed = generate_closed(s, theorem_multiplier(s));
    closed.order = order;
    return specialize_presentation(closed, a);
}

SeriesPoly expected_poly(const std::string& text, const Presentation& p) {
    ParseContext ctx{p.J.size(), p.J, &p.alphabet};
    return p.system.normalize(reduce(expand(parse_expression(text, ctx), p.order), p.domain()));
}

void check_multipliers(Outcome& o, const std::vector<std::pair<std::string, std::string>>& table) {
    for (const auto& [sigma, want] : table) {
        auto s = SigmaPermutation::parse(sigma);
        JMonomial got = theorem_multiplier(s);
        JMonomial exp = parse_monomial(want, s.size() - 1);
        o.expect(got == exp, s.str() + ": got " + got.str() + ", expected " + exp.str());
    }
}

void criterion1(Outcome& o) {
    check_multipliers(o, {{"1,2,3", "j1*j2"}, {"1,3,2", "j1"}, {"2,1,3", "j1^2*j2"}});
}

void criterion2(Outcome& o) {
    check_multipliers(o, {{"1,2,3,4", "j1*j2*j3"}, {"1,2,4,3", "j1*j2"}, {"1,3,4,2", "j1"},
                          {"3,1,2,4", "j1^2*j2^2*j3"}, {"2,1,3,4", "j1^2*j2*j3"}, {"2,1,4,3", "j1^2*j2"}});
}

void criterion3(Outcome& o) {
    for (int N : {3, 4})
        for (const auto& s : SigmaPermutation::all(N))
            o.expect(oracle_multiplier(s) == theorem_multiplier(s), "oracle differs at " + s.str());
    for (const auto& s : SigmaPermutation::all(5)) {
        JMonomial t = theorem_multiplier(s), c = oracle_multiplier(s);
        for (std::size_t k = 0; k < t.size(); ++k) o.expect(t[k] >= c[k], "theorem below oracle at " + s.str());
    }
}

void criterion4(Outcome& o) {
    for (const char* name : {"sigmaIII", "sigmaIV", "sigmaV"}) {
        auto t = Clock::now();
        std::string sigma;
        for (const auto& [n, s] : kNamedN4)
            if (n == name) sigma = s;
        auto s = SigmaPermutation::parse(sigma);
        Presentation closed = generate_closed(s, j_zero(s));
        bool raised = false;
        try {
            specialize_presentation(closed, JAssignment::contraction(3, 1));
        } catch (const UndefinedContraction&) {
            raised = true;
        }
        o.expect(raised, std::string(name) + ": contraction unexpectedly defined");
        o.expect(seconds_since(t) < kLimit4Each, std::string(name) + ": over time");
    }
}

// Compares a transcribed vector-space fixture coefficient for coefficient.
void vector_fixture(Outcome& o, const EquationSet& f) {
    auto s = SigmaPermutation::parse(f.sigma);
    auto a = JAssignment::parse(f.j);
    Presentation gen = contracted(s, a, kFixtureOrder);
    Presentation fx = presentation_from_equations(s, theorem_multiplier(s), f.relations, f.star, "", a, kFixtureOrder);
    std::string tag = f.id + " " + s.str();
    o.expect(gen.system.interreduced() == fx.system.interreduced(), tag + ": relations differ");
    o.expect(same_presentation(gen, fx), tag + ": star map differs");
}

void fixtures_with_ids(Outcome& o, const std::vector<std::string>& ids, double limit_each) {
    std::set<std::string> seen;
    for (const auto& f : paper_data().vector_contractions) {
        if (std::find(ids.begin(), ids.end(), f.id) == ids.end()) continue;
        auto t = Clock::now();
        vector_fixture(o, f);
        seen.insert(f.id);
        if (limit_each > 0) o.expect(seconds_since(t) < limit_each, f.id + ": over time");
    }
    for (const auto& id : ids) o.expect(seen.count(id) > 0, "no fixture for " + id);
}

void criterion5(Outcome& o) {
    fixtures_with_ids(o, {"31", "32", "2'", "3q-3"}, kLimit5Each);
    // Star map of the Euclidean-type contraction, written out.
    Presentation p = contracted(SigmaPermutation::identity(3), JAssignment::parse("iota,1"), kFixtureOrder);
    o.expect(apply_star(generator(p, 3), p) == expected_poly("x3 - i*v*x1/2", p), "xi3* in the Euclidean contraction");
}

void criterion6(Outcome& o) {
    fixtures_with_ids(o, {"bn-0", "bn-1", "bn-2"}, 0);
    for (const char* j : {"iota,1,1", "1,iota,1", "1,1,iota"}) {
        Presentation p0 = contracted(SigmaPermutation::identity(4), JAssignment::parse(j), kFixtureOrder);
        o.expect(apply_star(generator(p0, 4), p0) == expected_poly("x4 - i*v*x1", p0),
                 std::string("xi4* for sigma0 at ") + j);
    }
    for (const char* j : {"iota,1,1", "1,iota,1"}) {
        Presentation p3 = contracted(SigmaPermutation::parse("3,1,2,4"), JAssignment::parse(j), kFixtureOrder);
        for (int g = 1; g <= 4; ++g)
            o.expect(apply_star(generator(p3, g), p3) == p3.system.normalize(generator(p3, g)),
                     std::string("star not the identity for sigmaIII at ") + j);
    }
}

void criterion7(Outcome& o) {
    const std::vector<std::string> required{"3q-7", "3q-8", "1-3q-7", "2-3q-7", "5'", "4v-2", "4q-8", "4q-9",
                                            "4q-10", "4q-11", "4q-12", "4q-13", "4q-14", "4q-15",
                                            "4q-25/iota3", "4q-16/iota3"};
    std::set<std::string> seen;
    for (const auto& f : paper_data().sphere_contractions) {
        auto s = SigmaPermutation::parse(f.sigma);
        const SphereEntry& e = sphere_presentation(f.n, s);
        auto a = JAssignment::parse(f.j);
        SpherePresentation got = specialize_sphere(e, a, kFixtureOrder);
        SpherePresentation want = sphere_from_equations(f.id, f.n, s, e.J, f.relations, a, kFixtureOrder);
        o.expect(got.system.interreduced() == want.system.interreduced(), f.id + " " + s.str() + ": relations differ");
        seen.insert(f.id);
    }
    for (const auto& id : required) o.expect(seen.count(id) > 0, "no fixture for " + id);
}

RewriteSystem class_system(const IsomorphismClaim& c, const std::string& sigma, const JAssignment& a) {
    auto s = SigmaPermutation::parse(sigma);
    if (parse_family(c.family) == Family::Vector) return contracted(s, a, kClassOrder).system;
    return specialize_sphere(sphere_presentation(c.n, s), a, kClassOrder).system;
}

void criterion8(Outcome& o) {
    int positive = 0, negative = 0;
    for (const auto& c : paper_data().isomorphisms) {
        auto a = JAssignment::parse(c.j);
        Fibering fib = parse_family(c.family) == Family::Vector ? vector_fibering(a) : sphere_fibering(a);
        RewriteSystem A = class_system(c, c.a, a), B = class_system(c, c.b, a);
        auto m = find_isomorphism(A, B, fib);
        o.expect(m.has_value() == c.isomorphic, c.id + ": " + (c.isomorphic ? "no isomorphism found" : "isomorphism found"));
        if (m) o.expect(verify_isomorphism(B, A, m->inverse()), c.id + ": inverse map fails");
        (c.isomorphic ? positive : negative)++;
    }
    o.expect(positive >= 4 && negative >= 3, "too few isomorphism claims");
    const std::vector<std::tuple<std::string, std::string, int>> counts{
        {"vector", "iota,1,1", 2}, {"vector", "1,iota,1", 3}, {"vector", "1,1,iota", 2},
        {"sphere", "iota,j,j", 2}, {"sphere", "j,iota,j", 4}, {"sphere", "j,j,iota", 5}};
    for (const auto& [fam, j, want] : counts) {
        auto rep = classify(4, parse_family(fam), JAssignment::parse(j), kClassOrder);
        o.expect(rep.errors.empty(), fam + " (" + j + "): entry failed to contract");
        o.expect(static_cast<int>(rep.classes.size()) == want,
                 fam + " (" + j + "): " + std::to_string(rep.classes.size()) + " classes, expected " + std::to_string(want));
    }
}

void criterion9(Outcome& o) {
    for (const auto& s : property_sigmas()) {
        Presentation p = generate_relations(s, theorem_multiplier(s), kSymbolicOrder);
        o.expect(p.system.overlap_check().empty(), "overlaps at " + s.str());
        o.expect(check_central(p), "invariant not central at " + s.str());
        o.expect(check_commutative_limit(p), "v = 0 not commutative at " + s.str());
        Presentation q = generate_relations(s, theorem_multiplier(s), kStarOrder);
        o.expect(check_star_involutive(q), "star not involutive at " + s.str());
        o.expect(check_star_compatible(q), "star incompatible at " + s.str());
    }
    // v = 0 for every contraction built from 1, iota and i.
    for (const auto& s : property_sigmas()) {
        const std::size_t params = s.size() - 1;
        int combos = 1;
        for (std::size_t k = 0; k < params; ++k) combos *= 3;
        for (int c = 0; c < combos; ++c) {
            std::vector<JValue> vals;
            for (int x = c, k = 0; k < static_cast<int>(params); ++k, x /= 3)
                vals.push_back(x % 3 == 0 ? JValue::Unit : x % 3 == 1 ? JValue::Nilpotent : JValue::Imaginary);
            JAssignment a(vals);
            try {
                o.expect(check_commutative_limit(contracted(s, a, kLimitOrder)),
                         "v = 0 not commutative at " + s.str() + " (" + a.str() + ")");
            } catch (const std::exception& e) {
                o.fail(s.str() + " (" + a.str() + "): " + e.what());
            }
        }
    }
    for (const auto& e : sphere_catalog()) {
        for (std::size_t k = 1; k < static_cast<std::size_t>(e.N); ++k) {
            auto a = JAssignment::contraction(e.N - 1, k, JValue::Generic);
            try {
                SpherePresentation sp = specialize_sphere(e, a, kLimitOrder);
                for (const auto& [w, c] : commutators(sp))
                    for (const auto& [u, x] : c.terms())
                        o.expect(x.valuation() >= 1, e.id + " (" + a.str() + "): v = 0 not commutative");
            } catch (const std::exception& ex) {
                o.fail(e.id + " (" + a.str() + "): " + ex.what());
            }
        }
    }
    for (int N : {3, 4, 5})
        for (const auto& s : SigmaPermutation::all(N)) o.expect(check_orthogonality(s), "D^t C0 D != I at " + s.str());
}

std::string run_cli(const std::string& exe) {
    std::string cmd = "\"" + exe + "\" verify-paper --format json";
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return {};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
    pclose(f);
    return out;
}

std::string cli_path;

void criterion10(Outcome& o) {
    std::string a, b;
    if (cli_path.empty()) {
        a = to_json(verify_paper({})).dump(2);
        b = to_json(verify_paper({})).dump(2);
    } else {
        a = run_cli(cli_path);
        b = run_cli(cli_path);
    }
    o.expect(!a.empty(), "empty report");
    o.expect(a == b, "reports differ");
    try {
        o.expect(Json::parse(a).at("pass").get<bool>(), "report has failures");
    } catch (const std::exception& e) {
        o.fail(std::string("report is not valid JSON: ") + e.what());
    }
}

struct Criterion {
    int number;
    std::string title;
    double limit;
    std::function<void(Outcome&)> body;
};

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) cli_path = argv[1];
    const std::vector<Criterion> criteria{
        {1, "multiplier table N=3", kLimit1, criterion1},
        {2, "multiplier table N=4", kLimit2, criterion2},
        {3, "oracle agreement S(3), S(4); sufficiency S(5)", kLimit3, criterion3},
        {4, "first-power multiplier leaves undefined contractions", 3 * kLimit4Each, criterion4},
        {5, "vector-space contractions N=3", 8 * kLimit5Each, criterion5},
        {6, "vector-space contractions N=4", kLimit6, criterion6},
        {7, "sphere contractions", kLimit7, criterion7},
        {8, "isomorphism claims and class counts", kLimit8, criterion8},
        {9, "property suite", kLimit9, criterion9},
        {10, "determinism of verify-paper", kLimit10, criterion10},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        auto t = Clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double dt = seconds_since(t);
        if (dt >= c.limit) o.fail("took " + std::to_string(dt) + " s, limit " + std::to_string(c.limit) + " s");
        bool pass = o.problems.empty();
        failed += !pass;
        std::ostringstream line;
        line << (pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " (" << std::fixed
             << std::setprecision(2) << dt << " s, limit " << std::setprecision(0) << c.limit << " s)";
        std::cout << line.str() << "\n";
        for (std::size_t k = 0; k < o.problems.size() && k < 10; ++k) std::cout << "    " << o.problems[k] << "\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
