#include "ckq/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ckq/multiplier.hpp"
#include "ckq/paper_data.hpp"

namespace ckq {

bool VerifyReport::all_pass() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
    std::size_t n = 0;
    for (const auto& c : checks)
        if (!c.pass) ++n;
    return n;
}

namespace {

const char* kCorruption = " + 3*v^2";

template <class F>
void run(VerifyReport& r, const std::string& id, const std::string& category, F&& f) {
    CheckResult c{id, category, false, ""};
    try {
        c.detail = f();
        c.pass = c.detail.empty();
        if (c.pass) c.detail = "ok";
    } catch (const std::exception& e) {
        c.detail = std::string("error: ") + e.what();
    }
    r.checks.push_back(std::move(c));
}

EquationSet maybe_corrupt(EquationSet s, const std::string& corrupt) {
    if (s.id == corrupt && !s.relations.empty()) s.relations.front() += kCorruption;
    return s;
}

std::string sigma_args(const SigmaPermutation& s) {
    std::string t = s.str();
    return t.substr(1, t.size() - 2);
}

}  // namespace

VerifyReport verify_paper(const VerifyOptions& opt) {
    const PaperData& data = paper_data();
    VerifyReport r;
    r.order = opt.order;
    r.seed = opt.seed;
    const int order = opt.order;

    for (const auto& m : data.multipliers) {
        run(r, m.id + " " + m.sigma, "multiplier", [&]() -> std::string {
            auto sigma = SigmaPermutation::parse(m.sigma);
            std::string text = m.id == opt.corrupt ? m.J + "*j1" : m.J;
            JMonomial want = parse_monomial(text, m.n - 1);
            JMonomial got = theorem_multiplier(sigma);
            return got == want ? "" : "theorem gives " + got.str() + ", expected " + want.str();
        });
    }
    for (int N : {3, 4}) {
        run(r, "oracle S(" + std::to_string(N) + ")", "multiplier", [&]() -> std::string {
            for (const auto& s : SigmaPermutation::all(N))
                if (!(oracle_multiplier(s) == theorem_multiplier(s))) return "oracle differs at " + s.str();
            return "";
        });
    }
    run(r, "sampled S(5) sufficiency", "multiplier", [&]() -> std::string {
        std::mt19937 rng(opt.seed);
        std::vector<int> image{1, 2, 3, 4, 5};
        for (int k = 0; k < opt.samples; ++k) {
            std::shuffle(image.begin(), image.end(), rng);
            SigmaPermutation s(image);
            JMonomial t = theorem_multiplier(s), o = oracle_multiplier(s);
            for (std::size_t x = 0; x < t.size(); ++x)
                if (t[x] < o[x]) return "theorem below oracle at " + s.str();
        }
        return "";
    });
    for (int N : {3, 4, 5}) {
        run(r, "orthogonality S(" + std::to_string(N) + ")", "ck_core", [&]() -> std::string {
            for (const auto& s : SigmaPermutation::all(N))
                if (!check_orthogonality(s)) return "D^t C0 D != I at " + s.str();
            return "";
        });
    }

    for (const auto& t : data.templates) {
        run(r, t.id, "vector template", [&]() -> std::string {
            for (const auto& s : SigmaPermutation::all(t.n)) {
                std::string sa = sigma_args(s);
                std::vector<std::string> rels;
                for (const auto& x : t.relations) rels.push_back(instantiate_template(x, sa));
                if (t.id == opt.corrupt) rels.front() += kCorruption;
                std::map<std::string, std::string> star;
                for (const auto& [k, v] : t.star) star[instantiate_template(k, sa)] = instantiate_template(v, sa);
                JMonomial J = theorem_multiplier(s);
                auto sym = JAssignment::all(t.n - 1, JValue::Generic);
                Presentation fx = presentation_from_equations(s, J, rels, star, instantiate_template(t.invariant, sa), sym, order);
                Presentation gen = generate_relations(s, J, order);
                if (!same_presentation(gen, fx)) return "relations or star differ at " + s.str();
                if (!(gen.system.normalize(gen.invariant) == fx.system.normalize(fx.invariant)))
                    return "invariant differs at " + s.str();
            }
            return "";
        });
    }
    for (const auto& raw : data.vector_generic) {
        EquationSet f = maybe_corrupt(raw, opt.corrupt);
        run(r, f.id, "vector", [&]() -> std::string {
            auto s = SigmaPermutation::parse(f.sigma);
            JMonomial J = theorem_multiplier(s);
            auto sym = JAssignment::all(f.n - 1, JValue::Generic);
            Presentation fx = presentation_from_equations(s, J, f.relations, f.star, f.invariant, sym, order);
            Presentation gen = generate_relations(s, J, order);
            if (!same_presentation(gen, fx)) return "relations or star differ";
            if (!(gen.system.normalize(gen.invariant) == fx.system.normalize(fx.invariant))) return "invariant differs";
            if (!check_central(gen)) return "invariant not central";
            return "";
        });
    }
    for (const auto& raw : data.vector_contractions) {
        EquationSet f = maybe_corrupt(raw, opt.corrupt);
        run(r, f.id + " " + f.sigma, "vector", [&]() -> std::string {
            auto s = SigmaPermutation::parse(f.sigma);
            JMonomial J = theorem_multiplier(s);
            auto a = JAssignment::parse(f.j);
            Presentation closed = generate_closed(s, J);
            closed.order = order;
            Presentation gen = specialize_presentation(closed, a);
            Presentation fx = presentation_from_equations(s, J, f.relations, f.star, "", a, order);
            if (!(gen.system.interreduced() == fx.system.interreduced())) return "relations differ";
            if (!same_presentation(gen, fx)) return "star map differs";
            return "";
        });
    }
    for (const char* name : {"3,1,2,4", "2,1,3,4", "2,1,4,3"}) {
        run(r, std::string("J0 at iota1 ") + name, "existence", [&]() -> std::string {
            auto s = SigmaPermutation::parse(name);
            try {
                specialize_presentation(generate_closed(s, j_zero(s)), JAssignment::contraction(3, 1));
            } catch (const UndefinedContraction&) {
                return "";
            }
            return "contraction unexpectedly defined";
        });
    }

    for (const auto& e : sphere_catalog()) {
        run(r, e.id + " " + sigma_args(e.sigma), "sphere", [&]() -> std::string {
            auto sym = JAssignment::all(e.N - 1, JValue::Generic);
            SpherePresentation s = specialize_sphere(e, sym, order);
            std::vector<std::string> eqs = e.equations;
            if (e.id == opt.corrupt) eqs.front() += kCorruption;
            SpherePresentation again = sphere_from_equations(e.id, e.N, e.sigma, e.J, eqs, sym, order);
            if (!(s.closed == again.closed)) return "symbolic specialization altered the catalogued relations";
            if (!s.system.overlap_check().empty()) return "overlaps do not resolve";
            return "";
        });
    }
    for (const auto& raw : data.sphere_contractions) {
        EquationSet f = maybe_corrupt(raw, opt.corrupt);
        run(r, f.id + " " + f.sigma, "sphere", [&]() -> std::string {
            auto sigma = SigmaPermutation::parse(f.sigma);
            const SphereEntry& e = sphere_presentation(f.n, sigma);
            auto a = JAssignment::parse(f.j);
            SpherePresentation got = specialize_sphere(e, a, order);
            SpherePresentation want = sphere_from_equations(f.id, f.n, sigma, e.J, f.relations, a, order);
            if (!(got.system.interreduced() == want.system.interreduced())) return "relations differ";
            if (!got.system.overlap_check().empty()) return "overlaps do not resolve";
            return "";
        });
    }

    const int cls_order = std::min(order, 4);
    for (const auto& c : data.isomorphisms) {
        run(r, c.id, "isomorphism", [&]() -> std::string {
            Family fam = parse_family(c.family);
            auto a = JAssignment::parse(c.j);
            auto sa = SigmaPermutation::parse(c.a), sb = SigmaPermutation::parse(c.b);
            RewriteSystem A, B;
            Fibering fib;
            if (fam == Family::Vector) {
                auto build = [&](const SigmaPermutation& s) {
                    Presentation p = generate_closed(s, theorem_multiplier(s));
                    p.order = cls_order;
                    return specialize_presentation(p, a).system;
                };
                A = build(sa);
                B = build(sb);
                fib = vector_fibering(a);
            } else {
                A = specialize_sphere(sphere_presentation(c.n, sa), a, cls_order).system;
                B = specialize_sphere(sphere_presentation(c.n, sb), a, cls_order).system;
                fib = sphere_fibering(a);
            }
            bool want = c.id == opt.corrupt ? !c.isomorphic : c.isomorphic;
            auto m = find_isomorphism(A, B, fib);
            if (m.has_value() != want) return want ? "no isomorphism found" : "unexpected isomorphism found";
            return "";
        });
    }
    for (const auto& c : data.class_counts) {
        run(r, c.id, "classes", [&]() -> std::string {
            auto rep = classify(c.n, parse_family(c.family), JAssignment::parse(c.j), cls_order);
            int want = c.id == opt.corrupt ? c.classes + 1 : c.classes;
            if (!rep.errors.empty()) return "entry failed: " + rep.errors.front();
            if (static_cast<int>(rep.classes.size()) != want)
                return "found " + std::to_string(rep.classes.size()) + " classes, expected " + std::to_string(want);
            return "";
        });
    }
    return r;
}

Json to_json(const VerifyReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"id", c.id}, {"category", c.category}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"order", r.order},
            {"seed", r.seed},
            {"total", r.checks.size()},
            {"failures", r.failures()},
            {"pass", r.all_pass()},
            {"checks", checks}};
}

std::string render_text(const VerifyReport& r) {
    std::ostringstream os;
    for (const auto& c : r.checks)
        os << (c.pass ? "PASS " : "FAIL ") << c.category << " " << c.id << (c.pass ? "" : ": " + c.detail) << "\n";
    os << r.checks.size() - r.failures() << "/" << r.checks.size() << " checks passed\n";
    return os.str();
}

}  // namespace ckq
