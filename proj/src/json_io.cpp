#include "ckq/json_io.hpp"

namespace ckq {

namespace {

std::string rat(const Rational& q) { return q.get_str(); }

Json monomial_json(const JMonomial& m) { return m.exponents(); }

JMonomial monomial_from_json(const Json& j) { return JMonomial(j.get<std::vector<int>>()); }

Json rules_json(const RewriteSystem& rs) {
    Json rules = Json::array();
    for (const auto& [lhs, rhs] : rs.rules())
        rules.push_back({{"lhs", Json::array({rs.alphabet().names[lhs.first], rs.alphabet().names[lhs.second]})},
                         {"rhs", to_json(rhs, rs.alphabet())}});
    return rules;
}

Json commutators_json(const std::vector<std::pair<Word, SeriesPoly>>& comm, const Alphabet& al) {
    Json out = Json::array();
    for (const auto& [w, c] : comm)
        out.push_back({{"pair", Json::array({al.names[w[0]], al.names[w[1]]})}, {"value", to_json(c, al)}});
    return out;
}

}  // namespace

Json to_json(const VSeries& s) {
    Json coeffs = Json::array();
    for (int p = 0; p <= s.order(); ++p)
        for (const auto& [m, c] : s.coeff(p).terms())
            coeffs.push_back({{"vpow", p}, {"jexp", monomial_json(m)}, {"re", rat(c.re())}, {"im", rat(c.im())}});
    return {{"order", s.order()}, {"params", s.params()}, {"coeffs", coeffs}, {"text", s.str()}};
}

VSeries series_from_json(const Json& j) {
    VSeries s(j.at("params").get<std::size_t>(), j.at("order").get<int>());
    for (const auto& t : j.at("coeffs"))
        s.add_term(monomial_from_json(t.at("jexp")),
                   GaussianRational(Rational(t.at("re").get<std::string>()), Rational(t.at("im").get<std::string>())),
                   t.at("vpow").get<int>());
    return s;
}

Json to_json(const SeriesPoly& p, const Alphabet& al) {
    Json out = Json::array();
    for (const auto& [w, c] : p.terms()) {
        Json word = Json::array();
        for (int x : w) word.push_back(al.names[x]);
        out.push_back({{"word", word}, {"coeff", to_json(c)}});
    }
    return out;
}

SeriesPoly poly_from_json(const Json& j, const Alphabet& al, const Domain& d) {
    SeriesPoly p;
    for (const auto& t : j) {
        Word w;
        for (const auto& name : t.at("word")) {
            int g = al.find(name.get<std::string>());
            if (g < 0) throw std::invalid_argument("unknown generator " + name.get<std::string>());
            w.push_back(g);
        }
        VSeries c = series_from_json(t.at("coeff"));
        if (c.order() != d.order || c.params() != d.params) throw std::invalid_argument("coefficient does not match the domain");
        p.add(w, c);
    }
    return p;
}

Json to_json(const Presentation& p) {
    Json star = Json::array();
    for (std::size_t g = 0; g < p.star.size(); ++g)
        star.push_back({{"generator", p.alphabet.names[g]}, {"image", to_json(p.star[g], p.alphabet)}});
    return {{"n", p.N},
            {"sigma", p.sigma.str()},
            {"multiplier", {{"exponents", monomial_json(p.J)}, {"text", p.J.str()}}},
            {"assignment", p.assignment.str()},
            {"order", p.order},
            {"rules", rules_json(p.system)},
            {"commutators", commutators_json(commutators(p), p.alphabet)},
            {"star", star},
            {"invariant", to_json(p.invariant, p.alphabet)}};
}

Presentation presentation_from_json(const Json& j) {
    Presentation p;
    p.N = j.at("n").get<int>();
    p.sigma = SigmaPermutation::parse(j.at("sigma").get<std::string>());
    if (p.sigma.size() != p.N) throw std::invalid_argument("sigma does not match n");
    p.J = monomial_from_json(j.at("multiplier").at("exponents"));
    p.assignment = JAssignment::parse(j.at("assignment").get<std::string>());
    p.order = j.at("order").get<int>();
    p.alphabet = vector_alphabet(p.sigma);
    Domain d;
    d.params = p.N - 1;
    d.order = p.order;
    if (!p.symbolic()) d.assignment = p.assignment;
    RewriteSystem rs(p.alphabet, d);
    for (const auto& r : j.at("rules")) {
        int a = p.alphabet.find(r.at("lhs").at(0).get<std::string>());
        int b = p.alphabet.find(r.at("lhs").at(1).get<std::string>());
        if (a < 0 || b < 0) throw std::invalid_argument("unknown generator in rule");
        rs.mutable_rules().emplace(std::make_pair(a, b), poly_from_json(r.at("rhs"), p.alphabet, d));
    }
    p.system = rs;
    p.star.assign(p.N, SeriesPoly());
    for (const auto& s : j.at("star")) {
        int g = p.alphabet.find(s.at("generator").get<std::string>());
        if (g < 0) throw std::invalid_argument("unknown generator in star map");
        p.star[g] = poly_from_json(s.at("image"), p.alphabet, d);
    }
    p.invariant = poly_from_json(j.at("invariant"), p.alphabet, d);
    return p;
}

bool same_expanded(const Presentation& a, const Presentation& b) {
    return a.N == b.N && a.sigma == b.sigma && a.J == b.J && a.assignment == b.assignment && a.order == b.order &&
           a.system == b.system && a.star == b.star && a.invariant == b.invariant;
}

Json to_json(const SpherePresentation& s) {
    const Alphabet& r = s.system.alphabet();
    Json hats = Json::array();
    for (std::size_t k = 0; k < s.hat_values.size(); ++k)
        hats.push_back({{"generator", s.alphabet.names[s.N - 1 + k]}, {"value", to_json(s.hat_values[k], r)}});
    return {{"id", s.id},
            {"n", s.N},
            {"sigma", s.sigma.str()},
            {"multiplier", {{"exponents", monomial_json(s.J)}, {"text", s.J.str()}}},
            {"assignment", s.assignment.str()},
            {"label", kinematics_label(s.assignment, s.N)},
            {"order", s.order},
            {"direct", s.direct},
            {"left_generators", hats},
            {"rules", rules_json(s.system)},
            {"commutators", commutators_json(commutators(s), r)}};
}

Json to_json(const ClassificationReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"name", e.name}, {"sigma", e.sigma.str()}, {"label", e.label}, {"digest", e.digest}});
    Json classes = Json::array();
    for (const auto& b : r.classes) {
        Json names = Json::array();
        for (int k : b) names.push_back(r.entries[k].name);
        classes.push_back(names);
    }
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) {
        const auto& a = r.entries[w.from];
        const auto& b = r.entries[w.to];
        witnesses.push_back({{"from", a.name},
                             {"to", b.name},
                             {"renumbering_only", w.map.is_permutation()},
                             {"map", w.map.str(a.system.alphabet().names, b.system.alphabet().names)}});
    }
    return {{"n", r.N},
            {"family", family_name(r.family)},
            {"assignment", r.assignment.str()},
            {"order", r.order},
            {"base_dim", r.base_dim},
            {"fiber_dim", r.fiber_dim},
            {"entries", entries},
            {"classes", classes},
            {"class_count", r.classes.size()},
            {"strict_class_count", r.strict_classes},
            {"witnesses", witnesses},
            {"errors", r.errors}};
}

Json to_json(const ExtMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.str());
        rows.push_back(r);
    }
    return rows;
}

}  // namespace ckq
