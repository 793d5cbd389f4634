#include "ckq/sphere.hpp"

#include <cctype>
#include <functional>
#include <set>
#include <sstream>

#include "ckq/multiplier.hpp"
#include "ckq/paper_data.hpp"
#include "ckq/parser.hpp"

namespace ckq {

Alphabet sphere_alphabet(int N) {
    Alphabet al;
    for (int k = 1; k < N; ++k) {
        al.names.push_back("r" + std::to_string(k));
        al.rank.push_back(k);
    }
    for (int k = 1; k < N; ++k) {
        al.names.push_back("rh" + std::to_string(k));
        al.rank.push_back(N + k);
    }
    return al;
}

const std::vector<SphereEntry>& sphere_catalog() {
    static const std::vector<SphereEntry> catalog = [] {
        std::vector<SphereEntry> out;
        for (const auto& e : paper_data().sphere_catalog) {
            SphereEntry s;
            s.id = e.id;
            s.N = e.n;
            s.sigma = SigmaPermutation::parse(e.sigma);
            s.J = theorem_multiplier(s.sigma);
            s.equations = e.relations;
            out.push_back(std::move(s));
        }
        return out;
    }();
    return catalog;
}

const SphereEntry& sphere_presentation(int N, const SigmaPermutation& sigma) {
    for (const auto& e : sphere_catalog())
        if (e.N == N && e.sigma == sigma) return e;
    throw std::out_of_range("no catalogued sphere for N=" + std::to_string(N) + ", sigma=" + sigma.str());
}

namespace {

bool mentions(const Word& w, int letter) {
    for (int x : w)
        if (x == letter) return true;
    return false;
}

bool has_hat(const SeriesPoly& p, int first_hat) {
    for (const auto& [w, c] : p.terms())
        for (int x : w)
            if (x >= first_hat) return true;
    return false;
}

// Replaces every defined left generator by its value.
SeriesPoly substitute(const SeriesPoly& p, const std::map<int, SeriesPoly>& defs, const Domain& d) {
    SeriesPoly out;
    for (const auto& [w, c] : p.terms()) {
        SeriesPoly acc;
        acc.add(Word{}, c);
        for (int x : w) {
            auto it = defs.find(x);
            if (it != defs.end()) {
                acc = multiply(acc, it->second, [&](const VSeries& a, const VSeries& b) { return d.mul(a, b); });
            } else {
                SeriesPoly l;
                l.add(Word{x}, d.one());
                acc = multiply(acc, l, [&](const VSeries& a, const VSeries& b) { return d.mul(a, b); });
            }
        }
        out += acc;
    }
    return out;
}

bool acyclic(const std::map<int, SeriesPoly>& defs) {
    std::map<int, std::set<int>> edges;
    for (const auto& [h, p] : defs)
        for (const auto& [w, c] : p.terms())
            for (int x : w)
                if (defs.count(x)) edges[h].insert(x);
    std::map<int, int> state;
    std::function<bool(int)> visit = [&](int h) {
        if (state[h] == 1) return false;
        if (state[h] == 2) return true;
        state[h] = 1;
        for (int x : edges[h])
            if (!visit(x)) return false;
        state[h] = 2;
        return true;
    };
    for (const auto& [h, p] : defs)
        if (!visit(h)) return false;
    return true;
}

}  // namespace

SpherePresentation sphere_from_equations(const std::string& id, int N, const SigmaPermutation& sigma,
                                         const JMonomial& J, const std::vector<std::string>& equations,
                                         const JAssignment& a, int order) {
    const std::size_t params = N - 1;
    if (a.size() != params) throw std::invalid_argument("assignment length must be N-1");
    SpherePresentation s;
    s.id = id;
    s.N = N;
    s.sigma = sigma;
    s.J = J;
    s.assignment = a;
    s.order = order;
    s.alphabet = sphere_alphabet(N);

    ParseContext ctx{params, J, &s.alphabet};
    Domain d;
    d.params = params;
    d.order = order;
    bool generic = true;
    for (auto v : a.values())
        if (v != JValue::Generic) generic = false;
    if (!generic) d.assignment = a;

    std::vector<SeriesPoly> eqs;
    for (const auto& text : equations) {
        ExprPoly p = parse_equation(text, ctx);
        try {
            p = specialize(p, a);
        } catch (const UndefinedContraction& e) {
            throw e.with_context("sphere " + id + ": " + text);
        }
        s.closed.push_back(p);
        eqs.push_back(reduce(expand(p, order), d));
    }

    const int first_hat = N - 1;
    std::map<int, SeriesPoly> defs;
    std::vector<bool> used(eqs.size(), false);
    for (int h = first_hat; h < 2 * (N - 1); ++h) {
        bool occurs = false;
        for (const auto& e : eqs)
            for (const auto& [w, c] : e.terms())
                if (mentions(w, h)) occurs = true;
        if (!occurs) continue;
        for (std::size_t k = 0; k < eqs.size() && !defs.count(h); ++k) {
            if (used[k]) continue;
            VSeries c = eqs[k].coeff(Word{h});
            if (!d.invertible(c)) continue;
            bool contracting = true;
            for (const auto& [w, x] : eqs[k].terms())
                if (w != Word{h} && mentions(w, h) && x.valuation() < 1) contracting = false;
            if (!contracting) continue;
            SeriesPoly rest = eqs[k];
            rest.erase(Word{h});
            VSeries f = -d.invert(c);
            SeriesPoly def;
            for (const auto& [w, x] : rest.terms()) def.add(w, d.mul(x, f));
            defs.emplace(h, def);
            used[k] = true;
        }
        if (!defs.count(h)) throw NonEliminable("sphere " + id + ": no defining equation for " + s.alphabet.names[h]);
    }

    s.direct = acyclic(defs);
    const int cap = order + static_cast<int>(defs.size()) + 2;
    for (int round = 0;; ++round) {
        bool done = true;
        for (const auto& [h, p] : defs)
            if (has_hat(p, first_hat)) done = false;
        if (done) break;
        if (round == cap)
            throw NonEliminable("sphere " + id + ": left generators persist after " + std::to_string(cap) + " substitutions");
        std::map<int, SeriesPoly> next;
        for (const auto& [h, p] : defs) next.emplace(h, substitute(p, defs, d));
        defs = std::move(next);
    }
    for (int h = first_hat; h < 2 * (N - 1); ++h) {
        auto it = defs.find(h);
        s.hat_values.push_back(it == defs.end() ? SeriesPoly() : it->second);
    }

    Alphabet r;
    r.names.assign(s.alphabet.names.begin(), s.alphabet.names.begin() + first_hat);
    r.rank.assign(s.alphabet.rank.begin(), s.alphabet.rank.begin() + first_hat);
    std::vector<SeriesPoly> rels;
    for (std::size_t k = 0; k < eqs.size(); ++k) {
        if (used[k]) continue;
        SeriesPoly p = substitute(eqs[k], defs, d);
        if (has_hat(p, first_hat)) throw NonEliminable("sphere " + id + ": relation keeps a left generator");
        rels.push_back(p);
    }
    s.system = solve_relations(rels, r, d);
    return s;
}

SpherePresentation specialize_sphere(const SphereEntry& entry, const JAssignment& a, int order) {
    return sphere_from_equations(entry.id, entry.N, entry.sigma, entry.J, entry.equations, a, order);
}

std::vector<std::pair<Word, SeriesPoly>> commutators(const SpherePresentation& s) {
    std::vector<std::pair<Word, SeriesPoly>> out;
    const Domain& d = s.system.domain();
    for (int a = 0; a < s.N - 1; ++a)
        for (int b = a + 1; b < s.N - 1; ++b) {
            SeriesPoly c;
            c.add(Word{a, b}, d.one());
            c.sub(Word{b, a}, d.one());
            SeriesPoly nf = s.system.normalize(c);
            if (!nf.is_zero()) out.emplace_back(Word{a, b}, nf);
        }
    return out;
}

std::string kinematics_label(const JAssignment& a, int N) {
    auto column = [](JValue v) { return v == JValue::Unit ? 0 : v == JValue::Nilpotent ? 1 : v == JValue::Imaginary ? 2 : -1; };
    if (N == 3 && a.size() == 2) {
        static const char* grid[3][3] = {{"Spherical", "Euclid", "Lobachevsky"},
                                         {"Newton(+)", "Galilei", "Newton(-)"},
                                         {"anti de Sitter", "Minkowski", "de Sitter"}};
        int c = column(a[0]), r = column(a[1]);
        if (c >= 0 && r >= 0) return grid[r][c];
        if (r == 1 && c < 0) return "Newton";
    }
    if (N == 4 && a.size() == 3 && a[1] == JValue::Nilpotent) return a[0] == JValue::Nilpotent ? "Galilei" : "Newton";
    return "S^" + std::to_string(N - 1) + "(j) with assignment (" + a.str() + ")";
}

std::string render_text(const SpherePresentation& s) {
    auto names = s.names();
    Alphabet r = s.system.alphabet();
    std::ostringstream os;
    os << "sphere S^" << s.N - 1 << "(" << s.assignment.str() << "; sigma=" << s.sigma.str() << ") [" << s.id << "]\n";
    os << "multiplier J = " << s.J.str() << "\n";
    os << "label " << kinematics_label(s.assignment, s.N) << "\n";
    os << "order " << s.order << "\n";
    os << "left generators " << (s.direct ? "eliminated" : "eliminated as a v-adic fixed point") << "\n";
    for (std::size_t k = 0; k < s.hat_values.size(); ++k)
        if (!s.hat_values[k].is_zero())
            os << "  " << s.alphabet.names[s.N - 1 + k] << " = " << render(s.hat_values[k], r, &names) << "\n";
    os << "commutators:\n";
    auto comm = commutators(s);
    if (comm.empty()) os << "  (all generators commute)\n";
    for (const auto& [w, c] : comm)
        os << "  [" << r.names[w[0]] << "," << r.names[w[1]] << "] = " << render(c, r, &names) << "\n";
    return os.str();
}

std::string render_latex(const SpherePresentation& s) {
    auto names = s.names();
    Alphabet r = s.system.alphabet();
    std::ostringstream os;
    os << "\\begin{array}{l}\n";
    os << "J = " << latex_from_plain(s.J.str()) << " \\\\\n";
    for (const auto& [w, c] : commutators(s))
        os << latex_from_plain("[" + r.names[w[0]] + "," + r.names[w[1]] + "]") << " = " << latex_from_plain(render(c, r, &names))
           << " \\\\\n";
    os << "\\end{array}";
    std::string out = os.str();
    std::string res;
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (out[k] == 'r' && k + 1 < out.size() && std::isdigit(static_cast<unsigned char>(out[k + 1])) &&
            (k == 0 || !std::isalpha(static_cast<unsigned char>(out[k - 1])))) {
            std::size_t e = k + 1;
            while (e < out.size() && std::isdigit(static_cast<unsigned char>(out[e]))) ++e;
            res += "r_{" + out.substr(k + 1, e - k - 1) + "}";
            k = e - 1;
        } else {
            res += out[k];
        }
    }
    return res;
}

}  // namespace ckq
