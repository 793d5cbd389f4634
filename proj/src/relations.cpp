#include "ckq/relations.hpp"

#include <sstream>

#include "ckq/parser.hpp"

namespace ckq {

namespace {

struct Builder {
    const SigmaPermutation& sigma;
    JMonomial J;
    int N;
    int n;
    std::size_t params;

    ScalarExpr one() const { return ScalarExpr::constant(params, 1); }
    ScalarExpr num(const GaussianRational& c) const { return ScalarExpr::constant(params, c); }
    ScalarExpr cosh(const Rational& c) const { return ScalarExpr::cosh(c, J); }
    ScalarExpr sinh(const Rational& c) const { return ScalarExpr::sinh(c, J); }
    // (1, sigma_p)
    JMonomial w(int p) const { return ck_product(1, sigma(p), N); }
    ScalarExpr ratio(const JMonomial& num_m, const JMonomial& den) const { return ScalarExpr::monomial(num_m / den); }
    int letter(int p) const { return sigma(p) - 1; }
    ExprPoly word(std::initializer_list<int> positions, const ScalarExpr& c) const {
        Word wd;
        for (int p : positions) wd.push_back(letter(p));
        ExprPoly r;
        r.add(wd, c);
        return r;
    }
};

}  // namespace

bool Presentation::symbolic() const {
    for (auto v : assignment.values())
        if (v != JValue::Generic) return false;
    return true;
}

Alphabet vector_alphabet(const SigmaPermutation& sigma) {
    Alphabet al;
    for (int g = 1; g <= sigma.size(); ++g) {
        al.names.push_back("x" + std::to_string(g));
        al.rank.push_back(sigma.position(g));
    }
    return al;
}

Presentation generate_closed(const SigmaPermutation& sigma, const JMonomial& J) {
    int N = sigma.size();
    if (N < 2) throw std::invalid_argument("N must be at least 2");
    if (static_cast<int>(J.size()) != N - 1) throw std::invalid_argument("multiplier length must be N-1");
    Builder b{sigma, J, N, N / 2, static_cast<std::size_t>(N - 1)};
    const int n = b.n;
    const bool odd = N % 2 == 1;
    const GaussianRational I = GaussianRational::i();
    auto r = rho(N);

    Presentation p;
    p.N = N;
    p.sigma = sigma;
    p.J = J;
    p.assignment = JAssignment::all(N - 1, JValue::Generic);
    p.alphabet = vector_alphabet(sigma);

    for (int k = 1; k <= N; ++k) {
        for (int m = k + 1; m <= N; ++m) {
            int kp = N + 1 - k, mp = N + 1 - m;
            ExprPoly rel = b.word({k, m}, b.one());
            if (m != kp) {
                rel -= b.word({m, k}, b.cosh(1));
                if (k + m < N + 1)
                    rel += b.word({m, kp}, b.num(I) * b.ratio(b.w(kp), b.w(k)) * b.sinh(1));
                else
                    rel += b.word({mp, k}, b.num(I) * b.ratio(b.w(mp), b.w(m)) * b.sinh(1));
            } else {
                rel -= b.word({kp, k}, b.one());
                JMonomial den = b.w(k) * b.w(kp);
                if (odd) {
                    JMonomial mid = b.w(n + 1);
                    ScalarExpr c = b.num(I * GaussianRational(2)) * b.sinh(Rational(1, 2)) * b.cosh(1).pow(n - k) *
                                   b.ratio(mid * mid, den);
                    rel -= b.word({n + 1, n + 1}, c);
                }
                ScalarExpr pre = b.num(I) * b.sinh(1) * b.cosh(1).pow(-(k + 1)) * b.ratio(JMonomial(N - 1), den);
                for (int q = k + 1; q <= n; ++q) {
                    int qp = N + 1 - q;
                    ScalarExpr cq = pre * b.cosh(1).pow(q);
                    rel -= b.word({q, q}, cq * ScalarExpr::monomial(b.w(q) * b.w(q)));
                    rel -= b.word({qp, qp}, cq * ScalarExpr::monomial(b.w(qp) * b.w(qp)));
                }
            }
            p.raw_lhs.push_back(Word{b.letter(k), b.letter(m)});
            p.raw.push_back(rel);
        }
    }

    p.star_closed.assign(N, ExprPoly());
    for (int k = 1; k <= n; ++k) {
        int kp = N + 1 - k;
        const Rational& rk = r[k - 1];
        p.star_closed[b.letter(k)] = b.word({k}, b.cosh(rk)) + b.word({kp}, b.num(I) * b.ratio(b.w(kp), b.w(k)) * b.sinh(rk));
        p.star_closed[b.letter(kp)] = b.word({kp}, b.cosh(rk)) - b.word({k}, b.num(I) * b.ratio(b.w(k), b.w(kp)) * b.sinh(rk));
    }
    if (odd) p.star_closed[b.letter(n + 1)] = b.word({n + 1}, b.one());

    ExprPoly inv;
    if (odd) {
        JMonomial mid = b.w(n + 1);
        inv += b.word({n + 1, n + 1}, ScalarExpr::monomial(mid * mid) * b.cosh(1).pow(n) * b.cosh(Rational(1, 2)).pow(-1));
    }
    for (int k = 1; k <= n; ++k) {
        int kp = N + 1 - k;
        inv += b.word({k, k}, ScalarExpr::monomial(b.w(k) * b.w(k)) * b.cosh(1).pow(k - 1));
        inv += b.word({kp, kp}, ScalarExpr::monomial(b.w(kp) * b.w(kp)) * b.cosh(1).pow(k - 1));
    }
    p.invariant_closed = scale(inv, b.cosh(r[0]));
    return p;
}

void build_system(Presentation& p) {
    Domain d;
    d.params = p.N - 1;
    d.order = p.order;
    if (!p.symbolic()) d.assignment = p.assignment;
    std::vector<SeriesPoly> rels;
    for (const auto& r : p.raw) rels.push_back(reduce(expand(r, p.order), d));
    p.system = solve_relations(rels, p.alphabet, d);
    p.star.clear();
    for (const auto& s : p.star_closed) p.star.push_back(reduce(expand(s, p.order), d));
    p.invariant = reduce(expand(p.invariant_closed, p.order), d);
}

Presentation generate_relations(const SigmaPermutation& sigma, const JMonomial& J, int order) {
    Presentation p = generate_closed(sigma, J);
    p.order = order;
    build_system(p);
    return p;
}

Presentation specialize_presentation(const Presentation& symbolic, const JAssignment& a) {
    if (a.size() != static_cast<std::size_t>(symbolic.N - 1)) throw std::invalid_argument("assignment length must be N-1");
    Presentation p = symbolic;
    p.assignment = a;
    for (std::size_t k = 0; k < p.raw.size(); ++k) {
        try {
            p.raw[k] = specialize(symbolic.raw[k], a);
        } catch (const UndefinedContraction& e) {
            throw e.with_context("relation for " + p.alphabet.str(p.raw_lhs[k]));
        }
    }
    for (std::size_t g = 0; g < p.star_closed.size(); ++g) {
        try {
            p.star_closed[g] = specialize(symbolic.star_closed[g], a);
        } catch (const UndefinedContraction& e) {
            throw e.with_context("star of " + p.alphabet.names[g]);
        }
    }
    try {
        p.invariant_closed = specialize(symbolic.invariant_closed, a);
    } catch (const UndefinedContraction& e) {
        throw e.with_context("invariant form");
    }
    build_system(p);
    return p;
}

Presentation presentation_from_equations(const SigmaPermutation& sigma, const JMonomial& J,
                                         const std::vector<std::string>& relations,
                                         const std::map<std::string, std::string>& star, const std::string& invariant,
                                         const JAssignment& a, int order) {
    const int N = sigma.size();
    Presentation p;
    p.N = N;
    p.sigma = sigma;
    p.J = J;
    p.assignment = JAssignment::all(N - 1, JValue::Generic);
    p.order = order;
    p.alphabet = vector_alphabet(sigma);
    ParseContext ctx{static_cast<std::size_t>(N - 1), J, &p.alphabet};
    for (const auto& text : relations) {
        ExprPoly r = parse_equation(text, ctx);
        p.raw_lhs.push_back(r.is_zero() ? Word{} : std::prev(r.terms().end())->first);
        p.raw.push_back(r);
    }
    for (int g = 0; g < N; ++g) {
        auto it = star.find(p.alphabet.names[g]);
        p.star_closed.push_back(it == star.end() ? letter(g, ScalarExpr::constant(N - 1, 1)) : parse_expression(it->second, ctx));
    }
    for (const auto& [name, text] : star)
        if (p.alphabet.find(name) < 0) throw ParseError("star image for unknown generator " + name);
    if (!invariant.empty()) p.invariant_closed = parse_expression(invariant, ctx);
    return specialize_presentation(p, a);
}

bool same_presentation(const Presentation& a, const Presentation& b) {
    if (a.N != b.N || !same_ideal(a.system, b.system)) return false;
    for (int g = 0; g < a.N; ++g)
        if (!(a.system.normalize(a.star[g]) == b.system.normalize(b.star[g]))) return false;
    return true;
}

SeriesPoly normalize(const SeriesPoly& p, const Presentation& pres) { return pres.system.normalize(p); }

SeriesPoly generator(const Presentation& pres, int g) {
    SeriesPoly x;
    x.add(Word{g - 1}, pres.domain().one());
    return x;
}

SeriesPoly apply_star(const SeriesPoly& p, const Presentation& pres) {
    const RewriteSystem& rs = pres.system;
    SeriesPoly out;
    for (const auto& [w, c] : p.terms()) {
        SeriesPoly acc;
        acc.add(Word{}, rs.domain().reduce(c.conj()));
        for (auto it = w.rbegin(); it != w.rend(); ++it) acc = rs.mul(acc, pres.star[*it]);
        out += acc;
    }
    return rs.normalize(out);
}

bool check_central(const Presentation& pres) {
    const RewriteSystem& rs = pres.system;
    for (int g = 1; g <= pres.N; ++g) {
        SeriesPoly x = generator(pres, g);
        if (!rs.normalize(rs.mul(pres.invariant, x) - rs.mul(x, pres.invariant)).is_zero()) return false;
    }
    return true;
}

bool check_star_involutive(const Presentation& pres) {
    for (int g = 1; g <= pres.N; ++g) {
        SeriesPoly x = generator(pres, g);
        if (!(apply_star(apply_star(x, pres), pres) == pres.system.normalize(x))) return false;
    }
    return true;
}

bool check_star_compatible(const Presentation& pres) {
    for (const auto& [lhs, rhs] : pres.system.rules()) {
        SeriesPoly l;
        l.add(Word{lhs.first, lhs.second}, pres.domain().one());
        if (!(apply_star(l, pres) - apply_star(rhs, pres)).is_zero()) return false;
    }
    return true;
}

bool check_commutative_limit(const Presentation& pres) {
    Domain d = pres.domain();
    d.order = 0;
    for (const auto& [lhs, rhs] : pres.system.rules()) {
        SeriesPoly diff;
        for (const auto& [w, c] : rhs.terms()) diff.add(w, c.truncated(0));
        diff.sub(Word{lhs.second, lhs.first}, d.one());
        if (!diff.is_zero()) return false;
    }
    return true;
}

std::vector<std::pair<Word, SeriesPoly>> commutators(const Presentation& pres) {
    std::vector<std::pair<Word, SeriesPoly>> out;
    for (int p = 1; p <= pres.N; ++p)
        for (int q = p + 1; q <= pres.N; ++q) {
            int a = pres.sigma(p) - 1, b = pres.sigma(q) - 1;
            SeriesPoly c;
            c.add(Word{a, b}, pres.domain().one());
            c.sub(Word{b, a}, pres.domain().one());
            SeriesPoly nf = pres.system.normalize(c);
            if (!nf.is_zero()) out.emplace_back(Word{a, b}, nf);
        }
    return out;
}

std::vector<std::string> render_rules(const Presentation& pres) {
    auto names = pres.names();
    std::vector<std::string> lines;
    for (const auto& [lhs, rhs] : pres.system.rules())
        lines.push_back(pres.alphabet.str(Word{lhs.first, lhs.second}) + " = " + render(rhs, pres.alphabet, &names));
    return lines;
}

namespace {

std::string commutator_name(const Word& w, const Alphabet& al) {
    return "[" + al.names[w[0]] + "," + al.names[w[1]] + "]";
}

}  // namespace

std::string render_text(const Presentation& pres) {
    auto names = pres.names();
    std::ostringstream os;
    os << "space O^" << pres.N << "(" << pres.assignment.str() << "; sigma=" << pres.sigma.str() << ")\n";
    os << "multiplier J = " << pres.J.str() << "\n";
    os << "order " << pres.order << "\n";
    os << "rules:\n";
    for (const auto& line : render_rules(pres)) os << "  " << line << "\n";
    os << "commutators:\n";
    auto comm = commutators(pres);
    if (comm.empty()) os << "  (all generators commute)\n";
    for (const auto& [w, c] : comm) os << "  " << commutator_name(w, pres.alphabet) << " = " << render(c, pres.alphabet, &names) << "\n";
    os << "star:\n";
    for (std::size_t g = 0; g < pres.star.size(); ++g)
        os << "  " << pres.alphabet.names[g] << "* = " << render(pres.star[g], pres.alphabet, &names) << "\n";
    os << "invariant:\n  " << render(pres.invariant, pres.alphabet, &names) << "\n";
    return os.str();
}

std::string render_latex(const Presentation& pres) {
    auto names = pres.names();
    std::ostringstream os;
    os << "\\begin{array}{l}\n";
    os << "J = " << latex_from_plain(pres.J.str()) << " \\\\\n";
    for (const auto& [w, c] : commutators(pres))
        os << latex_from_plain("[" + pres.alphabet.names[w[0]] + "," + pres.alphabet.names[w[1]] + "]") << " = "
           << latex_from_plain(render(c, pres.alphabet, &names)) << " \\\\\n";
    for (std::size_t g = 0; g < pres.star.size(); ++g)
        os << latex_from_plain(pres.alphabet.names[g]) << "^{*} = " << latex_from_plain(render(pres.star[g], pres.alphabet, &names))
           << " \\\\\n";
    os << "\\mathrm{inv} = " << latex_from_plain(render(pres.invariant, pres.alphabet, &names)) << "\n";
    os << "\\end{array}";
    std::string s = os.str();
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s.compare(k, 1, "x") == 0 && k + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[k + 1]))) {
            std::size_t e = k + 1;
            while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
            out += "\\xi_{" + s.substr(k + 1, e - k - 1) + "}";
            k = e - 1;
        } else {
            out += s[k];
        }
    }
    return out;
}

}  // namespace ckq
