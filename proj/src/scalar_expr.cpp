#include "ckq/scalar_expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace ckq {

std::string Atom::str(const std::vector<std::string>* names) const {
    const char* f = kind == Kind::Cosh ? "cosh" : kind == Kind::Sinh ? "sinh" : "tanh";
    return std::string(f) + "(" + term_str(c, J, 1, names) + ")";
}

ScalarExpr ScalarExpr::constant(std::size_t params, const GaussianRational& c) {
    ScalarExpr e(params);
    e.add(Key{JMonomial(params), 0, {}}, c);
    return e;
}

ScalarExpr ScalarExpr::monomial(const JMonomial& m, const GaussianRational& c) {
    ScalarExpr e(m.size());
    e.add(Key{m, 0, {}}, c);
    return e;
}

ScalarExpr ScalarExpr::v(std::size_t params, int power) {
    if (power < 0) throw std::invalid_argument("negative power of v");
    ScalarExpr e(params);
    e.add(Key{JMonomial(params), power, {}}, 1);
    return e;
}

ScalarExpr ScalarExpr::atom(Atom::Kind kind, const GaussianRational& c, const JMonomial& J) {
    std::size_t params = J.size();
    if (c.is_zero()) return constant(params, kind == Atom::Kind::Cosh ? 1 : 0);
    ScalarExpr e(params);
    e.add(Key{JMonomial(params), 0, {{Atom{kind, c, J}, 1}}}, 1);
    return e;
}

void ScalarExpr::add(const Key& k, const GaussianRational& c) {
    if (c.is_zero()) return;
    if (params_ == 0) params_ = k.mono.size();
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ScalarExpr& ScalarExpr::operator+=(const ScalarExpr& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    if (params_ == 0) params_ = o.params_;
    return *this;
}

ScalarExpr& ScalarExpr::operator-=(const ScalarExpr& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    if (params_ == 0) params_ = o.params_;
    return *this;
}

ScalarExpr& ScalarExpr::operator*=(const GaussianRational& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [k, x] : terms_) x *= c;
    return *this;
}

ScalarExpr ScalarExpr::operator-() const {
    ScalarExpr r = *this;
    r *= GaussianRational(-1);
    return r;
}

static std::vector<std::pair<Atom, int>> merge_atoms(const std::vector<std::pair<Atom, int>>& a,
                                                     const std::vector<std::pair<Atom, int>>& b) {
    std::map<Atom, int> m;
    for (const auto& [x, p] : a) m[x] += p;
    for (const auto& [x, p] : b) m[x] += p;
    std::vector<std::pair<Atom, int>> r;
    for (const auto& [x, p] : m)
        if (p != 0) r.emplace_back(x, p);
    return r;
}

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
    ScalarExpr r(std::max(a.params_, b.params_));
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add(ScalarExpr::Key{ka.mono * kb.mono, ka.vpow + kb.vpow, merge_atoms(ka.atoms, kb.atoms)}, ca * cb);
    return r;
}

ScalarExpr ScalarExpr::pow(int e) const {
    if (e >= 0) {
        ScalarExpr r = constant(params_, 1);
        for (int k = 0; k < e; ++k) r = r * *this;
        return r;
    }
    if (!is_single_term()) throw std::invalid_argument("negative power of a sum");
    const auto& [k, c] = *terms_.begin();
    if (k.vpow != 0) throw std::invalid_argument("negative power of v");
    Key inv{k.mono.inverse(), 0, {}};
    for (const auto& [atom, p] : k.atoms) {
        if (atom.kind != Atom::Kind::Cosh)
            throw std::invalid_argument("negative power of " + atom.str() + " (only cosh atoms are invertible)");
        inv.atoms.emplace_back(atom, -p);
    }
    ScalarExpr base(params_);
    base.add(inv, c.inverse());
    return base.pow(-e);
}

ScalarExpr ScalarExpr::conj() const {
    ScalarExpr r(params_);
    for (const auto& [k, c] : terms_) {
        Key kc = k;
        for (auto& [atom, p] : kc.atoms) atom.c = atom.c.conj();
        std::sort(kc.atoms.begin(), kc.atoms.end());
        r.add(kc, c.conj());
    }
    return r;
}

std::string ScalarExpr::str(const std::vector<std::string>* names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
        std::vector<std::string> factors;
        if (!k.mono.is_one()) factors.push_back(k.mono.str(names));
        if (k.vpow == 1) factors.push_back("v");
        else if (k.vpow > 1) factors.push_back("v^" + std::to_string(k.vpow));
        for (const auto& [atom, p] : k.atoms)
            factors.push_back(atom.str(names) + (p == 1 ? "" : "^(" + std::to_string(p) + ")"));
        std::string t = format_product(c, factors);
        if (s.empty()) s = t;
        else if (t[0] == '-') s += " - " + t.substr(1);
        else s += " + " + t;
    }
    return s;
}

static VSeries atom_series(const Atom& a, std::size_t params, int order) {
    VSeries cosh_s(params, order), sinh_s(params, order);
    GaussianRational factorial = 1;
    GaussianRational cpow = 1;
    JMonomial jpow(params);
    for (int p = 0; p <= order; ++p) {
        if (p > 0) {
            factorial *= GaussianRational(p);
            cpow *= a.c;
            jpow *= a.J;
        }
        (p % 2 == 0 ? cosh_s : sinh_s).add_term(jpow, cpow / factorial, p);
    }
    switch (a.kind) {
        case Atom::Kind::Cosh: return cosh_s;
        case Atom::Kind::Sinh: return sinh_s;
        case Atom::Kind::Tanh: return series_mul(sinh_s, series_invert(cosh_s));
    }
    return cosh_s;
}

VSeries expand(const ScalarExpr& e, int order) {
    std::size_t params = e.params();
    VSeries total(params, order);
    std::map<Atom, VSeries> cache;
    for (const auto& [k, c] : e.terms()) {
        if (k.vpow > order) continue;
        VSeries t = VSeries::term(order, k.mono, c, k.vpow);
        for (const auto& [atom, p] : k.atoms) {
            auto it = cache.find(atom);
            if (it == cache.end()) it = cache.emplace(atom, atom_series(atom, params, order)).first;
            try {
                t = series_mul(t, series_pow(it->second, p));
            } catch (const std::domain_error&) {
                throw std::invalid_argument("ill-formed negative power of " + atom.str());
            }
        }
        total += t;
    }
    return total;
}

ScalarExpr specialize(const ScalarExpr& e, const JAssignment& a) {
    ScalarExpr r(e.params());
    for (const auto& [k, c0] : e.terms()) {
        GaussianRational c = c0;
        JMonomial m = k.mono;
        int vpow = k.vpow;
        std::vector<std::pair<Atom, int>> atoms;
        bool vanished = false;
        for (const auto& [atom, p] : k.atoms) {
            bool nilpotent_arg = false;
            for (std::size_t s = 0; s < a.size(); ++s) {
                if (atom.J[s] < 0) throw std::invalid_argument("atom argument with negative exponent");
                if (a[s] == JValue::Nilpotent && atom.J[s] > 0) nilpotent_arg = true;
            }
            if (nilpotent_arg) {
                if (atom.kind == Atom::Kind::Cosh) continue;
                if (p < 0) throw std::invalid_argument("negative power of " + atom.str() + " at a nilpotent argument");
                for (int q = 0; q < p; ++q) c *= atom.c;
                m *= atom.J.pow(p);
                vpow += p;
                continue;
            }
            JMonomial J = atom.J;
            GaussianRational ac = atom.c;
            if (!specialize_term(J, ac, a)) {
                vanished = atom.kind != Atom::Kind::Cosh;
                if (vanished) break;
                continue;
            }
            atoms.emplace_back(Atom{atom.kind, ac, J}, p);
        }
        if (vanished) continue;
        if (!specialize_term(m, c, a)) continue;
        std::sort(atoms.begin(), atoms.end());
        ScalarExpr term(e.params());
        term.add(ScalarExpr::Key{m, vpow, {}}, c);
        for (const auto& [atom, p] : atoms) term = term * ScalarExpr::atom(atom.kind, atom.c, atom.J).pow(p);
        r += term;
    }
    return r;
}

}  // namespace ckq
