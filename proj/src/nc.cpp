#include "ckq/nc.hpp"

namespace ckq {

bool Alphabet::is_normal(const Word& w) const {
    for (std::size_t k = 1; k < w.size(); ++k)
        if (ascending(w[k - 1], w[k])) return false;
    return true;
}

int Alphabet::find(const std::string& name) const {
    for (std::size_t k = 0; k < names.size(); ++k)
        if (names[k] == name) return static_cast<int>(k);
    return -1;
}

std::string Alphabet::str(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < w.size();) {
        std::size_t run = 1;
        while (k + run < w.size() && w[k + run] == w[k]) ++run;
        if (!s.empty()) s += "*";
        s += names[w[k]];
        if (run > 1) s += "^" + std::to_string(run);
        k += run;
    }
    return s;
}

Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

ExprPoly operator*(const ExprPoly& a, const ExprPoly& b) {
    return multiply(a, b, [](const ScalarExpr& x, const ScalarExpr& y) { return x * y; });
}

ExprPoly scale(const ExprPoly& p, const ScalarExpr& c) {
    ExprPoly r;
    for (const auto& [w, x] : p.terms()) r.add(w, x * c);
    return r;
}

ExprPoly letter(int g, const ScalarExpr& c) {
    ExprPoly r;
    r.add(Word{g}, c);
    return r;
}

SeriesPoly expand(const ExprPoly& p, int order) {
    SeriesPoly r;
    for (const auto& [w, c] : p.terms()) r.add(w, expand(c, order));
    return r;
}

ExprPoly specialize(const ExprPoly& p, const JAssignment& a) {
    ExprPoly r;
    for (const auto& [w, c] : p.terms()) r.add(w, specialize(c, a));
    return r;
}

SeriesPoly reduce(const SeriesPoly& p, const Domain& d) {
    SeriesPoly r;
    for (const auto& [w, c] : p.terms()) r.add(w, d.reduce(c));
    return r;
}

namespace {

template <class C>
std::string render_poly(const NCPoly<C>& p, const Alphabet& al, const std::vector<std::string>* names) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [w, c] : p.terms()) {
        std::string cs = c.str(names);
        bool compound = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
        std::string t;
        if (w.empty()) {
            t = cs;
            if (compound) t = "(" + t + ")";
        } else if (cs == "1") {
            t = al.str(w);
        } else if (cs == "-1") {
            t = "-" + al.str(w);
        } else if (compound) {
            t = "(" + cs + ")*" + al.str(w);
        } else {
            t = cs + "*" + al.str(w);
        }
        if (s.empty()) s = t;
        else if (t[0] == '-') s += " - " + t.substr(1);
        else s += " + " + t;
    }
    return s;
}

}  // namespace

std::string render(const ExprPoly& p, const Alphabet& al, const std::vector<std::string>* names) {
    return render_poly(p, al, names);
}

std::string render(const SeriesPoly& p, const Alphabet& al, const std::vector<std::string>* names) {
    return render_poly(p, al, names);
}

}  // namespace ckq
