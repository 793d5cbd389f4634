#pragma once

#include <map>
#include <string>
#include <vector>

#include "ckq/scalar_expr.hpp"
#include "ckq/series.hpp"

namespace ckq {

/// Letters are 0-based indices into an Alphabet.
using Word = std::vector<int>;

/// Generator names plus the ordering used for normal forms: a word is
/// normal when the ranks of its letters never increase.
struct Alphabet {
    std::vector<std::string> names;
    std::vector<int> rank;

    std::size_t size() const { return names.size(); }
    bool ascending(int a, int b) const { return rank[a] < rank[b]; }
    bool is_normal(const Word& w) const;
    int find(const std::string& name) const;  // -1 when absent
    std::string str(const Word& w) const;     // "x2*x1", "1" for the empty word
    friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

/// Finite sum of coefficient * word.  C is ScalarExpr (closed form) or
/// VSeries (expanded).
template <class C>
class NCPoly {
public:
    using Terms = std::map<Word, C>;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Word& w, const C& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void sub(const Word& w, const C& c) { add(w, -c); }
    NCPoly& operator+=(const NCPoly& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        for (const auto& [w, c] : o.terms_) sub(w, c);
        return *this;
    }
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    C coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? C() : it->second;
    }
    void erase(const Word& w) { terms_.erase(w); }
    friend bool operator==(const NCPoly&, const NCPoly&) = default;

private:
    Terms terms_;
};

using ExprPoly = NCPoly<ScalarExpr>;
using SeriesPoly = NCPoly<VSeries>;

Word concat(const Word& a, const Word& b);

/// Product with coefficients multiplied via mul(c1, c2).
template <class C, class Mul>
NCPoly<C> multiply(const NCPoly<C>& a, const NCPoly<C>& b, Mul mul) {
    NCPoly<C> r;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) r.add(concat(wa, wb), mul(ca, cb));
    return r;
}

ExprPoly operator*(const ExprPoly& a, const ExprPoly& b);
ExprPoly scale(const ExprPoly& p, const ScalarExpr& c);
ExprPoly letter(int g, const ScalarExpr& c);

SeriesPoly expand(const ExprPoly& p, int order);
ExprPoly specialize(const ExprPoly& p, const JAssignment& a);
SeriesPoly reduce(const SeriesPoly& p, const Domain& d);

/// Renders "c1*w1 + c2*w2"; coefficients with several terms are parenthesized.
std::string render(const ExprPoly& p, const Alphabet& al, const std::vector<std::string>* names = nullptr);
std::string render(const SeriesPoly& p, const Alphabet& al, const std::vector<std::string>* names = nullptr);

}  // namespace ckq
