#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "ckq/assignment.hpp"
#include "ckq/series.hpp"

namespace ckq {

/// cosh, sinh or tanh of c*J*v.  Half-integer and rho-scaled arguments are
/// carried by the exact factor c.
struct Atom {
    enum class Kind { Cosh, Sinh, Tanh };
    Kind kind;
    GaussianRational c;
    JMonomial J;

    friend bool operator==(const Atom&, const Atom&) = default;
    friend auto operator<=>(const Atom& a, const Atom& b) {
        return std::tie(a.kind, a.J, a.c) <=> std::tie(b.kind, b.J, b.c);
    }

    std::string str(const std::vector<std::string>* names = nullptr) const;
};

/// Closed-form scalar in sum-of-products form:
///   sum  coeff * j-monomial * v^p * prod atom^power.
class ScalarExpr {
public:
    struct Key {
        JMonomial mono;
        int vpow = 0;
        std::vector<std::pair<Atom, int>> atoms;  // sorted, nonzero powers

        friend bool operator==(const Key&, const Key&) = default;
        friend auto operator<=>(const Key&, const Key&) = default;
    };
    using Terms = std::map<Key, GaussianRational>;

    ScalarExpr() = default;
    explicit ScalarExpr(std::size_t params) : params_(params) {}

    static ScalarExpr constant(std::size_t params, const GaussianRational& c);
    static ScalarExpr monomial(const JMonomial& m, const GaussianRational& c = 1);
    static ScalarExpr v(std::size_t params, int power = 1);
    static ScalarExpr atom(Atom::Kind kind, const GaussianRational& c, const JMonomial& J);
    static ScalarExpr cosh(const GaussianRational& c, const JMonomial& J) { return atom(Atom::Kind::Cosh, c, J); }
    static ScalarExpr sinh(const GaussianRational& c, const JMonomial& J) { return atom(Atom::Kind::Sinh, c, J); }
    static ScalarExpr tanh(const GaussianRational& c, const JMonomial& J) { return atom(Atom::Kind::Tanh, c, J); }

    std::size_t params() const { return params_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_single_term() const { return terms_.size() == 1; }
    void add(const Key& k, const GaussianRational& c);

    ScalarExpr& operator+=(const ScalarExpr& o);
    ScalarExpr& operator-=(const ScalarExpr& o);
    ScalarExpr& operator*=(const GaussianRational& c);
    friend ScalarExpr operator+(ScalarExpr a, const ScalarExpr& b) { return a += b; }
    friend ScalarExpr operator-(ScalarExpr a, const ScalarExpr& b) { return a -= b; }
    friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
    ScalarExpr operator-() const;

    /// Integer power.  Negative powers require a single term whose atoms
    /// are all cosh (unit constant term).
    ScalarExpr pow(int e) const;

    ScalarExpr conj() const;

    friend bool operator==(const ScalarExpr&, const ScalarExpr&) = default;

    std::string str(const std::vector<std::string>* names = nullptr) const;
    std::string latex(const std::vector<std::string>* names = nullptr) const { return latex_from_plain(str(names)); }

private:
    std::size_t params_ = 0;
    Terms terms_;
};

/// Taylor expansion to v^order; a ring homomorphism into VSeries.
VSeries expand(const ScalarExpr& e, int order);

/// Closed-form contraction: cosh(mu v) -> 1, sinh(mu v) -> mu v,
/// tanh(mu v) -> mu v for arguments containing a nilpotent parameter,
/// with monomial cancellation done before nilpotent substitution.
ScalarExpr specialize(const ScalarExpr& e, const JAssignment& a);

}  // namespace ckq
