#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ckq/assignment.hpp"
#include "ckq/jpoly.hpp"

namespace ckq {

/// Power series in the deformation parameter v with Laurent-polynomial
/// coefficients in j, truncated after v^order.
class VSeries {
public:
    VSeries() = default;
    VSeries(std::size_t params, int order);

    static VSeries constant(std::size_t params, int order, const GaussianRational& c);
    static VSeries term(int order, const JMonomial& m, const GaussianRational& c, int vpow = 0);

    std::size_t params() const { return params_; }
    int order() const { return order_; }
    const JPolynomial& coeff(int p) const { return coeffs_[p]; }
    const std::vector<JPolynomial>& coeffs() const { return coeffs_; }
    void add_to(int p, const JPolynomial& c);
    void add_term(const JMonomial& m, const GaussianRational& c, int vpow);

    bool is_zero() const;
    /// Lowest power of v with a nonzero coefficient, order+1 when zero.
    int valuation() const;
    /// Constant term is c*m with c != 0 and m invertible (every monomial is
    /// invertible in the Laurent ring).
    bool has_unit_constant() const;

    VSeries& operator+=(const VSeries& o);
    VSeries& operator-=(const VSeries& o);
    VSeries& operator*=(const GaussianRational& c);
    VSeries& operator*=(const JMonomial& m);
    friend VSeries operator+(VSeries a, const VSeries& b) { return a += b; }
    friend VSeries operator-(VSeries a, const VSeries& b) { return a -= b; }
    VSeries operator-() const;

    VSeries conj() const;
    VSeries truncated(int order) const;

    friend bool operator==(const VSeries&, const VSeries&) = default;

    /// "1 - v^2", "i*j1^2*j2*v^3/6".
    std::string str(const std::vector<std::string>* names = nullptr) const;

private:
    std::size_t params_ = 0;
    int order_ = 0;
    std::vector<JPolynomial> coeffs_;
};

/// Truncated Cauchy product.  Throws std::invalid_argument on order mismatch.
VSeries series_mul(const VSeries& a, const VSeries& b);
/// Multiplicative inverse to the series order.  Requires an invertible
/// constant term (a nonzero Gaussian rational times a monomial).
VSeries series_invert(const VSeries& a);
VSeries series_pow(const VSeries& a, int e);

VSeries specialize(const VSeries& s, const JAssignment& a);

/// c times the given factors, "-3*i*a*b/2" style (denominator last).
std::string format_product(const GaussianRational& c, std::vector<std::string> factors);

/// One rendered term, e.g. ("i*j1^2*j2*v^3/6").
std::string term_str(const GaussianRational& c, const JMonomial& m, int vpow,
                     const std::vector<std::string>* names = nullptr);

/// Plain rendering to LaTeX: j1 -> j_{1}, iota2 -> \iota_{2}, cosh -> \cosh,
/// exponents braced, '*' dropped.
std::string latex_from_plain(const std::string& plain);

/// Coefficient ring in which a presentation lives: series order and, once
/// contracted, the substituted parameter values.  Products are re-reduced
/// under the assignment so that iota_k^2 = 0 holds throughout.
struct Domain {
    std::size_t params = 0;
    int order = 8;
    std::optional<JAssignment> assignment;

    VSeries zero() const { return VSeries(params, order); }
    VSeries one() const { return VSeries::constant(params, order, 1); }
    VSeries reduce(const VSeries& s) const { return assignment ? specialize(s, *assignment) : s; }
    VSeries mul(const VSeries& a, const VSeries& b) const { return reduce(series_mul(a, b)); }
    /// Invertible in this domain: unit constant term whose monomial survives
    /// specialization as an invertible element (no nilpotent factor).
    bool invertible(const VSeries& s) const;
    VSeries invert(const VSeries& s) const;
    std::vector<std::string> names() const;

    friend bool operator==(const Domain&, const Domain&) = default;
};

}  // namespace ckq
