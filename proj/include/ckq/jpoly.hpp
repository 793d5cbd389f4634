#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "ckq/gaussian.hpp"

namespace ckq {

/// Laurent monomial j_1^{e_1} ... j_{N-1}^{e_{N-1}}.
class JMonomial {
public:
    JMonomial() = default;
    explicit JMonomial(std::size_t params) : exps_(params, 0) {}
    explicit JMonomial(std::vector<int> exps) : exps_(std::move(exps)) {}
    JMonomial(std::initializer_list<int> exps) : exps_(exps) {}

    /// j_k with 1-based k.
    static JMonomial single(std::size_t params, std::size_t k, int e = 1);

    std::size_t size() const { return exps_.size(); }
    int operator[](std::size_t slot) const { return exps_[slot]; }
    int& operator[](std::size_t slot) { return exps_[slot]; }
    const std::vector<int>& exponents() const { return exps_; }

    bool is_one() const;
    bool is_nonnegative() const;
    int degree() const;

    JMonomial inverse() const;
    JMonomial pow(int e) const;
    JMonomial& operator*=(const JMonomial& o);
    JMonomial& operator/=(const JMonomial& o);
    friend JMonomial operator*(JMonomial a, const JMonomial& b) { return a *= b; }
    friend JMonomial operator/(JMonomial a, const JMonomial& b) { return a /= b; }

    friend bool operator==(const JMonomial&, const JMonomial&) = default;
    friend auto operator<=>(const JMonomial&, const JMonomial&) = default;

    /// "j1^2*j2", "1" for the neutral element; nilpotent slots may be
    /// rendered as "iota" via the optional name table.
    std::string str(const std::vector<std::string>* names = nullptr) const;

private:
    std::vector<int> exps_;
};

/// Finite sum of Gaussian-rational multiples of Laurent monomials.
class JPolynomial {
public:
    using Terms = std::map<JMonomial, GaussianRational>;

    JPolynomial() = default;
    JPolynomial(const JMonomial& m, GaussianRational c = 1) { add_term(m, std::move(c)); }
    static JPolynomial constant(std::size_t params, GaussianRational c) {
        return JPolynomial(JMonomial(params), std::move(c));
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const JMonomial& m, const GaussianRational& c);

    JPolynomial& operator+=(const JPolynomial& o);
    JPolynomial& operator-=(const JPolynomial& o);
    JPolynomial& operator*=(const GaussianRational& c);
    JPolynomial& operator*=(const JMonomial& m);
    friend JPolynomial operator+(JPolynomial a, const JPolynomial& b) { return a += b; }
    friend JPolynomial operator-(JPolynomial a, const JPolynomial& b) { return a -= b; }
    friend JPolynomial operator*(const JPolynomial& a, const JPolynomial& b);
    JPolynomial operator-() const;

    JPolynomial conj() const;

    friend bool operator==(const JPolynomial&, const JPolynomial&) = default;

    std::string str(const std::vector<std::string>* names = nullptr) const;

private:
    Terms terms_;
};

}  // namespace ckq
