#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ckq/jpoly.hpp"

namespace ckq {

/// Value substituted for one contraction parameter j_k.  Generic keeps the
/// parameter symbolic.
enum class JValue { Unit, Imaginary, Nilpotent, Generic };

class JAssignment {
public:
    JAssignment() = default;
    explicit JAssignment(std::vector<JValue> values) : values_(std::move(values)) {}

    static JAssignment all(std::size_t params, JValue v) { return JAssignment(std::vector<JValue>(params, v)); }
    /// j_k = iota_k (1-based k), every other slot set to `rest`.
    static JAssignment contraction(std::size_t params, std::size_t k, JValue rest = JValue::Unit);

    /// Tokens "1", "i", "iota", "j" (symbolic), comma separated.
    static JAssignment parse(const std::string& text);

    std::size_t size() const { return values_.size(); }
    JValue operator[](std::size_t slot) const { return values_[slot]; }
    const std::vector<JValue>& values() const { return values_; }

    bool has_nilpotent() const;
    bool is_nilpotent(std::size_t slot) const { return values_[slot] == JValue::Nilpotent; }

    /// Display names per slot: "iota1" for nilpotent slots, "j1" otherwise.
    std::vector<std::string> names() const;
    std::string str() const;

    friend bool operator==(const JAssignment&, const JAssignment&) = default;
    friend auto operator<=>(const JAssignment&, const JAssignment&) = default;

private:
    std::vector<JValue> values_;
};

std::string token(JValue v);

/// a/iota_k with a != 0.  Carries the offending monomial for diagnosis.
class UndefinedContraction : public std::runtime_error {
public:
    UndefinedContraction(JMonomial exponents, std::string term, std::string context = {});

    const JMonomial& exponents() const { return exponents_; }
    const std::string& term() const { return term_; }
    const std::string& context() const { return context_; }
    UndefinedContraction with_context(std::string context) const;

private:
    JMonomial exponents_;
    std::string term_;
    std::string context_;
};

/// Substitutes the assignment into one coefficient*monomial.  Returns false
/// when the term vanishes; throws UndefinedContraction when it is undefined.
bool specialize_term(JMonomial& m, GaussianRational& c, const JAssignment& a);

JPolynomial specialize(const JPolynomial& p, const JAssignment& a);

}  // namespace ckq
