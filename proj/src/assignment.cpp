#include "ckq/assignment.hpp"

#include <sstream>

namespace ckq {

JAssignment JAssignment::contraction(std::size_t params, std::size_t k, JValue rest) {
    if (k < 1 || k > params) throw std::out_of_range("contraction slot out of range");
    std::vector<JValue> v(params, rest);
    v[k - 1] = JValue::Nilpotent;
    return JAssignment(std::move(v));
}

JAssignment JAssignment::parse(const std::string& text) {
    std::vector<JValue> v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "1") v.push_back(JValue::Unit);
        else if (tok == "i") v.push_back(JValue::Imaginary);
        else if (tok == "iota") v.push_back(JValue::Nilpotent);
        else if (tok == "j") v.push_back(JValue::Generic);
        else throw std::invalid_argument("bad assignment token '" + tok + "' (expected 1, i, iota or j)");
    }
    if (v.empty()) throw std::invalid_argument("empty assignment");
    return JAssignment(std::move(v));
}

bool JAssignment::has_nilpotent() const {
    for (JValue v : values_)
        if (v == JValue::Nilpotent) return true;
    return false;
}

std::vector<std::string> JAssignment::names() const {
    std::vector<std::string> n;
    for (std::size_t k = 0; k < values_.size(); ++k)
        n.push_back((values_[k] == JValue::Nilpotent ? "iota" : "j") + std::to_string(k + 1));
    return n;
}

std::string token(JValue v) {
    switch (v) {
        case JValue::Unit: return "1";
        case JValue::Imaginary: return "i";
        case JValue::Nilpotent: return "iota";
        case JValue::Generic: return "j";
    }
    return "?";
}

std::string JAssignment::str() const {
    std::string s;
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (k) s += ",";
        s += token(values_[k]);
    }
    return s;
}

UndefinedContraction::UndefinedContraction(JMonomial exponents, std::string term, std::string context)
    : std::runtime_error("undefined contraction: nonzero term " + term + " divides by a nilpotent parameter" +
                         (context.empty() ? "" : " in " + context)),
      exponents_(std::move(exponents)),
      term_(std::move(term)),
      context_(std::move(context)) {}

UndefinedContraction UndefinedContraction::with_context(std::string context) const {
    return UndefinedContraction(exponents_, term_, std::move(context));
}

bool specialize_term(JMonomial& m, GaussianRational& c, const JAssignment& a) {
    if (m.size() != a.size()) throw std::invalid_argument("assignment length mismatch");
    bool negative_nilpotent = false;
    for (std::size_t k = 0; k < m.size(); ++k) {
        int e = m[k];
        switch (a[k]) {
            case JValue::Unit: m[k] = 0; break;
            case JValue::Imaginary:
                c *= GaussianRational::i_pow(e);
                m[k] = 0;
                break;
            case JValue::Nilpotent:
                if (e >= 2) return false;
                if (e < 0) negative_nilpotent = true;
                break;
            case JValue::Generic: break;
        }
    }
    if (negative_nilpotent) {
        auto names = a.names();
        throw UndefinedContraction(m, c.str() + "*" + m.str(&names));
    }
    return !c.is_zero();
}

JPolynomial specialize(const JPolynomial& p, const JAssignment& a) {
    JPolynomial r;
    for (const auto& [m0, c0] : p.terms()) {
        JMonomial m = m0;
        GaussianRational c = c0;
        if (specialize_term(m, c, a)) r.add_term(m, c);
    }
    return r;
}

}  // namespace ckq
