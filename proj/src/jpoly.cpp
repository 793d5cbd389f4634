#include "ckq/jpoly.hpp"

#include <stdexcept>

namespace ckq {

JMonomial JMonomial::single(std::size_t params, std::size_t k, int e) {
    if (k < 1 || k > params) throw std::out_of_range("j index out of range");
    JMonomial m(params);
    m.exps_[k - 1] = e;
    return m;
}

bool JMonomial::is_one() const {
    for (int e : exps_)
        if (e != 0) return false;
    return true;
}

bool JMonomial::is_nonnegative() const {
    for (int e : exps_)
        if (e < 0) return false;
    return true;
}

int JMonomial::degree() const {
    int d = 0;
    for (int e : exps_) d += e;
    return d;
}

JMonomial JMonomial::inverse() const { return pow(-1); }

JMonomial JMonomial::pow(int e) const {
    JMonomial r = *this;
    for (int& x : r.exps_) x *= e;
    return r;
}

JMonomial& JMonomial::operator*=(const JMonomial& o) {
    if (exps_.size() != o.exps_.size()) throw std::invalid_argument("JMonomial length mismatch");
    for (std::size_t k = 0; k < exps_.size(); ++k) exps_[k] += o.exps_[k];
    return *this;
}

JMonomial& JMonomial::operator/=(const JMonomial& o) {
    if (exps_.size() != o.exps_.size()) throw std::invalid_argument("JMonomial length mismatch");
    for (std::size_t k = 0; k < exps_.size(); ++k) exps_[k] -= o.exps_[k];
    return *this;
}

std::string JMonomial::str(const std::vector<std::string>* names) const {
    std::string s;
    for (std::size_t k = 0; k < exps_.size(); ++k) {
        if (exps_[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += names ? (*names)[k] : "j" + std::to_string(k + 1);
        if (exps_[k] != 1) s += "^" + std::to_string(exps_[k]);
    }
    return s.empty() ? "1" : s;
}

void JPolynomial::add_term(const JMonomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

JPolynomial& JPolynomial::operator+=(const JPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

JPolynomial& JPolynomial::operator-=(const JPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

JPolynomial& JPolynomial::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

JPolynomial& JPolynomial::operator*=(const JMonomial& mono) {
    Terms out;
    for (auto& [m, c] : terms_) out.emplace(m * mono, std::move(c));
    terms_ = std::move(out);
    return *this;
}

JPolynomial operator*(const JPolynomial& a, const JPolynomial& b) {
    JPolynomial r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

JPolynomial JPolynomial::operator-() const {
    JPolynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

JPolynomial JPolynomial::conj() const {
    JPolynomial r = *this;
    for (auto& [m, c] : r.terms_) c = c.conj();
    return r;
}

std::string JPolynomial::str(const std::vector<std::string>* names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        std::string t = c.str();
        if (!s.empty() && t[0] != '-') s += "+";
        if (!m.is_one()) {
            if (c.is_one()) t.clear();
            else if (c == GaussianRational(-1)) t = "-";
            else t += "*";
            t += m.str(names);
        }
        s += t;
    }
    return s;
}

}  // namespace ckq
