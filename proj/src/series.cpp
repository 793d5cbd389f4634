#include "ckq/series.hpp"

#include <regex>
#include <stdexcept>

namespace ckq {

VSeries::VSeries(std::size_t params, int order) : params_(params), order_(order), coeffs_(order + 1) {
    if (order < 0) throw std::invalid_argument("negative series order");
}

VSeries VSeries::constant(std::size_t params, int order, const GaussianRational& c) {
    VSeries s(params, order);
    s.add_term(JMonomial(params), c, 0);
    return s;
}

VSeries VSeries::term(int order, const JMonomial& m, const GaussianRational& c, int vpow) {
    VSeries s(m.size(), order);
    s.add_term(m, c, vpow);
    return s;
}

void VSeries::add_to(int p, const JPolynomial& c) {
    if (p <= order_) coeffs_[p] += c;
}

void VSeries::add_term(const JMonomial& m, const GaussianRational& c, int vpow) {
    if (vpow < 0) throw std::invalid_argument("negative power of v");
    if (vpow <= order_) coeffs_[vpow].add_term(m, c);
}

bool VSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

int VSeries::valuation() const {
    for (int p = 0; p < static_cast<int>(coeffs_.size()); ++p)
        if (!coeffs_[p].is_zero()) return p;
    return order_ + 1;
}

bool VSeries::has_unit_constant() const { return !coeffs_.empty() && coeffs_[0].size() == 1; }

static void check_compatible(const VSeries& a, const VSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
    if (a.params() != b.params()) throw std::invalid_argument("series parameter count mismatch");
}

VSeries& VSeries::operator+=(const VSeries& o) {
    check_compatible(*this, o);
    for (int p = 0; p <= order_; ++p) coeffs_[p] += o.coeffs_[p];
    return *this;
}

VSeries& VSeries::operator-=(const VSeries& o) {
    check_compatible(*this, o);
    for (int p = 0; p <= order_; ++p) coeffs_[p] -= o.coeffs_[p];
    return *this;
}

VSeries& VSeries::operator*=(const GaussianRational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

VSeries& VSeries::operator*=(const JMonomial& m) {
    for (auto& x : coeffs_) x *= m;
    return *this;
}

VSeries VSeries::operator-() const {
    VSeries r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

VSeries VSeries::conj() const {
    VSeries r = *this;
    for (auto& x : r.coeffs_) x = x.conj();
    return r;
}

VSeries VSeries::truncated(int order) const {
    VSeries r(params_, order);
    for (int p = 0; p <= std::min(order, order_); ++p) r.coeffs_[p] = coeffs_[p];
    return r;
}

VSeries series_mul(const VSeries& a, const VSeries& b) {
    check_compatible(a, b);
    VSeries r(a.params(), a.order());
    for (int p = 0; p <= a.order(); ++p) {
        if (a.coeff(p).is_zero()) continue;
        for (int q = 0; p + q <= a.order(); ++q) {
            if (b.coeff(q).is_zero()) continue;
            r.add_to(p + q, a.coeff(p) * b.coeff(q));
        }
    }
    return r;
}

VSeries series_invert(const VSeries& a) {
    if (!a.has_unit_constant())
        throw std::domain_error("series is not invertible: constant term " + a.coeff(0).str());
    const auto& [m0, c0] = *a.coeff(0).terms().begin();
    JPolynomial inv0(m0.inverse(), c0.inverse());
    VSeries r(a.params(), a.order());
    r.add_to(0, inv0);
    // b_p = -inv0 * sum_{q=1..p} a_q b_{p-q}
    for (int p = 1; p <= a.order(); ++p) {
        JPolynomial acc;
        for (int q = 1; q <= p; ++q) {
            if (a.coeff(q).is_zero() || r.coeff(p - q).is_zero()) continue;
            acc += a.coeff(q) * r.coeff(p - q);
        }
        r.add_to(p, -(inv0 * acc));
    }
    return r;
}

VSeries series_pow(const VSeries& a, int e) {
    VSeries base = e < 0 ? series_invert(a) : a;
    if (e < 0) e = -e;
    VSeries r = VSeries::constant(a.params(), a.order(), 1);
    while (e > 0) {
        if (e & 1) r = series_mul(r, base);
        e >>= 1;
        if (e) base = series_mul(base, base);
    }
    return r;
}

VSeries specialize(const VSeries& s, const JAssignment& a) {
    VSeries r(s.params(), s.order());
    for (int p = 0; p <= s.order(); ++p) r.add_to(p, specialize(s.coeff(p), a));
    return r;
}

std::string format_product(const GaussianRational& c, std::vector<std::string> factors) {
    std::vector<std::string> head;
    bool negative = false;
    std::string den;
    if (c.is_real() || sgn(c.re()) == 0) {
        const Rational& x = c.is_real() ? c.re() : c.im();
        negative = sgn(x) < 0;
        mpz_class num = abs(x.get_num());
        if (num != 1) head.push_back(num.get_str());
        if (!c.is_real()) head.push_back("i");
        if (x.get_den() != 1) den = x.get_den().get_str();
    } else {
        head.push_back(c.str());
    }
    head.insert(head.end(), factors.begin(), factors.end());
    std::string s = negative ? "-" : "";
    if (head.empty()) s += "1";
    for (std::size_t k = 0; k < head.size(); ++k) s += (k ? "*" : "") + head[k];
    if (!den.empty()) s += "/" + den;
    return s;
}

std::string term_str(const GaussianRational& c, const JMonomial& m, int vpow, const std::vector<std::string>* names) {
    std::vector<std::string> factors;
    if (!m.is_one()) factors.push_back(m.str(names));
    if (vpow == 1) factors.push_back("v");
    else if (vpow > 1) factors.push_back("v^" + std::to_string(vpow));
    return format_product(c, std::move(factors));
}

std::string VSeries::str(const std::vector<std::string>* names) const {
    std::string s;
    for (int p = 0; p <= order_; ++p) {
        for (const auto& [m, c] : coeffs_[p].terms()) {
            std::string t = term_str(c, m, p, names);
            if (s.empty()) s = t;
            else if (t[0] == '-') s += " - " + t.substr(1);
            else s += " + " + t;
        }
    }
    return s.empty() ? "0" : s;
}

bool Domain::invertible(const VSeries& s) const {
    if (!s.has_unit_constant()) return false;
    if (!assignment) return true;
    const JMonomial& m = s.coeff(0).terms().begin()->first;
    for (std::size_t k = 0; k < m.size(); ++k)
        if ((*assignment)[k] == JValue::Nilpotent && m[k] != 0) return false;
    return true;
}

VSeries Domain::invert(const VSeries& s) const {
    if (!invertible(s)) throw std::domain_error("coefficient not invertible in this domain: " + s.str());
    return reduce(series_invert(s));
}

std::vector<std::string> Domain::names() const {
    if (assignment) return assignment->names();
    std::vector<std::string> n;
    for (std::size_t k = 0; k < params; ++k) n.push_back("j" + std::to_string(k + 1));
    return n;
}

std::string latex_from_plain(const std::string& plain) {
    static const std::regex indexed(R"((iota|xi|rh|j|r)(\d+))");
    static const std::regex power(R"(\^\(?(-?\d+)\)?)");
    static const std::regex trig(R"((cosh|sinh|tanh))");
    std::string s = std::regex_replace(plain, indexed, "@$1_{$2}");
    s = std::regex_replace(s, power, "^{$1}");
    s = std::regex_replace(s, trig, "\\$1");
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] == '*') {
            out += ' ';
        } else if (s[k] == '@') {
            if (s.compare(k + 1, 4, "iota") == 0) {
                out += "\\iota";
                k += 4;
            } else if (s.compare(k + 1, 2, "xi") == 0) {
                out += "\\xi";
                k += 2;
            } else if (s.compare(k + 1, 2, "rh") == 0) {
                out += "\\hat r";
                k += 2;
            }
        } else {
            out += s[k];
        }
    }
    return out;
}

}  // namespace ckq
