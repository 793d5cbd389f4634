#include "ckq/gaussian.hpp"

#include <stdexcept>

namespace ckq {

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational GaussianRational::inverse() const {
    Rational norm = re_ * re_ + im_ * im_;
    if (sgn(norm) == 0) throw std::domain_error("division by zero Gaussian rational");
    return {re_ / norm, -im_ / norm};
}

GaussianRational GaussianRational::i_pow(int e) {
    switch (((e % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

std::string GaussianRational::str() const {
    if (is_real()) return re_.get_str();
    if (sgn(re_) == 0) {
        if (im_ == 1) return "i";
        if (im_ == -1) return "-i";
        Rational a = abs(im_);
        std::string s = sgn(im_) < 0 ? "-" : "";
        if (a.get_num() != 1) s += a.get_num().get_str() + "*";
        s += "i";
        if (a.get_den() != 1) s += "/" + a.get_den().get_str();
        return s;
    }
    std::string s = "(" + re_.get_str();
    s += sgn(im_) < 0 ? "-" : "+";
    Rational a = abs(im_);
    if (a != 1) s += a.get_str() + "*";
    s += "i)";
    return s;
}

Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

}  // namespace ckq
