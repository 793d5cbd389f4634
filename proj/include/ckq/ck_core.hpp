#pragma once

#include <string>
#include <vector>

#include "ckq/scalar_expr.hpp"

namespace ckq {

/// (i,k) = j_min ... j_{max-1} as a monomial over N-1 parameters.
JMonomial ck_product(int i, int k, int N);

/// rho vector; exact half-integers for odd N.
std::vector<Rational> rho(int N);

class SigmaPermutation {
public:
    SigmaPermutation() = default;
    explicit SigmaPermutation(std::vector<int> image);
    static SigmaPermutation identity(int N);
    /// "1,3,2" or "(1,3,2)".
    static SigmaPermutation parse(const std::string& text);

    int size() const { return static_cast<int>(image_.size()); }
    /// sigma_p for 1-based position p.
    int operator()(int p) const { return image_[p - 1]; }
    /// position p with sigma_p = g.
    int position(int g) const { return inverse_[g - 1]; }
    const std::vector<int>& image() const { return image_; }

    SigmaPermutation inverse() const;
    /// (a*b)(p) = a(b(p)).
    friend SigmaPermutation operator*(const SigmaPermutation& a, const SigmaPermutation& b);
    friend bool operator==(const SigmaPermutation&, const SigmaPermutation&) = default;
    friend auto operator<=>(const SigmaPermutation& a, const SigmaPermutation& b) { return a.image_ <=> b.image_; }

    std::string str() const;  // "(1,3,2)"

    /// All permutations of 1..N in lexicographic order.
    static std::vector<SigmaPermutation> all(int N);

private:
    std::vector<int> image_;
    std::vector<int> inverse_;
};

/// a + b*s with s^2 = 1/2.
struct ExtendedScalar {
    GaussianRational a, b;

    static ExtendedScalar s() { return {0, 1}; }
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    ExtendedScalar& operator+=(const ExtendedScalar& o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    friend ExtendedScalar operator+(ExtendedScalar x, const ExtendedScalar& y) { return x += y; }
    friend ExtendedScalar operator*(const ExtendedScalar& x, const ExtendedScalar& y) {
        return {x.a * y.a + x.b * y.b * GaussianRational(Rational(1, 2)), x.a * y.b + x.b * y.a};
    }
    friend bool operator==(const ExtendedScalar&, const ExtendedScalar&) = default;
    std::string str() const;
};

template <class T>
using Matrix = std::vector<std::vector<T>>;

using ExtMatrix = Matrix<ExtendedScalar>;
using ExprMatrix = Matrix<ScalarExpr>;

ExtMatrix transpose(const ExtMatrix& m);
ExtMatrix operator*(const ExtMatrix& x, const ExtMatrix& y);

/// Secondary-diagonal unit matrix.
ExtMatrix build_C0(int N);
/// Skew-to-Cartesian matrix; even N drops the middle row and column.
ExtMatrix build_D(int N);
ExtMatrix build_V(const SigmaPermutation& sigma);
ExtMatrix build_D_sigma(const SigmaPermutation& sigma);
bool is_orthogonal(const ExtMatrix& D);
bool check_orthogonality(const SigmaPermutation& sigma);

/// diag(1, (1,2), ..., (1,N)).
std::vector<JMonomial> psi(int N);

/// psi V^t D^t C D V psi with q^rho = cosh(J v rho) + sinh(J v rho).
ExprMatrix build_C_sigma(const SigmaPermutation& sigma, const JMonomial& J);

std::string render_latex(const ExtMatrix& m);
std::string render_latex(const ExprMatrix& m, const std::vector<std::string>* names = nullptr);

}  // namespace ckq
