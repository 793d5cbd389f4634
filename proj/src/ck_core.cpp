#include "ckq/ck_core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ckq {

JMonomial ck_product(int i, int k, int N) {
    if (i < 1 || k < 1 || i > N || k > N)
        throw std::out_of_range("(" + std::to_string(i) + "," + std::to_string(k) + ") outside 1.." + std::to_string(N));
    JMonomial m(N - 1);
    for (int l = std::min(i, k); l < std::max(i, k); ++l) m[l - 1] = 1;
    return m;
}

std::vector<Rational> rho(int N) {
    if (N < 2) throw std::invalid_argument("rho needs N >= 2");
    int n = N / 2;
    std::vector<Rational> r(N);
    for (int k = 1; k <= n; ++k) {
        Rational value = N % 2 ? Rational(2 * (n - k) + 1, 2) : Rational(n - k);
        r[k - 1] = value;
        r[N - k] = -value;
    }
    return r;
}

SigmaPermutation::SigmaPermutation(std::vector<int> image) : image_(std::move(image)), inverse_(image_.size(), 0) {
    int N = size();
    for (int p = 0; p < N; ++p) {
        int g = image_[p];
        if (g < 1 || g > N || inverse_[g - 1] != 0) throw std::invalid_argument(str() + " is not a permutation");
        inverse_[g - 1] = p + 1;
    }
}

SigmaPermutation SigmaPermutation::identity(int N) {
    std::vector<int> v(N);
    std::iota(v.begin(), v.end(), 1);
    return SigmaPermutation(v);
}

SigmaPermutation SigmaPermutation::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != '(' && c != ')' && c != ' ') t += c;
    std::vector<int> v;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw std::invalid_argument("bad permutation entry '" + item + "'");
        v.push_back(x);
    }
    if (v.empty()) throw std::invalid_argument("empty permutation");
    return SigmaPermutation(v);
}

SigmaPermutation SigmaPermutation::inverse() const { return SigmaPermutation(inverse_); }

SigmaPermutation operator*(const SigmaPermutation& a, const SigmaPermutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> v(a.size());
    for (int p = 1; p <= a.size(); ++p) v[p - 1] = a(b(p));
    return SigmaPermutation(v);
}

std::string SigmaPermutation::str() const {
    std::string s = "(";
    for (std::size_t p = 0; p < image_.size(); ++p) s += (p ? "," : "") + std::to_string(image_[p]);
    return s + ")";
}

std::vector<SigmaPermutation> SigmaPermutation::all(int N) {
    std::vector<int> v(N);
    std::iota(v.begin(), v.end(), 1);
    std::vector<SigmaPermutation> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::string ExtendedScalar::str() const {
    if (b.is_zero()) return a.str();
    std::string sb = format_product(b, {"s"});
    if (a.is_zero()) return sb;
    return a.str() + (sb[0] == '-' ? " - " + sb.substr(1) : " + " + sb);
}

ExtMatrix transpose(const ExtMatrix& m) {
    ExtMatrix t(m.empty() ? 0 : m[0].size(), std::vector<ExtendedScalar>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t k = 0; k < m[i].size(); ++k) t[k][i] = m[i][k];
    return t;
}

ExtMatrix operator*(const ExtMatrix& x, const ExtMatrix& y) {
    std::size_t inner = y.size();
    ExtMatrix r(x.size(), std::vector<ExtendedScalar>(y.empty() ? 0 : y[0].size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t k = 0; k < r[i].size(); ++k)
            for (std::size_t l = 0; l < inner; ++l) r[i][k] += x[i][l] * y[l][k];
    return r;
}

ExtMatrix build_C0(int N) {
    ExtMatrix c(N, std::vector<ExtendedScalar>(N));
    for (int i = 0; i < N; ++i) c[i][N - 1 - i] = {1, 0};
    return c;
}

ExtMatrix build_D(int N) {
    int n = N / 2;
    int full = 2 * n + 1;
    ExtMatrix d(full, std::vector<ExtendedScalar>(full));
    ExtendedScalar s = ExtendedScalar::s();
    GaussianRational i = GaussianRational::i();
    for (int k = 0; k < n; ++k) {
        int kp = full - 1 - k;
        d[k][k] = s;                      // I
        d[k][kp] = s * ExtendedScalar{-i, 0};  // -i C~0
        d[kp][k] = s;                     // C~0
        d[kp][kp] = s * ExtendedScalar{i, 0};  // i I
    }
    d[n][n] = {1, 0};
    if (N % 2) return d;
    ExtMatrix even;
    for (int r = 0; r < full; ++r) {
        if (r == n) continue;
        std::vector<ExtendedScalar> row;
        for (int c = 0; c < full; ++c)
            if (c != n) row.push_back(d[r][c]);
        even.push_back(row);
    }
    return even;
}

ExtMatrix build_V(const SigmaPermutation& sigma) {
    int N = sigma.size();
    ExtMatrix v(N, std::vector<ExtendedScalar>(N));
    for (int i = 1; i <= N; ++i) v[i - 1][sigma(i) - 1] = {1, 0};
    return v;
}

ExtMatrix build_D_sigma(const SigmaPermutation& sigma) { return build_D(sigma.size()) * build_V(sigma); }

bool is_orthogonal(const ExtMatrix& D) {
    int N = static_cast<int>(D.size());
    ExtMatrix p = transpose(D) * build_C0(N) * D;
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k)
            if (!(p[i][k] == ExtendedScalar{i == k ? 1 : 0, 0})) return false;
    return true;
}

bool check_orthogonality(const SigmaPermutation& sigma) { return is_orthogonal(build_D_sigma(sigma)); }

std::vector<JMonomial> psi(int N) {
    std::vector<JMonomial> d;
    for (int k = 1; k <= N; ++k) d.push_back(ck_product(1, k, N));
    return d;
}

ExprMatrix build_C_sigma(const SigmaPermutation& sigma, const JMonomial& J) {
    int N = sigma.size();
    std::size_t params = N - 1;
    ExtMatrix Ds = build_D_sigma(sigma);
    auto r = rho(N);
    auto ps = psi(N);
    ExprMatrix out(N, std::vector<ScalarExpr>(N, ScalarExpr(params)));
    // (D^t C D)_{ik} = sum_l D_{l i} D_{l' k} q^{rho_{l'}}
    for (int i = 0; i < N; ++i) {
        for (int k = 0; k < N; ++k) {
            ScalarExpr entry(params);
            for (int l = 0; l < N; ++l) {
                int lp = N - 1 - l;
                ExtendedScalar c = Ds[l][i] * Ds[lp][k];
                if (c.is_zero()) continue;
                if (!c.b.is_zero()) throw std::logic_error("irrational entry in C_sigma");
                ScalarExpr q = ScalarExpr::cosh(r[lp], J) + ScalarExpr::sinh(r[lp], J);
                q *= c.a;
                entry += q;
            }
            out[i][k] = entry * ScalarExpr::monomial(ps[i] * ps[k]);
        }
    }
    return out;
}

std::string render_latex(const ExtMatrix& m) {
    std::string s = "\\left(\\begin{array}{" + std::string(m.empty() ? 0 : m[0].size(), 'c') + "}\n";
    for (const auto& row : m) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            std::string e;
            for (char c : row[k].str()) e += c == 's' ? std::string("\\tfrac{1}{\\sqrt{2}}") : std::string(1, c);
            s += (k ? " & " : "  ") + e;
        }
        s += " \\\\\n";
    }
    return s + "\\end{array}\\right)";
}

std::string render_latex(const ExprMatrix& m, const std::vector<std::string>* names) {
    std::string s = "\\left(\\begin{array}{" + std::string(m.empty() ? 0 : m[0].size(), 'c') + "}\n";
    for (const auto& row : m) {
        for (std::size_t k = 0; k < row.size(); ++k) s += (k ? " & " : "  ") + row[k].latex(names);
        s += " \\\\\n";
    }
    return s + "\\end{array}\\right)";
}

}  // namespace ckq
