#include "ckq/multiplier.hpp"

#include <algorithm>
#include <stdexcept>

#include "ckq/relations.hpp"

namespace ckq {

JMonomial multiplier_union(const JMonomial& a, const JMonomial& b) {
    if (a.size() != b.size()) throw std::invalid_argument("multiplier length mismatch");
    JMonomial r = a;
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = std::max(a[k], b[k]);
    return r;
}

JMonomial j_zero(const SigmaPermutation& sigma) {
    int N = sigma.size();
    int n = N / 2;
    int last = N % 2 ? n : n - 1;
    JMonomial J(N - 1);
    for (int k = 1; k <= last; ++k) J = multiplier_union(J, ck_product(sigma(k), sigma(N + 1 - k), N));
    return J;
}

JMonomial j_one(const SigmaPermutation& sigma) {
    int N = sigma.size();
    int n = N / 2;
    JMonomial J(N - 1);
    for (int k = 1; k <= n; ++k) {
        int kp = N + 1 - k;
        if (k + 1 > kp - 1) continue;
        int ik = N + 1;
        for (int p = k + 1; p <= kp - 1; ++p) ik = std::min(ik, sigma(p));
        int a = std::min(sigma(k), sigma(kp)), b = std::max(sigma(k), sigma(kp));
        JMonomial term(N - 1);
        if (ik < a) term = ck_product(ik, a, N).pow(2) * ck_product(a, b, N);
        else if (ik < b) term = ck_product(ik, b, N);
        J = multiplier_union(J, term);
    }
    return J;
}

JMonomial theorem_multiplier(const SigmaPermutation& sigma) { return multiplier_union(j_zero(sigma), j_one(sigma)); }

namespace {

void scan(const ScalarExpr& e, JMonomial& need) {
    for (const auto& [key, c] : e.terms()) {
        bool odd_atom = false;
        for (const auto& [atom, p] : key.atoms)
            if (atom.kind != Atom::Kind::Cosh && p > 0) odd_atom = true;
        if (!odd_atom) continue;
        for (std::size_t k = 0; k < need.size(); ++k) need[k] = std::max(need[k], -key.mono[k]);
    }
}

void scan(const ExprPoly& p, JMonomial& need) {
    for (const auto& [w, c] : p.terms()) scan(c, need);
}

}  // namespace

JMonomial oracle_multiplier(const SigmaPermutation& sigma) {
    int N = sigma.size();
    Presentation p = generate_closed(sigma, JMonomial(N - 1));
    JMonomial need(N - 1);
    for (const auto& r : p.raw) scan(r, need);
    for (const auto& s : p.star_closed) scan(s, need);
    scan(p.invariant_closed, need);
    return multiplier_union(need, j_zero(sigma));
}

JMonomial multiplier(MultiplierKind kind, const SigmaPermutation& sigma) {
    switch (kind) {
        case MultiplierKind::Theorem: return theorem_multiplier(sigma);
        case MultiplierKind::JZero: return j_zero(sigma);
        case MultiplierKind::Oracle: return oracle_multiplier(sigma);
    }
    return theorem_multiplier(sigma);
}

MultiplierKind parse_multiplier_kind(const std::string& s) {
    if (s == "theorem") return MultiplierKind::Theorem;
    if (s == "j0") return MultiplierKind::JZero;
    if (s == "oracle") return MultiplierKind::Oracle;
    throw std::invalid_argument("unknown multiplier kind '" + s + "' (theorem, j0, oracle)");
}

}  // namespace ckq
