#include "doctest.h"

#include "ckq/ck_core.hpp"

using namespace ckq;

TEST_CASE("(i,k) products") {
    CHECK(ck_product(2, 2, 3).is_one());
    CHECK(ck_product(1, 3, 3) == JMonomial({1, 1}));
    CHECK(ck_product(2, 4, 4) == JMonomial({0, 1, 1}));
    for (int i = 1; i <= 5; ++i)
        for (int k = 1; k <= 5; ++k) CHECK(ck_product(i, k, 5) == ck_product(k, i, 5));
    CHECK_THROWS_AS(ck_product(0, 2, 3), std::out_of_range);
    CHECK_THROWS_AS(ck_product(1, 4, 3), std::out_of_range);
}

TEST_CASE("rho vector") {
    CHECK(rho(3) == std::vector<Rational>{Rational(1, 2), 0, Rational(-1, 2)});
    CHECK(rho(4) == std::vector<Rational>{1, 0, 0, -1});
    CHECK(rho(5) == std::vector<Rational>{Rational(3, 2), Rational(1, 2), 0, Rational(-1, 2), Rational(-3, 2)});
    CHECK(rho(6) == std::vector<Rational>{2, 1, 0, 0, -1, -2});
    for (int N = 2; N <= 8; ++N) {
        Rational sum = 0;
        for (const auto& x : rho(N)) sum += x;
        CHECK(sum == 0);
    }
}

TEST_CASE("permutations") {
    auto s = SigmaPermutation::parse("(2,1,3)");
    CHECK(s(1) == 2);
    CHECK(s.position(2) == 1);
    CHECK(s.str() == "(2,1,3)");
    CHECK(s * s.inverse() == SigmaPermutation::identity(3));
    CHECK_THROWS_WITH(SigmaPermutation::parse("1,1,2"), doctest::Contains("not a permutation"));
    CHECK_THROWS(SigmaPermutation::parse("1,x,2"));
    CHECK(SigmaPermutation::all(4).size() == 24);
}

TEST_CASE("D matrix") {
    auto D = build_D(3);
    ExtendedScalar s = ExtendedScalar::s(), zero{0, 0};
    GaussianRational i = GaussianRational::i();
    ExtMatrix expected = {{s, zero, ExtendedScalar{0, -i}}, {zero, {1, 0}, zero}, {s, zero, ExtendedScalar{0, i}}};
    CHECK(D == expected);
    CHECK(build_D_sigma(SigmaPermutation::identity(3)) == D);

    auto V = build_V(SigmaPermutation::parse("2,1,3"));
    CHECK(V[0][1] == ExtendedScalar{1, 0});
    CHECK(V[1][0] == ExtendedScalar{1, 0});
    CHECK(V[2][2] == ExtendedScalar{1, 0});

    CHECK(build_D(4).size() == 4);
}

TEST_CASE("orthogonality of D_sigma") {
    for (int N = 3; N <= 5; ++N)
        for (const auto& s : SigmaPermutation::all(N)) CHECK(check_orthogonality(s));
    CHECK(check_orthogonality(SigmaPermutation::identity(2)));
    CHECK(check_orthogonality(SigmaPermutation::identity(6)));

    auto D = build_D(3);
    D[2][2] = D[2][2] * ExtendedScalar{-1, 0};
    CHECK_FALSE(is_orthogonal(D));
}

TEST_CASE("C_sigma at v = 0") {
    for (int N = 3; N <= 4; ++N) {
        JMonomial J = JMonomial(std::vector<int>(N - 1, 1));
        auto ps = psi(N);
        for (const auto& s : SigmaPermutation::all(N)) {
            auto C = build_C_sigma(s, J);
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b) {
                    VSeries at_zero = expand(C[a][b], 0);
                    if (a == b)
                        CHECK(at_zero == VSeries::term(0, ps[a] * ps[a], 1));
                    else
                        CHECK(at_zero.is_zero());
                }
        }
    }
    auto C = build_C_sigma(SigmaPermutation::parse("2,1,3"), JMonomial({1, 1}));
    // V^t V = I, so the permuted case still gives psi^2 at v = 0.
    CHECK(expand(C[0][0], 0).str() == "1");
    CHECK(expand(C[1][1], 0).str() == "j1^2");
    CHECK(expand(C[2][2], 0).str() == "j1^2*j2^2");
}

TEST_CASE("C_sigma quadratic form reproduces the invariant at first order") {
    // xi^t C xi is symmetric-summed; its v-linear part vanishes on the diagonal
    // because the cosh atoms are even.
    auto C = build_C_sigma(SigmaPermutation::identity(3), JMonomial({1, 1}));
    for (int a = 0; a < 3; ++a) CHECK(expand(C[a][a], 1).coeff(1).is_zero());
    CHECK(render_latex(build_D(3)).find("\\sqrt{2}") != std::string::npos);
}
