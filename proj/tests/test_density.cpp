#include "hermloc/density.hpp"

#include <doctest.h>

using namespace hermloc;

namespace {
DensityPolynomial poly(int64_t q, std::vector<Rat> c) { return DensityPolynomial(q, std::move(c)); }
}  // namespace

TEST_CASE("polynomial arithmetic") {
    DensityPolynomial a = poly(3, {1, 2, 0, 0});
    CHECK(a.degree() == 1);
    DensityPolynomial b = poly(3, {0, 1});
    CHECK((a * b).coeffs() == std::vector<Rat>{0, 1, 2});
    CHECK((a - a).is_zero());
    CHECK(a.eval(Rat(1, 2)) == 2);
    DensityPolynomial prod = a * b;
    CHECK(prod.divide_exact(b) == a);
    CHECK_THROWS_AS(a.divide_exact(b), std::invalid_argument);
    CHECK(poly(3, {1, 4, -1}).str() == "1 + 4*X - X^2");
}

TEST_CASE("alpha_poly closed formulas, unimodular S") {
    for (int64_t q : {3, 5, 7, 9}) {
        // alpha(S,S): 1 + (2q-2)X - X^2
        CHECK(alpha_poly(q, CanonicalForm::diag(0, 0, 1), SType::split) ==
              poly(q, {1, 2 * q - 2, -1}));
        // eps1 = -1, a = b = 0: (1-X)^2
        CHECK(alpha_poly(q, CanonicalForm::diag(0, 0, -1), SType::split) == poly(q, {1, -2, 1}));
        // eps1 = -1, a = 1, b = 0: 1 + (q-2)X - qX^2 + X^3
        CHECK(alpha_poly(q, CanonicalForm::diag(1, 0, -1), SType::split) ==
              poly(q, {1, q - 2, -q, 1}));
    }
}

TEST_CASE("alpha at X = 1") {
    for (int64_t q : {3, 5, 7}) {
        CHECK(alpha_value_at_one(q, CanonicalForm::diag(0, 0, 1), SType::split) == 2 * q - 2);
        CHECK(alpha_value_at_one(q, CanonicalForm::diag(0, 0, -1), SType::split) == 0);
        CHECK(alpha_value_at_one(q, CanonicalForm::diag(0, 0, -1), SType::nonsplit) ==
              2 * (q + 1));
        // alpha(S',T) = 2(q+1) independently of a, b when chi(T) = -1
        for (int a = 0; a <= 5; ++a)
            for (int b = 0; b <= a; ++b)
                CHECK(alpha_value_at_one(q, CanonicalForm::diag(a, b, -1), SType::nonsplit) ==
                      2 * (q + 1));
    }
}

TEST_CASE("vanishing law: value at 1 is 0 iff chi mismatch (integral forms)") {
    for (int64_t q : {3, 5}) {
        for (int a = 0; a <= 8; ++a) {
            for (int b = 0; b <= a; ++b)
                for (int e1 : {1, -1})
                    for (SType s : {SType::split, SType::nonsplit}) {
                        CanonicalForm T = CanonicalForm::diag(a, b, e1);
                        bool vanish = alpha_value_at_one(q, T, s) == 0;
                        CHECK(vanish == (chi_of(T) != hasse_sign(s)));
                    }
            // antidiagonal integral forms (a >= 1); anti(0) ~ H is not
            // integral and vanishes for the unimodular S regardless.
            if (a >= 1)
                for (SType s : {SType::split, SType::nonsplit}) {
                    bool vanish = alpha_value_at_one(q, CanonicalForm::anti(a), s) == 0;
                    CHECK(vanish == (1 != hasse_sign(s)));
                }
        }
        CHECK(alpha_value_at_one(q, CanonicalForm::anti(0), SType::split) == 0);
    }
}

TEST_CASE("degree and leading coefficient") {
    for (int64_t q : {3, 5, 7})
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; b <= a; ++b)
                for (int e1 : {1, -1}) {
                    CanonicalForm T = CanonicalForm::diag(a, b, e1);
                    for (SType s : {SType::split, SType::nonsplit}) {
                        DensityPolynomial P = alpha_poly(q, T, s);
                        CHECK(P.degree() == a + b + 2);
                        CHECK(P.coeffs().back() == -e1);
                    }
                    CHECK(alpha_poly(q, T, SType::hyperbolic).degree() == a + b + 2);
                }
}

TEST_CASE("alpha_prime and the closed cross-check") {
    for (int64_t q : {3, 5, 7, 11}) {
        CHECK(alpha_prime(q, CanonicalForm::diag(0, 0, -1)) == 0);
        CHECK(alpha_prime(q, CanonicalForm::diag(1, 0, -1)) == q - 1);
        CHECK(alpha_prime(q, CanonicalForm::diag(1, 1, -1)) == 2 * q * q - 2);
        for (int a = 0; a <= 8; ++a)
            for (int b = 0; b <= a; ++b)
                CHECK(alpha_prime(q, CanonicalForm::diag(a, b, -1)) ==
                      alpha_prime_closed(q, a, b));
    }
}

TEST_CASE("beta polynomials") {
    for (int64_t q : {3, 5}) {
        Rat qi2(Int(-1), Int(q) * q);
        CHECK(beta_poly_H(q, CanonicalForm::anti(0)) == poly(q, {1, qi2}));
        CHECK(beta_poly_H(q, CanonicalForm::diag(0, 0, 1)) ==
              poly(q, {1, -1}) * poly(q, {1, qi2}));
        CHECK(beta_poly_H(q, CanonicalForm::diag(2, 1, -1)) ==
              poly(q, {1, -1}) * poly(q, {1, qi2}));
    }
}

TEST_CASE("mu and nu helpers") {
    for (int64_t q : {3, 5}) {
        CHECK(mu_helper(q, 0, 0) == poly(q, {1, -1}));
        CHECK(nu_helper(q, 1, 1) == poly(q, {1, 1}));
        CHECK(nu_helper(q, 0, 0) == poly(q, {1}));
        CHECK(mu_helper(q, 3, -1).is_zero());
        CHECK(nu_helper(q, 5, -1).is_zero());
        // mu(1,1): 1 + qX - qX^2 - X^3
        CHECK(mu_helper(q, 1, 1) == poly(q, {1, q, -q, -1}));
    }
}

TEST_CASE("formula 2 factors through mu/nu") {
    for (int64_t q : {3, 5})
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; b <= a; ++b) {
                DensityPolynomial om = poly(q, {1, Rat(Int(-1), Int(q) * q)});
                CHECK(alpha_poly(q, CanonicalForm::diag(a, b, -1), SType::hyperbolic) ==
                      om * mu_helper(q, a, b));
                CHECK(alpha_poly(q, CanonicalForm::diag(a, b, 1), SType::hyperbolic) ==
                      om * nu_helper(q, 2 * a + 1, 2 * b + 1));
                CHECK(alpha_poly(q, CanonicalForm::anti(a), SType::hyperbolic) ==
                      om * nu_helper(q, 2 * a, 2 * a));
            }
}

TEST_CASE("recursion via tabulated rules") {
    for (int64_t q : {3, 4, 5}) {
        for (int a = 0; a <= 6; ++a) {
            for (int b = 0; b <= a; ++b)
                for (int e1 : {1, -1}) {
                    RecursionReport rep = verify_recursion(q, CanonicalForm::diag(a, b, e1));
                    CHECK(rep.pass);
                }
            RecursionReport rep = verify_recursion(q, CanonicalForm::anti(a));
            CHECK(rep.pass);
        }
    }
    // residuals: 1 - X generically, 1 at invariant (0,0)
    DensityPolynomial om = poly(3, {1, Rat(Int(-1), Int(9))});
    RecursionReport r1 = verify_recursion(3, CanonicalForm::diag(2, 1, -1));
    CHECK(r1.lhs.divide_exact(om) == poly(3, {1, -1}));
    RecursionReport r2 = verify_recursion(3, CanonicalForm::anti(0));
    CHECK(r2.lhs.divide_exact(om) == poly(3, {1}));
    RecursionReport r3 = verify_recursion(3, CanonicalForm::anti(2));
    CHECK(r3.lhs.divide_exact(om) == poly(3, {1, -1}));
}

TEST_CASE("recursion with the explicit matrix path") {
    for (int64_t q : {3, 5}) {
        for (const CanonicalForm& T :
             {CanonicalForm::diag(0, 0, 1), CanonicalForm::diag(0, 0, -1),
              CanonicalForm::diag(2, 1, 1), CanonicalForm::diag(2, 2, -1),
              CanonicalForm::diag(3, 1, -1), CanonicalForm::anti(0), CanonicalForm::anti(2)}) {
            RecursionReport rep = verify_recursion(q, T, true);
            CHECK(rep.matrix_path_run);
            CHECK(rep.paths_agree);
            CHECK(rep.pass);
        }
    }
}
