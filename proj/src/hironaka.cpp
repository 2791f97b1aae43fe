#include "hermloc/hironaka.hpp"

namespace hermloc {

Rat alpha_orbit_weight(int64_t q, const OrbitRep& Y) {
    if (Y.kind == OrbitRep::Kind::diag) {
        if (Y.e2 >= Y.e1) return Rat(4) * rat_pow(q, Y.e2 + 3 * Y.e1 - 1);
        return Rat(4) * rat_pow(q, Y.e1 + 3 * Y.e2);
    }
    return rat_pow(q, 2 * Y.e1 - 1) * (q - 1);
}

GaussNumber J_integral(int64_t q, int unit_chi, int s) {
    if (s >= 0) return GaussNumber(q, 1);
    return GaussNumber(q, 0, rat_pow(q, s) * unit_chi);
}

GaussNumber J_star(int64_t q, int unit_chi, int s) {
    if (s < -1) return GaussNumber(q, 0);
    if (s == -1) return GaussNumber(q, Rat(Int(-1), Int(q)), Rat(Int(unit_chi), Int(q)));
    return GaussNumber(q, Rat(Int(q - 1), Int(q)));
}

Rat pair_integral_unit_full(int64_t q, int v) {
    return rat_pow(q, std::min(v, 0)) - rat_pow(q, std::min(v + 1, 0) - 1);
}

Rat pair_integral_unit_unit(int64_t q, int v) {
    return rat_pow(q, std::min(v, 0)) - Rat(2) * rat_pow(q, std::min(v + 1, 0) - 1) +
           rat_pow(q, std::min(v + 2, 0) - 2);
}

GaussNumber G_gamma_diag_T(int64_t q, const OrbitRep& Y, int a, int b, int chi_u1, int chi_u2) {
    int cm1 = chi_bar_minus_one(q);
    if (Y.kind == OrbitRep::Kind::diag) {
        // (1/q) J*(-e1 u1 w0^{a+e1}) J(-e1 u2 w0^{b+e1})
        //       J(-e2 u1 w0^{a+e2+1}) J*(-e2 u2 w0^{b+e2})
        GaussNumber r = J_star(q, cm1 * Y.chi1 * chi_u1, a + Y.e1) *
                        J_integral(q, cm1 * Y.chi1 * chi_u2, b + Y.e1) *
                        J_integral(q, cm1 * Y.chi2 * chi_u1, a + Y.e2 + 1) *
                        J_star(q, cm1 * Y.chi2 * chi_u2, b + Y.e2);
        return GaussNumber(q, Rat(Int(1), Int(q))) * r;
    }
    int e = Y.e1;
    Rat r = Rat(Int(1), Int(q)) * pair_integral_unit_full(q, 2 * a + e + 2) *
            pair_integral_unit_full(q, 2 * b + e + 1);
    return GaussNumber(q, r);
}

GaussNumber G_gamma_anti_T(int64_t q, const OrbitRep& Y, int a_exp) {
    if (Y.kind == OrbitRep::Kind::diag) {
        Rat r = Rat(Int(1), Int(q)) * pair_integral_unit_full(q, a_exp + 2 * Y.e1 + 1) *
                pair_integral_unit_full(q, a_exp + 2 * Y.e2 + 2);
        return GaussNumber(q, r);
    }
    int e = Y.e1;
    Rat r = Rat(Int(1), Int(q)) * pair_integral_unit_unit(q, a_exp + e + 1) *
            rat_pow(q, std::min(a_exp + e + 2, 0));
    return GaussNumber(q, r);
}

GaussMonomial G_S_diag(int64_t q, const OrbitRep& Y, int chi_v, int f1, int f2) {
    if (Y.kind == OrbitRep::Kind::diag) {
        GaussNumber g = J_integral(q, chi_v * Y.chi1, Y.e1 + f1) *
                        J_integral(q, chi_v * Y.chi2, Y.e2 + f1) *
                        J_integral(q, Y.chi1, Y.e1 + f2) *
                        J_integral(q, Y.chi2, Y.e2 + f2);
        return {g, -(std::min(Y.e1, 0) + std::min(Y.e2, 0))};
    }
    int e = Y.e1;
    Rat r = rat_pow(q, std::min(e + 2 * f1 + 1, 0)) * rat_pow(q, std::min(e + 2 * f2 + 1, 0));
    return {GaussNumber(q, r), -std::min(e, 0)};
}

GaussMonomial G_S_anti(int64_t q, const OrbitRep& Y, int f) {
    if (Y.kind == OrbitRep::Kind::diag) {
        Rat r = rat_pow(q, std::min(2 * Y.e1 + f + 1, 0) + std::min(2 * Y.e2 + f + 1, 0));
        return {GaussNumber(q, r), -(std::min(Y.e1, 0) + std::min(Y.e2, 0))};
    }
    int e = Y.e1;
    return {GaussNumber(q, rat_pow(q, 2 * std::min(e + f + 1, 0))), -std::min(e, 0)};
}

GaussMonomial G_S(int64_t q, const OrbitRep& Y, SType s, int f1, int f2) {
    if (s == SType::hyperbolic) return G_S_anti(q, Y, -1);
    // chi(-v) = hasse_sign(s), so chi(v) = chi(-1) * hasse_sign(s)
    int chi_v = chi_bar_minus_one(q) * hasse_sign(s);
    return G_S_diag(q, Y, chi_v, f1, f2);
}

Rat a_plus_b_coeff(int64_t q, int b, int k) {
    if (k >= 2 && k <= b + 1) return Rat(q - 1) * (rat_pow(q, k - 1) - 1);
    if (k >= b + 2 && k <= 2 * b) return Rat(q - 1) * (rat_pow(q, 2 * b - k + 1) - 1);
    return 0;
}

DensityPolynomial initial_expression(int64_t q, int a, int b, int eps1, int eps2) {
    if (b < 0 || a < b) throw std::invalid_argument("initial_expression: need a >= b >= 0");
    if ((eps1 != 1 && eps1 != -1) || (eps2 != 1 && eps2 != -1))
        throw std::invalid_argument("initial_expression: signs must be +-1");

    DensityPolynomial P(q);
    // (q-1) sum_{e=1}^{2b+1} X^e + 1
    P.add_term(0, 1);
    for (int e = 1; e <= 2 * b + 1; ++e) P.add_term(e, Rat(q - 1));
    // - (q-1) q^b sum_{e=1}^{b} q^{-e} X^{e+b+1}
    for (int e = 1; e <= b; ++e) P.add_term(e + b + 1, Rat(1 - q) * rat_pow(q, b - e));

    // A + B, termwise
    DensityPolynomial AB(q);
    Rat qm1sq = Rat(q - 1) * (q - 1);
    for (int e2 = 1; e2 <= b; ++e2)
        for (int e1 = e2; e1 <= b; ++e1) AB.add_term(e1 + e2, qm1sq * rat_pow(q, e1 - e2));
    for (int e2 = 2; e2 <= b; ++e2)
        for (int e1 = 1; e1 <= e2 - 1; ++e1) AB.add_term(e1 + e2, qm1sq * rat_pow(q, e2 - e1 - 1));
    // ... and by the closed coefficient formula; the two must agree.
    DensityPolynomial AB_closed(q);
    for (int k = 2; k <= 2 * b; ++k) AB_closed.add_term(k, a_plus_b_coeff(q, b, k));
    if (!(AB == AB_closed))
        throw std::logic_error("initial_expression: A+B closed form disagrees with raw sum");
    P = P + AB;

    // - eps1 X^{a+b+2} + sum_{e=1}^{b} (q-1) eps1 q^{b+1-e} X^{a+1+e}
    P.add_term(a + b + 2, Rat(-eps1));
    for (int e = 1; e <= b; ++e) P.add_term(a + 1 + e, Rat(q - 1) * eps1 * rat_pow(q, b + 1 - e));
    // + sum_{e=1}^{b} (q - 1/q) eps2 q^e X^e - eps2 q^b X^{b+1}
    Rat q_minus = Rat(q) - Rat(Int(1), Int(q));
    for (int e = 1; e <= b; ++e) P.add_term(e, q_minus * eps2 * rat_pow(q, e));
    P.add_term(b + 1, Rat(-eps2) * rat_pow(q, b));
    // + eps1 eps2 q^{b+1} X^{a+1}
    P.add_term(a + 1, Rat(eps1 * eps2) * rat_pow(q, b + 1));
    return P;
}

}  // namespace hermloc
