#pragma once

// Orbit-sum machinery behind the closed density formulas: Gauss integrals
// J and J*, Iwahori orbit weights alpha(Y;Gamma), the character-sum factors
// G_Gamma(Y,T) and G(Y,S_r), and the assembled "initial expression" for
// alpha(S,T,X) whose simplification reproduces the closed formula.
//
// All infinite orbit sums enter only through their closed partial sums;
// nothing is truncated numerically.

#include "hermloc/density.hpp"
#include "hermloc/local_ring.hpp"
#include "hermloc/rational.hpp"

#include <cstdint>

namespace hermloc {

// Iwahori orbit representatives of hermitian matrices:
//   DiagOrbit{e1,e2,eps1,eps2} = Diag{eps1 w0^{e1}, eps2 w0^{e2}},
//   AntiOrbit{e} = [[0, pi^e], [(-pi)^e, 0]]
// with eps in {1, sigma}, chi(sigma) = -1, encoded by its chi value.
struct OrbitRep {
    enum class Kind { diag, anti };
    Kind kind = Kind::diag;
    int e1 = 0, e2 = 0;       // anti uses e1 only
    int chi1 = 1, chi2 = 1;   // chi of the unit eps_i

    static OrbitRep diag(int e1, int e2, int chi1 = 1, int chi2 = 1) {
        return OrbitRep{Kind::diag, e1, e2, chi1, chi2};
    }
    static OrbitRep anti(int e) { return OrbitRep{Kind::anti, e, 0, 1, 1}; }
};

// Orbit weight alpha(Y;Gamma): 4q^{e2+3e1-1} if e2 >= e1, 4q^{e1+3e2} if
// e2 < e1; q^{2e-1}(q-1) for the antidiagonal orbits.
Rat alpha_orbit_weight(int64_t q, const OrbitRep& Y);

// J(w) = integral of psi(w x xbar) over O_F, for w = w0 * (-pi0)^s encoded
// by (chi(w0), s): 1 for s >= 0, q^s chi(w0) g for s < 0.
GaussNumber J_integral(int64_t q, int unit_chi, int s);

// J*(w): same integral over the units. 0 for s < -1,
// (chi(w0) g - 1)/q at s = -1, 1 - 1/q for s >= 0.
GaussNumber J_star(int64_t q, int unit_chi, int s);

// q^{min(v,0)} - q^{min(v+1,0)-1}: the unit-times-full double integral of
// parts (3)/(4) of the Gauss-integral lemma.
Rat pair_integral_unit_full(int64_t q, int v);
// q^{min(v,0)} - 2q^{min(v+1,0)-1} + q^{min(v+2,0)-2}: both coordinates unit.
Rat pair_integral_unit_unit(int64_t q, int v);

// A monomial c * X^k with a GaussNumber coefficient; the q^r powers of the
// G(Y,S_r) factors are carried formally as X = q^{-2r}.
struct GaussMonomial {
    GaussNumber coeff;
    int xpow = 0;
};

// G_Gamma(Y, T) for T = Diag{u1 w0^a, u2 w0^b} (unit classes chi(u1), chi(u2))
// or T antidiagonal with exponent t_anti.
GaussNumber G_gamma_diag_T(int64_t q, const OrbitRep& Y, int a, int b, int chi_u1, int chi_u2);
GaussNumber G_gamma_anti_T(int64_t q, const OrbitRep& Y, int a_exp);

// G(Y, S_r) for S_r = Diag{v w0^{f1}, w0^{f2}} + H^r, with chi(v) given.
GaussMonomial G_S_diag(int64_t q, const OrbitRep& Y, int chi_v, int f1, int f2);
// ... and for S_r = antidiagonal(f) + H^r.
GaussMonomial G_S_anti(int64_t q, const OrbitRep& Y, int f);

// The same factors keyed by the standard S choices: split/nonsplit pick the
// unit class of v from chi(-v) = +-1 at f1 = f2 = 0; hyperbolic is the
// antidiagonal factor at exponent -1.
GaussMonomial G_S(int64_t q, const OrbitRep& Y, SType s, int f1 = 0, int f2 = 0);

// The X^k coefficient of A + B (closed form): (q-1)(q^{k-1}-1) for
// 2 <= k <= b+1, (q-1)(q^{2b-k+1}-1) for b+2 <= k <= 2b, else 0.
Rat a_plus_b_coeff(int64_t q, int b, int k);

// The assembled initial expression for alpha(S,T,X), S = Diag{v,1} with
// chi(-v) = eps2, T diagonal with invariants (a, b) and eps1 = chi(-u1u2).
// The A+B double sums are computed both termwise and by the closed
// coefficient formula; disagreement throws.
DensityPolynomial initial_expression(int64_t q, int a, int b, int eps1, int eps2);

}  // namespace hermloc
