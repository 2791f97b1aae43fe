#pragma once

// Closed-form local density polynomials alpha(S,T,X) for rank-2 hermitian
// forms over the ramified quadratic extension, their derivative at X=1,
// primitive densities beta, the mu/nu partial-sum helpers, and the
// fundamental-invariant recursion check.
//
// q is a runtime integer (any prime power >= 3); identities "for all q" are
// certified by exact evaluation at more sample points than the q-degree.

#include "hermloc/canonical_form.hpp"
#include "hermloc/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hermloc {

class DensityPolynomial {
public:
    DensityPolynomial() = default;
    explicit DensityPolynomial(int64_t q) : q_(q) {}
    DensityPolynomial(int64_t q, std::vector<Rat> coeffs);

    int64_t q() const { return q_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }

    Rat coeff(int k) const;
    void add_term(int k, const Rat& c);  // coeffs[k] += c

    Rat eval(const Rat& x) const;
    Rat derivative_at_one() const;

    friend DensityPolynomial operator+(const DensityPolynomial&, const DensityPolynomial&);
    friend DensityPolynomial operator-(const DensityPolynomial&, const DensityPolynomial&);
    friend DensityPolynomial operator*(const DensityPolynomial&, const DensityPolynomial&);
    DensityPolynomial operator*(const Rat& c) const;
    bool operator==(const DensityPolynomial& o) const { return q_ == o.q_ && coeffs_ == o.coeffs_; }

    // Exact division; throws if the remainder is nonzero.
    DensityPolynomial divide_exact(const DensityPolynomial& d) const;

    std::string str() const;  // e.g. "1 + 4*X - X^2"

private:
    int64_t q_ = 0;
    std::vector<Rat> coeffs_;
    void trim();
};

// The rank-2 unimodular/self-dual choices of S:
//   Split      S  = Diag{v, 1}, chi(-v) = +1   (Hasse invariant +1)
//   NonSplit   S' = Diag{v',1}, chi(-v') = -1  (Hasse invariant -1)
//   Hyperbolic H  = [[0, 1/pi], [-1/pi, 0]]    (self-dual in Herm^dual)
enum class SType { split, nonsplit, hyperbolic };

inline int hasse_sign(SType s) {
    switch (s) {
        case SType::split: return 1;
        case SType::nonsplit: return -1;
        case SType::hyperbolic: return 1;
    }
    throw std::logic_error("unreachable");
}

std::string stype_name(SType s);

// alpha(S,T,X) by the closed formulas. A class with a negative invariant
// component yields the zero polynomial. Diagonal T with S split/nonsplit is
// formula 1 (eps2 = hasse_sign(s)); diagonal T with S hyperbolic is formula
// 2; antidiagonal T gives formulas 3 and 4.
DensityPolynomial alpha_poly(int64_t q, const CanonicalForm& T, SType s);

// alpha(S,T) = alpha(S,T,X)|_{X=1}.
Rat alpha_value_at_one(int64_t q, const CanonicalForm& T, SType s);

// alpha'(S,T) = -d/dX alpha(S,T,X)|_{X=1} with S the split form.
Rat alpha_prime(int64_t q, const CanonicalForm& T);

// Closed expression for alpha'(S,T) in the anisotropic case (eps1 = -1,
// a >= b): 2q^{b+1}(a-b+1) + 4*sum_{s=1}^{b} q^s - 2q - (q+1)(a+b).
// Kept as an independent cross-check of the polynomial derivative, which is
// always the primary computation. Note the superficially symmetric variant
// with q^{a+1} in place of q^{b+1} is NOT equal to this unless a = b; the
// q^{b+1} form is the one consistent with mu_q (2q-2) = 2 alpha'.
Rat alpha_prime_closed(int64_t q, int a, int b);

// Primitive density beta(H,T,X): (1-q^{-2}X) when T ~ H, else
// (1-X)(1-q^{-2}X). Defined for integral T and for T ~ H.
DensityPolynomial beta_poly_H(int64_t q, const CanonicalForm& T);

// mu(a,b,X) = alpha(H, diagonal T, X) / (1 - q^{-2}X); zero when b < 0.
DensityPolynomial mu_helper(int64_t q, int a, int b);

// nu(s,t,X) for fundamental invariants (s,t); zero when t < 0.
DensityPolynomial nu_helper(int64_t q, int s, int t);

// One step of the fundamental-invariant recursion with S = H, n = m = 2:
//   alpha(H,T,X) = X * sum_{g in U\pi_{2,1}} alpha(H,T[g^{-1}],X)
//                  - q X^2 * alpha(H, w0^{-1} T, X) + beta(H,T,X).
//
// The residual lhs is computed along two independent routes: (i) the
// tabulated invariant-transformation rules of the induction proof, and
// (ii) explicit matrix transforms T[g^{-1}] reduced back to canonical form.
// Route (ii) needs q = p prime (concrete coset matrices).
struct RecursionReport {
    CanonicalForm form;
    DensityPolynomial lhs;         // alpha - sum terms, tabulated route
    DensityPolynomial lhs_matrix;  // same via transform+normalize (if run)
    DensityPolynomial rhs;         // beta(H,T,X)
    bool matrix_path_run = false;
    bool paths_agree = true;
    bool pass = false;  // lhs == rhs, and lhs_matrix == rhs when run
};

// The multiset of classes {T[g^{-1}]} over the q+1 cosets of U\pi_{2,1},
// by the tabulated transformation rules of the induction proof. Each entry
// is (class, how many cosets land on it).
std::vector<std::pair<CanonicalForm, int>> coset_transform_classes(const CanonicalForm& T,
                                                                   int64_t q);

// w0^{-1} T: the i = 2 double-coset transform.
CanonicalForm scale_down_class(const CanonicalForm& T);

// Recursion check. with_matrix_path requires q prime; propagates precision
// errors from the transform route.
RecursionReport verify_recursion(int64_t q, const CanonicalForm& T, bool with_matrix_path = false);

}  // namespace hermloc
