// Dual-route check of the fundamental-invariant recursion: the tabulated
// invariant rules against explicit coset transforms reduced back to
// canonical form.

#include "hermloc/density.hpp"
#include "hermloc/hermitian.hpp"

namespace hermloc {

GramMatrix gram_of_class(const CanonicalForm& cf, const LocalField& fld, int prec) {
    if (!cf.is_diagonal()) return GramMatrix::antidiag(fld, prec, cf.a);
    if (cf.a < cf.b) throw std::invalid_argument("gram_of_class: need a >= b");
    // Diag{u1 w0^a, u2 w0^b} with u1 = 1 and chi(-u2) = eps1.
    int64_t u2 = 0;
    for (int64_t c = 1; c < fld.p; ++c)
        if (chi_bar(-c, fld.p) == cf.eps1) {
            u2 = c;
            break;
        }
    if (u2 == 0) throw std::logic_error("gram_of_class: no unit with requested class");
    return GramMatrix::diag_w0(fld, prec, {{1, cf.a}, {u2, cf.b}});
}

namespace {

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Residual sum via explicit transform+normalize. Builds a concrete matrix
// for T, applies every coset representative, reduces, and evaluates
// alpha(H, -, X) from the resulting classes.
DensityPolynomial matrix_route_lhs(int64_t q, const CanonicalForm& T) {
    LocalField fld{q, Pi0Unit::plus_one};
    // Entry valuations stay within 2a+1 pi-digits; the pivot divisions in
    // normalize consume about half of that again.
    int prec = suggested_precision(std::abs(T.a));
    // residues live in a single machine word
    uint64_t m = 1;
    for (int i = 0; i < prec; ++i) {
        if (m > UINT64_MAX / static_cast<uint64_t>(q))
            throw precision_error(
                "matrix route: required precision exceeds machine residues at q=" +
                std::to_string(q) + "; shrink the invariant grid or use the tabulated path");
        m *= static_cast<uint64_t>(q);
    }
    GramMatrix M = gram_of_class(T, fld, prec);
    {
        CanonicalForm back = normalize(M);
        if (!(back == T))
            throw std::logic_error("matrix route: seed matrix does not normalize to its class");
    }
    DensityPolynomial X1(q, {Rat(0), Rat(1)});
    DensityPolynomial lhs = alpha_poly(q, T, SType::hyperbolic);
    for (const CosetRep& g : coset_reps(fld)) {
        CanonicalForm cls = normalize(transform(M, g));
        DensityPolynomial a = alpha_poly(q, cls, SType::hyperbolic);
        if (g.label == CosetRep::Label::pi_pi) {
            DensityPolynomial X2(q, {Rat(0), Rat(0), Rat(q)});
            lhs = lhs + X2 * a;
        } else {
            lhs = lhs - X1 * a;
        }
    }
    return lhs;
}

}  // namespace

RecursionReport verify_recursion(int64_t q, const CanonicalForm& T, bool with_matrix_path) {
    auto [fs, ft] = fundamental_invariant(T);
    if (fs < 0 || ft < 0) throw std::invalid_argument("verify_recursion: invariant < (0,0)");

    RecursionReport rep;
    rep.form = T;
    rep.rhs = beta_poly_H(q, T);

    // route (i): tabulated invariant transformation rules
    DensityPolynomial X1(q, {Rat(0), Rat(1)});
    DensityPolynomial lhs = alpha_poly(q, T, SType::hyperbolic);
    for (const auto& [cls, mult] : coset_transform_classes(T, q))
        lhs = lhs - X1 * alpha_poly(q, cls, SType::hyperbolic) * Rat(mult);
    DensityPolynomial X2(q, {Rat(0), Rat(0), Rat(q)});
    lhs = lhs + X2 * alpha_poly(q, scale_down_class(T), SType::hyperbolic);
    rep.lhs = lhs;

    if (with_matrix_path) {
        if (!is_prime(q))
            throw std::invalid_argument("verify_recursion: matrix path requires prime q");
        rep.lhs_matrix = matrix_route_lhs(q, T);
        rep.matrix_path_run = true;
        rep.paths_agree = (rep.lhs == rep.lhs_matrix);
    }

    rep.pass = (rep.lhs == rep.rhs) && (!rep.matrix_path_run || rep.lhs_matrix == rep.rhs);
    return rep;
}

}  // namespace hermloc
