#pragma once

// Top-level verification suites binding the analytic and the geometric
// side. Every check is exact; a single coefficient mismatch fails the run.
// Identities in q are certified by sampling more values than the q-degree
// bound of the polynomials involved.

#include "hermloc/canonical_form.hpp"
#include "hermloc/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hermloc {

struct VerificationOutcome {
    std::string name;
    std::string parameters;
    std::string lhs, rhs;
    bool pass = false;
    double elapsed_ms = 0;
};

inline bool all_pass(const std::vector<VerificationOutcome>& v) {
    for (const auto& o : v)
        if (!o.pass) return false;
    return true;
}

// mu_q(q,a,b) * alpha(S,S) = 2 alpha'(S,T) for T anisotropic (eps1 = -1),
// every 0 <= b <= a <= a_max, every q in q_set.
std::vector<VerificationOutcome> verify_kr(const std::vector<int64_t>& q_set, int a_max);

// Brute-force alpha(S_r, T) against the polynomial at X = q^{-2r}. Forms
// with invariant <= (3,3) by default; diagonal T is paired with the split
// and nonsplit S, antidiagonal T additionally with H.
std::vector<VerificationOutcome> verify_interpolation(int64_t p, int ell, int r,
                                                      const std::vector<CanonicalForm>& forms,
                                                      uint64_t budget, int threads);

// Stabilized oracle value against alpha(S,T,1).
std::vector<VerificationOutcome> verify_x1(int64_t p, const std::vector<CanonicalForm>& forms,
                                           uint64_t budget, int threads);

// initial_expression = alpha_poly coefficientwise over all sign pairs.
std::vector<VerificationOutcome> verify_hironaka(const std::vector<int64_t>& q_set, int a_max);

// Fundamental-invariant recursion over every canonical form with invariant
// <= (inv_max, inv_max), through the tabulated path and (for prime q) the
// explicit transform+normalize path.
std::vector<VerificationOutcome> verify_recursion_suite(const std::vector<int64_t>& q_set,
                                                        int inv_max);

// I + II + III assembly against mu_q over 0 <= a, b <= ab_max.
std::vector<VerificationOutcome> verify_assembly(const std::vector<int64_t>& q_set, int ab_max);

// Inductive lifting lengths against the closed form; branch continuity of
// z_dot_special at b = s.
std::vector<VerificationOutcome> verify_lifting(const std::vector<int64_t>& q_set, int sl_max,
                                                int s_branch_max);

// Canonical forms with fundamental invariant <= (m, m), suitable as a
// default verification grid.
std::vector<CanonicalForm> forms_up_to_invariant(int inv_max);

}  // namespace hermloc
