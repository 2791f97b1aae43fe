#pragma once

// Geometric side: the special-cycle decomposition, the pairwise
// intersection table, the I + II + III assembly against mu_q(T), and
// quasi-canonical lifting lengths.

#include "hermloc/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hermloc {

// mu_q(T) = 2 sum_{s=0}^{min(a,b)} q^s (a+b+1-2s) - a - b - 2.
Int mu_q(int64_t q, int a, int b);

enum class Side { kappa, kappa_bar };

struct CycleComponent {
    enum class Kind { z0, zs_plus, zs_minus, exc };
    Kind kind = Kind::z0;
    Side side = Side::kappa;  // irrelevant for exc
    int s = 0;                // level; 0 for z0 and exc
    int multiplicity = 1;

    std::string str() const;
};

// Z^Kra(x) = Z_0 + sum_{s=1}^{a} Z_{s,-} + sum_{s=1}^{a} Z_{s,+} + (a+1) Exc.
std::vector<CycleComponent> decompose_special_cycle(int a, Side side = Side::kappa);

// Pairwise intersection numbers between a component of the kappa-side
// decomposition and one of the kappa_bar side (or Exc). Same-side pairs of
// horizontal components are rejected: the table only defines opposite
// embeddings.
Int pair_intersection(const CycleComponent& c1, const CycleComponent& c2, int64_t q);

// Z_{s,+-} . Z^Kra(y): (q^{b+1}-1)/(q-1) for b <= s,
// (q^s-1)/(q-1) + (b+1-s) q^s for b >= s; the branches agree at b = s.
Int z_dot_special(int64_t q, int s, int b);

struct IntersectionReport {
    int64_t q = 0;
    int a = 0, b = 0;
    std::vector<CycleComponent> components_x, components_y;
    // (index into components_x, index into components_y) -> single-pair number
    std::map<std::pair<int, int>, Int> pair_table;
    Int I, II, III, total;
};

// Builds the full pair table, the I/II/III subtotals, and checks
// total = mu_q(q,a,b); a mismatch throws (formula transcription bug).
IntersectionReport assemble_intersection(int64_t q, int a, int b);

// Lifting length n_{0,s}(psi) normalized by e_s/e, for l = l_{0,s}(psi):
//   (q^{l+1}-1)/(q-1)                 if l < s
//   (q^s-1)/(q-1) + (l+1-s) q^s       if l >= s   (using e_s = 2 q^s)
Rat lifting_length(int64_t q, int s, int l);

// Same quantity through the inductive scheme: the n_{r,r} three-branch
// formula, the step n_{r,s+1}(pi psi) = n_{r,s}(psi) + e/e_{s+1}, and the
// base case n_{r,s} = (1/2)(e/e_s) e_r for l = 0, s >= 2r. Throws outside
// the induction's reach (l = 0 with r < s < 2r).
Rat lifting_length_inductive(int64_t q, int r, int s, int l);

}  // namespace hermloc
