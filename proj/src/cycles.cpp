#include "hermloc/cycles.hpp"

#include <stdexcept>

namespace hermloc {

namespace {
Int int_pow(int64_t q, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= q;
    return r;
}
}  // namespace

Int mu_q(int64_t q, int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("mu_q: a, b >= 0 required");
    Int r = 0;
    for (int s = 0; s <= std::min(a, b); ++s) r += int_pow(q, s) * (a + b + 1 - 2 * s);
    return 2 * r - a - b - 2;
}

std::string CycleComponent::str() const {
    std::string base;
    switch (kind) {
        case Kind::z0: base = "Z0"; break;
        case Kind::zs_plus: base = "Z" + std::to_string(s) + "+"; break;
        case Kind::zs_minus: base = "Z" + std::to_string(s) + "-"; break;
        case Kind::exc: return "Exc(x" + std::to_string(multiplicity) + ")";
    }
    if (side == Side::kappa_bar) base += "~";
    if (multiplicity != 1) base += "(x" + std::to_string(multiplicity) + ")";
    return base;
}

std::vector<CycleComponent> decompose_special_cycle(int a, Side side) {
    if (a < 0) throw std::invalid_argument("decompose_special_cycle: a >= 0 required");
    std::vector<CycleComponent> out;
    out.push_back({CycleComponent::Kind::z0, side, 0, 1});
    for (int s = 1; s <= a; ++s) out.push_back({CycleComponent::Kind::zs_plus, side, s, 1});
    for (int s = 1; s <= a; ++s) out.push_back({CycleComponent::Kind::zs_minus, side, s, 1});
    out.push_back({CycleComponent::Kind::exc, side, 0, a + 1});
    return out;
}

Int pair_intersection(const CycleComponent& c1, const CycleComponent& c2, int64_t q) {
    bool e1 = c1.kind == CycleComponent::Kind::exc, e2 = c2.kind == CycleComponent::Kind::exc;
    if (e1 && e2) return -2;
    if (e1 || e2) return 1;  // Z_{s,+-} . Exc = Z_0 . Exc = 1
    if (c1.side == c2.side)
        throw std::invalid_argument(
            "pair_intersection: horizontal components of the same embedding are not in the table");
    // Z0 pairs with everything horizontal on the other side trivially:
    // Z0 . Z0~ = 0 and the corollary at level 0 gives q^0 - 1 = 0.
    bool plus1 = c1.kind == CycleComponent::Kind::zs_plus || c1.kind == CycleComponent::Kind::z0;
    bool minus1 = c1.kind == CycleComponent::Kind::zs_minus || c1.kind == CycleComponent::Kind::z0;
    bool plus2 = c2.kind == CycleComponent::Kind::zs_plus || c2.kind == CycleComponent::Kind::z0;
    bool minus2 = c2.kind == CycleComponent::Kind::zs_minus || c2.kind == CycleComponent::Kind::z0;
    if ((plus1 && plus2) || (minus1 && minus2))
        return int_pow(q, std::min(c1.s, c2.s)) - 1;
    return 0;  // opposite signs never meet
}

Int z_dot_special(int64_t q, int s, int b) {
    if (s < 0 || b < 0) throw std::invalid_argument("z_dot_special: s, b >= 0 required");
    if (b <= s) return (int_pow(q, b + 1) - 1) / (q - 1);
    return (int_pow(q, s) - 1) / (q - 1) + Int(b + 1 - s) * int_pow(q, s);
}

IntersectionReport assemble_intersection(int64_t q, int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("assemble_intersection: a, b >= 0 required");
    IntersectionReport rep;
    rep.q = q;
    rep.a = a;
    rep.b = b;
    rep.components_x = decompose_special_cycle(a, Side::kappa);
    rep.components_y = decompose_special_cycle(b, Side::kappa_bar);

    rep.I = rep.II = rep.III = 0;
    for (size_t i = 0; i < rep.components_x.size(); ++i) {
        for (size_t j = 0; j < rep.components_y.size(); ++j) {
            const CycleComponent& cx = rep.components_x[i];
            const CycleComponent& cy = rep.components_y[j];
            Int v = pair_intersection(cx, cy, q);
            rep.pair_table[{static_cast<int>(i), static_cast<int>(j)}] = v;
            Int contrib = v * cx.multiplicity * cy.multiplicity;
            bool ex = cx.kind == CycleComponent::Kind::exc;
            bool ey = cy.kind == CycleComponent::Kind::exc;
            if (ex && ey)
                rep.I += contrib;
            else if (ex || ey)
                rep.II += contrib;
            else
                rep.III += contrib;
        }
    }
    rep.total = rep.I + rep.II + rep.III;
    if (rep.total != mu_q(q, a, b))
        throw std::logic_error("assemble_intersection: I+II+III != mu_q (transcription bug)");
    return rep;
}

Rat lifting_length(int64_t q, int s, int l) {
    if (s < 0 || l < 0) throw std::invalid_argument("lifting_length: s, l >= 0 required");
    if (l < s) return Rat(int_pow(q, l + 1) - 1, Int(q - 1));
    // (q^s-1)/(q-1) + (1/2)(l+1-s) e_s with e_s = 2 q^s
    return Rat(int_pow(q, s) - 1, Int(q - 1)) + Rat(l + 1 - s) * int_pow(q, s);
}

namespace {

// The bracket of the n_{r,r} formula (the e/e_r factor stripped).
Rat n_rr_bracket(int64_t q, int r, int l) {
    Rat qp1_over_qm1 = Rat(Int(q + 1), Int(q - 1));
    if (l <= 2 * r && l % 2 == 0)
        return (rat_pow(q, l / 2) - 1) * qp1_over_qm1 + 1;
    if (l <= 2 * r)
        return (rat_pow(q, (l - 1) / 2) - 1) * qp1_over_qm1 + rat_pow(q, (l - 1) / 2) + 1;
    // l >= 2r - 1, with e_r = 2 q^r
    return (rat_pow(q, r - 1) - 1) * qp1_over_qm1 + rat_pow(q, r - 1) +
           (Rat(l + 1) / 2 - r) * 2 * rat_pow(q, r) + 1;
}

}  // namespace

Rat lifting_length_inductive(int64_t q, int r, int s, int l) {
    if (r < 0 || s < r || l < 0)
        throw std::invalid_argument("lifting_length_inductive: need 0 <= r <= s, l >= 0");
    if (s == r) return n_rr_bracket(q, r, l);
    if (l == 0) {
        if (s < 2 * r)
            throw std::invalid_argument(
                "lifting_length_inductive: l = 0 with r < s < 2r is outside the induction");
        // (1/2)(e/e_s) e_r, normalized by e_s/e
        return rat_pow(q, r);
    }
    // n_{r,s}(pi psi') = n_{r,s-1}(psi') + e/e_s; normalized: q * prev + 1.
    return Rat(q) * lifting_length_inductive(q, r, s - 1, l - 1) + 1;
}

}  // namespace hermloc
