#pragma once

// Exact arithmetic in O_F / pi^N for the ramified quadratic extension
// F = F_0(pi), pi^2 = pi0 = u0*p, F_0 = Q_p with p an odd prime.
// Elements are written a + b*pi with a, b residues mod p^M; conjugation
// sends pi to -pi. The second uniformizer w0 := -pi0 = Nm(pi) is the one
// all unit-class bookkeeping is relative to, so chi(w0) = +1.

#include "hermloc/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace hermloc {

struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Legendre symbol of u mod p (p an odd prime); 0 iff u = 0 mod p.
int chi_bar(int64_t u, int64_t p);

// chi_bar(-1) over F_q: +1 iff q = 1 mod 4. Valid for any odd prime power q.
inline int chi_bar_minus_one(int64_t q) { return q % 4 == 1 ? 1 : -1; }

enum class Pi0Unit { plus_one, nonresidue };

struct LocalField {
    int64_t p = 3;
    Pi0Unit u0_class = Pi0Unit::plus_one;

    // Concrete integer representative of u0 (1, or the smallest nonresidue mod p).
    int64_t u0() const;

    bool operator==(const LocalField&) const = default;
};

// chi on units of O_{F_0}: unit norms of the ramified extension are exactly
// the unit squares (p odd), so chi restricted to units is the Legendre symbol.
int chi_unit(int64_t u, const LocalField& fld);

// chi on nonzero x in F_0^x given as (unit lift, pi-valuation). Uses
// chi(w0) = +1; odd pi-valuation (x not in F_0) is rejected.
int chi_general(int64_t unit_lift, int val_pi, const LocalField& fld);

class RamifiedElement {
public:
    RamifiedElement() = default;
    // value = a + b*pi at pi0-adic precision M (i.e. mod pi^{2M}).
    RamifiedElement(const LocalField& fld, int prec, int64_t a, int64_t b);

    static RamifiedElement zero(const LocalField& fld, int prec);
    static RamifiedElement one(const LocalField& fld, int prec);
    static RamifiedElement pi(const LocalField& fld, int prec);
    static RamifiedElement from_int(const LocalField& fld, int prec, int64_t a);

    const LocalField& field() const { return fld_; }
    int prec() const { return prec_; }
    uint64_t part_f0() const { return a_; }
    uint64_t part_pi() const { return b_; }

    RamifiedElement conj() const;
    RamifiedElement neg() const;

    friend RamifiedElement operator+(const RamifiedElement&, const RamifiedElement&);
    friend RamifiedElement operator-(const RamifiedElement&, const RamifiedElement&);
    friend RamifiedElement operator*(const RamifiedElement&, const RamifiedElement&);
    bool operator==(const RamifiedElement& o) const;

    // Nm(x) = x * conj(x) = a^2 - pi0 b^2; the result has zero pi-odd part.
    RamifiedElement norm() const;

    // True iff the element is 0 at working precision (both residues vanish).
    bool is_zero_at_prec() const { return a_ == 0 && b_ == 0; }

    // pi-adic valuation. nullopt when indistinguishable from 0 at precision
    // (caller decides whether that is an error; val_pi() throws).
    std::optional<int> val_pi_opt() const;
    int val_pi() const;

    // x / pi^k for exact division (val >= k required); costs ceil(k/2)
    // pi0-digits of precision.
    RamifiedElement div_pi(int k) const;
    RamifiedElement mul_pi(int k) const;

    // Inverse of a unit (val_pi = 0).
    RamifiedElement inverse() const;

    // Drop to a lower precision.
    RamifiedElement truncate(int new_prec) const;

    // Unit class of x relative to w0 = -pi0: writes x = u * w0^{val}
    // ... for x in F_0 (b-part of x / pi^{val} must vanish); returns the
    // residue of u mod p. Used for chi evaluations and canonical forms.
    int64_t f0_unit_class_w0(int val) const;

    std::string str() const;

private:
    LocalField fld_;
    int prec_ = 0;
    uint64_t mod_ = 1;  // p^prec
    uint64_t a_ = 0, b_ = 0;

    void check_same(const RamifiedElement& o) const;
};

// r + s*g where g is the formal Gauss sum, g^2 = q * chi_bar(-1).
struct GaussNumber {
    int64_t q = 3;
    Rat r = 0, s = 0;

    GaussNumber() = default;
    GaussNumber(int64_t q_, Rat r_, Rat s_ = 0) : q(q_), r(std::move(r_)), s(std::move(s_)) {}

    static GaussNumber g(int64_t q) { return GaussNumber(q, 0, 1); }

    bool is_rational() const { return s == 0; }

    friend GaussNumber operator+(const GaussNumber& x, const GaussNumber& y);
    friend GaussNumber operator-(const GaussNumber& x, const GaussNumber& y);
    friend GaussNumber operator*(const GaussNumber& x, const GaussNumber& y);
    bool operator==(const GaussNumber& o) const { return q == o.q && r == o.r && s == o.s; }

    std::string str() const;
};

uint64_t pow_u64(uint64_t base, int e);

}  // namespace hermloc
