#include "hermloc/local_ring.hpp"

#include <sstream>

namespace hermloc {

uint64_t pow_u64(uint64_t base, int e) {
    uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > UINT64_MAX / base) throw std::overflow_error("pow_u64 overflow");
        r *= base;
    }
    return r;
}

int chi_bar(int64_t u, int64_t p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("chi_bar: p must be an odd prime");
    int64_t a = u % p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    // Euler's criterion: a^{(p-1)/2} mod p.
    uint64_t r = 1, b = static_cast<uint64_t>(a), e = static_cast<uint64_t>((p - 1) / 2);
    while (e) {
        if (e & 1) r = (unsigned __int128)r * b % p;
        b = (unsigned __int128)b * b % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

int64_t LocalField::u0() const {
    if (u0_class == Pi0Unit::plus_one) return 1;
    for (int64_t c = 2; c < p; ++c)
        if (chi_bar(c, p) == -1) return c;
    throw std::logic_error("no nonresidue found");
}

int chi_unit(int64_t u, const LocalField& fld) {
    int c = chi_bar(u, fld.p);
    if (c == 0) throw std::invalid_argument("chi_unit: argument is not a unit");
    return c;
}

int chi_general(int64_t unit_lift, int val_pi, const LocalField& fld) {
    if (val_pi % 2 != 0)
        throw std::invalid_argument("chi_general: odd pi-valuation, element not in F_0");
    // x = u * w0^{val/2} with chi(w0) = chi(Nm(pi)) = +1.
    return chi_unit(unit_lift, fld);
}

RamifiedElement::RamifiedElement(const LocalField& fld, int prec, int64_t a, int64_t b)
    : fld_(fld), prec_(prec) {
    if (prec < 1) throw std::invalid_argument("RamifiedElement: precision must be >= 1");
    mod_ = pow_u64(static_cast<uint64_t>(fld.p), prec);
    int64_t m = static_cast<int64_t>(mod_);
    a_ = static_cast<uint64_t>(((a % m) + m) % m);
    b_ = static_cast<uint64_t>(((b % m) + m) % m);
}

RamifiedElement RamifiedElement::zero(const LocalField& fld, int prec) {
    return RamifiedElement(fld, prec, 0, 0);
}
RamifiedElement RamifiedElement::one(const LocalField& fld, int prec) {
    return RamifiedElement(fld, prec, 1, 0);
}
RamifiedElement RamifiedElement::pi(const LocalField& fld, int prec) {
    return RamifiedElement(fld, prec, 0, 1);
}
RamifiedElement RamifiedElement::from_int(const LocalField& fld, int prec, int64_t a) {
    return RamifiedElement(fld, prec, a, 0);
}

void RamifiedElement::check_same(const RamifiedElement& o) const {
    if (!(fld_ == o.fld_)) throw std::invalid_argument("operands over different fields");
}

RamifiedElement RamifiedElement::conj() const {
    RamifiedElement r = *this;
    if (r.b_ != 0) r.b_ = r.mod_ - r.b_;
    return r;
}

RamifiedElement RamifiedElement::neg() const {
    RamifiedElement r = *this;
    if (r.a_ != 0) r.a_ = r.mod_ - r.a_;
    if (r.b_ != 0) r.b_ = r.mod_ - r.b_;
    return r;
}

RamifiedElement operator+(const RamifiedElement& x, const RamifiedElement& y) {
    x.check_same(y);
    int prec = std::min(x.prec_, y.prec_);
    RamifiedElement a = x.truncate(prec), b = y.truncate(prec);
    a.a_ = (a.a_ + b.a_) % a.mod_;
    a.b_ = (a.b_ + b.b_) % a.mod_;
    return a;
}

RamifiedElement operator-(const RamifiedElement& x, const RamifiedElement& y) {
    return x + y.neg();
}

RamifiedElement operator*(const RamifiedElement& x, const RamifiedElement& y) {
    x.check_same(y);
    int prec = std::min(x.prec_, y.prec_);
    RamifiedElement a = x.truncate(prec), b = y.truncate(prec);
    // (a1 + b1 pi)(a2 + b2 pi) = (a1 a2 + pi0 b1 b2) + (a1 b2 + b1 a2) pi,
    // pi0 = u0 * p.
    unsigned __int128 m = a.mod_;
    unsigned __int128 pi0 = (unsigned __int128)(a.fld_.u0()) * (unsigned __int128)a.fld_.p % m;
    uint64_t na = (uint64_t)(((unsigned __int128)a.a_ * b.a_ + pi0 % m * ((unsigned __int128)a.b_ * b.b_ % m)) % m);
    uint64_t nb = (uint64_t)(((unsigned __int128)a.a_ * b.b_ + (unsigned __int128)a.b_ * b.a_) % m);
    a.a_ = na;
    a.b_ = nb;
    return a;
}

bool RamifiedElement::operator==(const RamifiedElement& o) const {
    check_same(o);
    int prec = std::min(prec_, o.prec_);
    RamifiedElement a = truncate(prec), b = o.truncate(prec);
    return a.a_ == b.a_ && a.b_ == b.b_;
}

RamifiedElement RamifiedElement::norm() const { return *this * conj(); }

static int p_valuation(uint64_t x, uint64_t p, int cap) {
    if (x == 0) return cap;
    int v = 0;
    while (v < cap && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

std::optional<int> RamifiedElement::val_pi_opt() const {
    uint64_t p = static_cast<uint64_t>(fld_.p);
    int va = 2 * p_valuation(a_, p, prec_);          // val of the F0 part
    int vb = 2 * p_valuation(b_, p, prec_) + 1;      // val of the pi-odd part
    int v = std::min(va, vb);
    if (v >= 2 * prec_) return std::nullopt;  // zero at working precision
    return v;
}

int RamifiedElement::val_pi() const {
    auto v = val_pi_opt();
    if (!v)
        throw precision_error("val_pi: element indistinguishable from 0 at precision M=" +
                              std::to_string(prec_));
    return *v;
}

RamifiedElement RamifiedElement::truncate(int new_prec) const {
    if (new_prec == prec_) return *this;
    if (new_prec > prec_) throw std::invalid_argument("truncate: cannot raise precision");
    if (new_prec < 1) throw precision_error("truncate: precision exhausted");
    RamifiedElement r(fld_, new_prec, 0, 0);
    r.a_ = a_ % r.mod_;
    r.b_ = b_ % r.mod_;
    return r;
}

RamifiedElement RamifiedElement::mul_pi(int k) const {
    if (k < 0) return div_pi(-k);
    RamifiedElement r = *this;
    RamifiedElement piel = RamifiedElement::pi(fld_, prec_);
    for (int i = 0; i < k; ++i) r = r * piel;
    return r;
}

// Inverse of a unit of Z/p^M via Euler: u^{phi(p^M)-1}.
static uint64_t inv_mod_pk(uint64_t u, uint64_t p, uint64_t mod) {
    uint64_t inv = 1, base = u % mod, e = mod / p * (p - 1) - 1;
    while (e) {
        if (e & 1) inv = (unsigned __int128)inv * base % mod;
        base = (unsigned __int128)base * base % mod;
        e >>= 1;
    }
    return inv;
}

RamifiedElement RamifiedElement::div_pi(int k) const {
    if (k < 0) return mul_pi(-k);
    RamifiedElement r = *this;
    uint64_t p = static_cast<uint64_t>(fld_.p);
    // pi^2 = pi0 = u0 p exactly, so pairs of pi-divisions are pi0-divisions
    // and cost one pi0-digit each instead of two.
    for (int i = 0; i < k / 2; ++i) {
        if (r.a_ % p != 0 || r.b_ % p != 0)
            throw std::invalid_argument("div_pi: not divisible by pi0");
        uint64_t u0inv = inv_mod_pk(static_cast<uint64_t>(r.fld_.u0()) % r.mod_, p, r.mod_);
        RamifiedElement out(r.fld_, r.prec_, 0, 0);
        out.a_ = (unsigned __int128)(r.a_ / p) * u0inv % r.mod_;
        out.b_ = (unsigned __int128)(r.b_ / p) * u0inv % r.mod_;
        r = out.truncate(r.prec_ - 1);
    }
    if (k % 2) {
        // (a + b pi)/pi = b + (a / pi0) pi; requires pi0 | a.
        if (r.a_ % p != 0) throw std::invalid_argument("div_pi: not divisible by pi");
        uint64_t u0inv = inv_mod_pk(static_cast<uint64_t>(r.fld_.u0()) % r.mod_, p, r.mod_);
        uint64_t new_b = (unsigned __int128)(r.a_ / p) * u0inv % r.mod_;
        RamifiedElement out(r.fld_, r.prec_, 0, 0);
        out.a_ = r.b_;
        out.b_ = new_b;
        r = out.truncate(r.prec_ - 1);
    }
    return r;
}

RamifiedElement RamifiedElement::inverse() const {
    auto v = val_pi_opt();
    if (!v || *v != 0) throw std::invalid_argument("inverse: not a unit");
    // 1/(a + b pi) = (a - b pi) / (a^2 - pi0 b^2); the norm is a unit of Z/p^M.
    RamifiedElement nm = norm();
    uint64_t p = static_cast<uint64_t>(fld_.p);
    uint64_t inv = inv_mod_pk(nm.a_, p, mod_);
    RamifiedElement r = conj();
    r.a_ = (unsigned __int128)r.a_ * inv % mod_;
    r.b_ = (unsigned __int128)r.b_ * inv % mod_;
    return r;
}

int64_t RamifiedElement::f0_unit_class_w0(int val) const {
    RamifiedElement u = div_pi(val);
    if (u.b_ % static_cast<uint64_t>(fld_.p) != 0)
        throw std::invalid_argument("f0_unit_class_w0: element not in F_0 after shift");
    if (val % 2 != 0) throw std::invalid_argument("f0_unit_class_w0: odd valuation");
    // x = a * pi0^{val/2} = a * (-1)^{val/2} * w0^{val/2}.
    int64_t cls = static_cast<int64_t>(u.a_ % static_cast<uint64_t>(fld_.p));
    if ((val / 2) % 2 != 0) cls = fld_.p - cls;
    return cls % fld_.p;
}

std::string RamifiedElement::str() const {
    std::ostringstream os;
    os << a_ << "+" << b_ << "*pi (mod pi^" << 2 * prec_ << ")";
    return os.str();
}

GaussNumber operator+(const GaussNumber& x, const GaussNumber& y) {
    if (x.q != y.q) throw std::invalid_argument("GaussNumber: mixed q");
    return GaussNumber(x.q, x.r + y.r, x.s + y.s);
}

GaussNumber operator-(const GaussNumber& x, const GaussNumber& y) {
    if (x.q != y.q) throw std::invalid_argument("GaussNumber: mixed q");
    return GaussNumber(x.q, x.r - y.r, x.s - y.s);
}

GaussNumber operator*(const GaussNumber& x, const GaussNumber& y) {
    if (x.q != y.q) throw std::invalid_argument("GaussNumber: mixed q");
    Rat g2 = Rat(x.q) * chi_bar_minus_one(x.q);
    return GaussNumber(x.q, x.r * y.r + x.s * y.s * g2, x.r * y.s + x.s * y.r);
}

std::string GaussNumber::str() const {
    if (s == 0) return rat_str(r);
    return rat_str(r) + " + (" + rat_str(s) + ")*g";
}

}  // namespace hermloc
