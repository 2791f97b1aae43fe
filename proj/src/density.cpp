#include "hermloc/density.hpp"

#include <sstream>

namespace hermloc {

DensityPolynomial::DensityPolynomial(int64_t q, std::vector<Rat> coeffs)
    : q_(q), coeffs_(std::move(coeffs)) {
    trim();
}

void DensityPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat DensityPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[k];
}

void DensityPolynomial::add_term(int k, const Rat& c) {
    if (k < 0) throw std::invalid_argument("add_term: negative exponent");
    if (k >= static_cast<int>(coeffs_.size())) coeffs_.resize(k + 1, Rat(0));
    coeffs_[k] += c;
    trim();
}

Rat DensityPolynomial::eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

Rat DensityPolynomial::derivative_at_one() const {
    Rat r = 0;
    for (size_t k = 1; k < coeffs_.size(); ++k) r += Rat(k) * coeffs_[k];
    return r;
}

DensityPolynomial operator+(const DensityPolynomial& x, const DensityPolynomial& y) {
    if (x.q_ != y.q_) throw std::invalid_argument("polynomial q mismatch");
    DensityPolynomial r(x.q_);
    r.coeffs_.resize(std::max(x.coeffs_.size(), y.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < x.coeffs_.size(); ++i) r.coeffs_[i] += x.coeffs_[i];
    for (size_t i = 0; i < y.coeffs_.size(); ++i) r.coeffs_[i] += y.coeffs_[i];
    r.trim();
    return r;
}

DensityPolynomial operator-(const DensityPolynomial& x, const DensityPolynomial& y) {
    return x + y * Rat(-1);
}

DensityPolynomial operator*(const DensityPolynomial& x, const DensityPolynomial& y) {
    if (x.q_ != y.q_) throw std::invalid_argument("polynomial q mismatch");
    DensityPolynomial r(x.q_);
    if (x.coeffs_.empty() || y.coeffs_.empty()) return r;
    r.coeffs_.assign(x.coeffs_.size() + y.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < x.coeffs_.size(); ++i)
        for (size_t j = 0; j < y.coeffs_.size(); ++j) r.coeffs_[i + j] += x.coeffs_[i] * y.coeffs_[j];
    r.trim();
    return r;
}

DensityPolynomial DensityPolynomial::operator*(const Rat& c) const {
    DensityPolynomial r(q_);
    if (c == 0) return r;
    r.coeffs_ = coeffs_;
    for (auto& v : r.coeffs_) v *= c;
    return r;
}

DensityPolynomial DensityPolynomial::divide_exact(const DensityPolynomial& d) const {
    if (q_ != d.q_) throw std::invalid_argument("polynomial q mismatch");
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    DensityPolynomial rem = *this, quot(q_);
    quot.coeffs_.assign(coeffs_.size(), Rat(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int k = rem.degree() - d.degree();
        Rat c = rem.coeffs_.back() / d.coeffs_.back();
        quot.coeffs_[k] = c;
        DensityPolynomial shift(q_);
        shift.coeffs_.assign(k + 1, Rat(0));
        shift.coeffs_[k] = c;
        rem = rem - shift * d;
    }
    if (!rem.is_zero()) throw std::invalid_argument("divide_exact: nonzero remainder");
    quot.trim();
    return quot;
}

std::string DensityPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        Rat c = coeffs_[k];
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        bool unit = (c == 1 && k > 0);
        if (!unit) os << rat_str(c);
        if (k > 0) {
            if (!unit) os << "*";
            os << "X";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

std::string stype_name(SType s) {
    switch (s) {
        case SType::split: return "split";
        case SType::nonsplit: return "nonsplit";
        case SType::hyperbolic: return "hyperbolic";
    }
    throw std::logic_error("unreachable");
}

namespace {

// sum_{e=lo}^{hi} c * q^{qa*e+qb} X^{e+xs}
void add_geom(DensityPolynomial& P, int64_t q, int lo, int hi, const Rat& c, int qa, int qb,
              int xs) {
    for (int e = lo; e <= hi; ++e) P.add_term(e + xs, c * rat_pow(q, qa * e + qb));
}

// Formula 1: S = Diag{v,1}, T diagonal with invariants (a, b, eps1), eps2 = chi(-v).
DensityPolynomial alpha_diag_unimodular(int64_t q, int a, int b, int eps1, int eps2) {
    DensityPolynomial P(q);
    // (1 - X)(1 + eps2 + q eps2) sum_{e=0}^{b} (qX)^e
    Rat c0 = Rat(1) + eps2 + Rat(q) * eps2;
    add_geom(P, q, 0, b, c0, 1, 0, 0);
    add_geom(P, q, 0, b, -c0, 1, 0, 1);
    // - eps1 q^{b+1} X^{a+1} (1 - X) sum_{e=0}^{b} (q^{-1}X)^e
    add_geom(P, q, 0, b, Rat(-eps1), -1, b + 1, a + 1);
    add_geom(P, q, 0, b, Rat(eps1), -1, b + 1, a + 2);
    // - eps1 (1+q) (X^{a+b+2} + eps1 eps2)
    P.add_term(a + b + 2, Rat(-eps1) * (1 + q));
    P.add_term(0, Rat(-eps2) * (1 + q));
    // + (1 + eps2) q^{b+1} X^{b+1} (1 + eps1 X^{a-b})
    P.add_term(b + 1, Rat(1 + eps2) * rat_pow(q, b + 1));
    P.add_term(a + 1, Rat(1 + eps2) * Rat(eps1) * rat_pow(q, b + 1));
    return P;
}

// Formula 3: S = Diag{v,1}, T antidiagonal with exponent 2a-1.
DensityPolynomial alpha_anti_unimodular(int64_t q, int a, int eps2) {
    DensityPolynomial P(q);
    Rat c0 = Rat(1) + eps2 + Rat(q) * eps2;
    add_geom(P, q, 0, a, c0, 1, 0, 0);
    add_geom(P, q, 0, a, -c0, 1, 0, 1);
    // - q^{2a+1}(1-X) sum_{e=a+1}^{2a} (q^{-1}X)^e
    add_geom(P, q, a + 1, 2 * a, Rat(-1), -1, 2 * a + 1, 0);
    add_geom(P, q, a + 1, 2 * a, Rat(1), -1, 2 * a + 1, 1);
    // - (q+1)(X^{2a+1} + eps2) + (q+1)(1+eps2) q^a X^{a+1}
    P.add_term(2 * a + 1, Rat(-(q + 1)));
    P.add_term(0, Rat(-eps2) * (q + 1));
    P.add_term(a + 1, Rat(q + 1) * (1 + eps2) * rat_pow(q, a));
    return P;
}

bool invariant_nonnegative(const CanonicalForm& T) {
    auto [s, t] = fundamental_invariant(T);
    return s >= 0 && t >= 0;
}

}  // namespace

DensityPolynomial mu_helper(int64_t q, int a, int b) {
    DensityPolynomial P(q);
    if (b < 0) return P;
    if (a < b) throw std::invalid_argument("mu_helper: requires a >= b");
    add_geom(P, q, 0, b, Rat(1), 1, 0, 0);
    add_geom(P, q, a + 1, a + b + 1, Rat(-1), -1, a + b + 1, 0);
    return P;
}

DensityPolynomial nu_helper(int64_t q, int s, int t) {
    DensityPolynomial P(q);
    if (t < 0) return P;
    if (s < t) throw std::invalid_argument("nu_helper: requires s >= t");
    if (s % 2 == 1 && t % 2 == 1) {
        int a = (s - 1) / 2, b = (t - 1) / 2;
        add_geom(P, q, 0, b, Rat(1), 1, 0, 0);
        add_geom(P, q, a + 1, a + b + 1, Rat(1), -1, a + b + 1, 0);
        return P;
    }
    if (s == t && s % 2 == 0) {
        int a = s / 2;
        add_geom(P, q, 0, a, Rat(1), 1, 0, 0);
        add_geom(P, q, a + 1, 2 * a, Rat(1), -1, 2 * a, 0);
        return P;
    }
    throw std::invalid_argument("nu_helper: invalid invariant pair");
}

DensityPolynomial alpha_poly(int64_t q, const CanonicalForm& T, SType s) {
    if (q < 3) throw std::invalid_argument("alpha_poly: q must be >= 3");
    if (!invariant_nonnegative(T)) return DensityPolynomial(q);
    DensityPolynomial one_minus(q, {Rat(1), Rat(Int(-1), Int(q) * q)});  // 1 - q^{-2} X
    if (T.is_diagonal()) {
        if (T.b > T.a || T.b < 0) throw std::invalid_argument("alpha_poly: need a >= b >= 0");
        if (s == SType::hyperbolic) {
            int eps = chi_of(T);
            DensityPolynomial inner =
                eps == -1 ? mu_helper(q, T.a, T.b)
                          : nu_helper(q, 2 * T.a + 1, 2 * T.b + 1);
            return one_minus * inner;
        }
        return alpha_diag_unimodular(q, T.a, T.b, T.eps1, hasse_sign(s));
    }
    if (T.a < 0) throw std::invalid_argument("alpha_poly: need a >= 0");
    if (s == SType::hyperbolic) return one_minus * nu_helper(q, 2 * T.a, 2 * T.a);
    return alpha_anti_unimodular(q, T.a, hasse_sign(s));
}

Rat alpha_value_at_one(int64_t q, const CanonicalForm& T, SType s) {
    return alpha_poly(q, T, s).eval(1);
}

Rat alpha_prime(int64_t q, const CanonicalForm& T) {
    return -alpha_poly(q, T, SType::split).derivative_at_one();
}

Rat alpha_prime_closed(int64_t q, int a, int b) {
    if (b > a || b < 0) throw std::invalid_argument("alpha_prime_closed: need a >= b >= 0");
    Rat r = Rat(2) * rat_pow(q, b + 1) * (a - b + 1);
    for (int s = 1; s <= b; ++s) r += Rat(4) * rat_pow(q, s);
    r -= Rat(2) * q;
    r -= Rat(q + 1) * (a + b);
    return r;
}

DensityPolynomial beta_poly_H(int64_t q, const CanonicalForm& T) {
    DensityPolynomial one_minus(q, {Rat(1), Rat(Int(-1), Int(q) * q)});
    bool is_H = !T.is_diagonal() && T.a == 0;
    if (is_H) return one_minus;
    return DensityPolynomial(q, {Rat(1), Rat(-1)}) * one_minus;
}

std::vector<std::pair<CanonicalForm, int>> coset_transform_classes(const CanonicalForm& T,
                                                                   int64_t q) {
    int nq = static_cast<int>(q);
    std::vector<std::pair<CanonicalForm, int>> out;
    if (T.is_diagonal()) {
        if (T.a > T.b) {
            // gamma_inf lowers the larger exponent, each gamma_x the smaller.
            out.push_back({CanonicalForm::diag(T.a - 1, T.b, T.eps1), 1});
            out.push_back({CanonicalForm{CanonicalForm::Kind::diagonal, T.a, T.b - 1, T.eps1}, nq});
        } else if (T.eps1 == -1) {
            // a = b, anisotropic: all q+1 cosets land on invariant (2a+1, 2a-1).
            out.push_back({CanonicalForm{CanonicalForm::Kind::diagonal, T.a, T.a - 1, -1}, nq + 1});
        } else {
            // a = b, isotropic (the even antidiagonal class): gamma_inf and
            // gamma_0 land on (2a, 2a), the other q-1 on (2a+1, 2a-1).
            out.push_back({CanonicalForm::anti(T.a), 2});
            out.push_back({CanonicalForm{CanonicalForm::Kind::diagonal, T.a, T.a - 1, 1}, nq - 1});
        }
    } else {
        // invariant (2a, 2a): all q+1 cosets land on (2a-1, 2a-1), chi = +1.
        out.push_back({CanonicalForm{CanonicalForm::Kind::diagonal, T.a - 1, T.a - 1, 1}, nq + 1});
    }
    return out;
}

CanonicalForm scale_down_class(const CanonicalForm& T) {
    if (T.is_diagonal())
        return CanonicalForm{CanonicalForm::Kind::diagonal, T.a - 1, T.b - 1, T.eps1};
    return CanonicalForm::anti(T.a - 1);
}

}  // namespace hermloc
