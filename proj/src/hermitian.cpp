#include "hermloc/hermitian.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hermloc {

void GramEntry::reduce() {
    if (den == 0) return;
    auto v = num.val_pi_opt();
    if (!v) {
        // zero at precision: trade the denominator against the precision
        // budget so later alignments are not inflated by a junk den.
        int cost = (den + 1) / 2;
        if (num.prec() - cost < 1)
            throw precision_error("GramEntry::reduce: zero entry with no precision left");
        num = num.truncate(num.prec() - cost);
        den = 0;
        return;
    }
    if (den < 2) return;
    // Cancel pi0 factors only: a pi0-division is free in value precision
    // (one pi0-digit of the residues buys two pi-digits of denominator),
    // while a lone pi-division costs a digit. Odd denominators stay.
    int k = std::min(den, *v);
    k -= k % 2;
    if (k > 0) {
        num = num.div_pi(k);
        den -= k;
    }
}

GramMatrix::GramMatrix(const LocalField& fld, int n, int prec) : fld_(fld), n_(n), prec_(prec) {
    if (n < 1 || n > 4) throw std::invalid_argument("GramMatrix: rank must be 1..4");
    e_.assign(n * n, GramEntry{RamifiedElement::zero(fld, prec), 0});
}

void GramMatrix::set(int i, int j, const RamifiedElement& num, int den) {
    if (den < 0) throw std::invalid_argument("GramMatrix::set: negative denominator");
    e_[i * n_ + j] = GramEntry{num, den};
    // conj(num / pi^den) = conj(num) (-1)^den / pi^den since conj(pi) = -pi
    if (i != j)
        e_[j * n_ + i] = GramEntry{den % 2 ? num.conj().neg() : num.conj(), den};
}

GramMatrix GramMatrix::diag_w0(const LocalField& fld, int prec,
                               const std::vector<std::pair<int64_t, int>>& units_exps) {
    GramMatrix T(fld, static_cast<int>(units_exps.size()), prec);
    for (size_t i = 0; i < units_exps.size(); ++i) {
        auto [u, a] = units_exps[i];
        // u * w0^a = u * (-pi0)^a
        RamifiedElement v = RamifiedElement::from_int(fld, prec, a % 2 == 0 ? u : -u);
        T.set(static_cast<int>(i), static_cast<int>(i), v.mul_pi(2 * a));
    }
    return T;
}

GramMatrix GramMatrix::antidiag(const LocalField& fld, int prec, int a) {
    GramMatrix T(fld, 2, prec);
    int e = 2 * a - 1;
    RamifiedElement num = RamifiedElement::pi(fld, prec);
    if (e >= 1)
        T.set(0, 1, num.mul_pi(e - 1), 0);
    else
        T.set(0, 1, num, 1 - e);  // pi^{e} = pi / pi^{1-e}
    return T;
}

GramMatrix GramMatrix::direct_sum(const GramMatrix& A, const GramMatrix& B) {
    if (!(A.fld_ == B.fld_)) throw std::invalid_argument("direct_sum: field mismatch");
    int prec = std::min(A.prec_, B.prec_);
    GramMatrix T(A.fld_, A.n_ + B.n_, prec);
    for (int i = 0; i < A.n_; ++i)
        for (int j = 0; j < A.n_; ++j)
            T.e_[i * T.n_ + j] = GramEntry{A.at(i, j).num.truncate(prec), A.at(i, j).den};
    for (int i = 0; i < B.n_; ++i)
        for (int j = 0; j < B.n_; ++j)
            T.e_[(A.n_ + i) * T.n_ + (A.n_ + j)] =
                GramEntry{B.at(i, j).num.truncate(prec), B.at(i, j).den};
    return T;
}

bool GramMatrix::is_hermitian_ok() const {
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            const GramEntry& a = at(i, j);
            const GramEntry& b = at(j, i);
            RamifiedElement ac = a.den % 2 ? a.num.conj().neg() : a.num.conj();
            if (a.den != b.den || !(ac == b.num)) return false;
        }
        // diagonal F0-valued: even-denominator part must carry no pi-odd slot
        const GramEntry& d = at(i, i);
        if (d.den % 2 == 0 && d.num.part_pi() != 0) return false;
        if (d.den % 2 == 1 && d.num.part_f0() != 0) return false;
    }
    return true;
}

int GramMatrix::max_den() const {
    int m = 0;
    for (const auto& x : e_) m = std::max(m, x.den);
    return m;
}

std::string GramMatrix::str() const { return gram_to_text(*this); }

std::array<RamifiedElement, 4> CosetRep::matrix(const LocalField& fld, int prec) const {
    RamifiedElement zero = RamifiedElement::zero(fld, prec);
    RamifiedElement one = RamifiedElement::one(fld, prec);
    RamifiedElement pi = RamifiedElement::pi(fld, prec);
    switch (label) {
        case Label::gamma_inf: return {pi, zero, zero, one};
        case Label::gamma_x: return {one, RamifiedElement::from_int(fld, prec, x), zero, pi};
        case Label::pi_pi: return {pi, zero, zero, pi};
    }
    throw std::logic_error("unreachable");
}

std::string CosetRep::str() const {
    switch (label) {
        case Label::gamma_inf: return "gamma_inf";
        case Label::gamma_x: return "gamma_" + std::to_string(x);
        case Label::pi_pi: return "diag(pi,pi)";
    }
    throw std::logic_error("unreachable");
}

std::vector<CosetRep> coset_reps(const LocalField& fld) {
    std::vector<CosetRep> r;
    r.push_back({CosetRep::Label::gamma_inf, 0});
    for (int64_t x = 0; x < fld.p; ++x) r.push_back({CosetRep::Label::gamma_x, x});
    r.push_back({CosetRep::Label::pi_pi, 0});
    return r;
}

namespace {

GramEntry entry_add(const GramEntry& x, const GramEntry& y) {
    int d = std::max(x.den, y.den);
    GramEntry r{x.num.mul_pi(d - x.den) + y.num.mul_pi(d - y.den), d};
    r.reduce();
    return r;
}

GramEntry entry_mul(const GramEntry& x, const GramEntry& y) {
    GramEntry r{x.num * y.num, x.den + y.den};
    r.reduce();
    return r;
}

GramEntry entry_neg(const GramEntry& x) { return GramEntry{x.num.neg(), x.den}; }

// conj(num / pi^den): conj(pi) = -pi flips the sign once per denominator power.
GramEntry entry_conj(const GramEntry& x) {
    return GramEntry{x.den % 2 ? x.num.conj().neg() : x.num.conj(), x.den};
}

// x / y for nonzero y.
GramEntry entry_div(const GramEntry& x, const GramEntry& y) {
    auto w = y.num.val_pi_opt();
    if (!w) throw precision_error("entry division by a value that is 0 at precision");
    if (!x.num.val_pi_opt()) {
        // x is 0 at precision: so is the quotient, at whatever precision the
        // division leaves. No need to run the division machinery on zeros.
        int lost = std::max(0, x.den + *w - y.den);
        int prec2 = x.num.prec() - (lost + 1) / 2;
        if (prec2 < 1) throw precision_error("entry_div: zero entry with no precision left");
        return GramEntry{RamifiedElement::zero(x.num.field(), prec2), 0};
    }
    RamifiedElement unit = y.num.div_pi(*w);
    GramEntry r{x.num * unit.inverse(), x.den - y.den + *w};
    if (r.den < 0) {
        r.num = r.num.mul_pi(-r.den);
        r.den = 0;
    }
    r.reduce();
    return r;
}

// Unit class of an F0-valued entry relative to w0 = -pi0.
int64_t entry_unit_class_w0(const GramEntry& e, int val) {
    RamifiedElement u = e.num.div_pi(val + e.den);
    const LocalField& fld = u.field();
    if (u.part_pi() % static_cast<uint64_t>(fld.p) != 0)
        throw std::invalid_argument("entry not F0-valued");
    int64_t cls = static_cast<int64_t>(u.part_f0() % static_cast<uint64_t>(fld.p));
    if (((val / 2) % 2 + 2) % 2 == 1) cls = fld.p - cls;  // pi0^{v/2} = (-1)^{v/2} w0^{v/2}
    return cls % fld.p;
}

}  // namespace

GramMatrix transform(const GramMatrix& T, const CosetRep& g) {
    if (T.n() != 2) throw std::invalid_argument("transform: rank-2 matrices only");
    const LocalField& fld = T.field();
    int prec = T.prec();
    RamifiedElement zero = RamifiedElement::zero(fld, prec);
    RamifiedElement one = RamifiedElement::one(fld, prec);
    RamifiedElement pi = RamifiedElement::pi(fld, prec);

    // adj(g), and v = val_pi(det g); T[g^{-1}] = adj* T adj / Nm(det g),
    // Nm(det g) = w0^v up to the sign absorbed below (Nm(pi) = w0 = -pi0).
    RamifiedElement m[2][2];
    int det_val = 0;
    switch (g.label) {
        case CosetRep::Label::gamma_inf:
            m[0][0] = one; m[0][1] = zero; m[1][0] = zero; m[1][1] = pi;
            det_val = 1;
            break;
        case CosetRep::Label::gamma_x:
            m[0][0] = pi; m[0][1] = RamifiedElement::from_int(fld, prec, -g.x);
            m[1][0] = zero; m[1][1] = one;
            det_val = 1;
            break;
        case CosetRep::Label::pi_pi:
            m[0][0] = pi; m[0][1] = zero; m[1][0] = zero; m[1][1] = pi;
            det_val = 2;
            break;
    }

    GramMatrix R(fld, 2, prec);
    for (int i = 0; i < 2; ++i) {
        for (int j = i; j < 2; ++j) {
            // (adj* T adj)_{ij} = sum_{k,l} conj(m[k][i]) T_{kl} m[l][j]
            GramEntry acc{RamifiedElement::zero(fld, prec), 0};
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    GramEntry term = entry_mul(
                        entry_mul(GramEntry{m[k][i].conj(), 0}, T.at(k, l)),
                        GramEntry{m[l][j], 0});
                    acc = entry_add(acc, term);
                }
            // divide by Nm(det) = (-pi0)^{det_val}
            if (det_val % 2 == 1) acc = entry_neg(acc);
            acc.den += 2 * det_val;
            acc.reduce();
            R.set(i, j, acc.num, acc.den);
        }
    }
    return R;
}

GramMatrix congruence(const GramMatrix& T, const UnimodularMatrix& u) {
    if (T.n() != 2) throw std::invalid_argument("congruence: rank-2 matrices only");
    const RamifiedElement* m[2][2] = {{&u.a, &u.b}, {&u.c, &u.d}};
    GramMatrix R(T.field(), 2, T.prec());
    for (int i = 0; i < 2; ++i)
        for (int j = i; j < 2; ++j) {
            GramEntry acc{RamifiedElement::zero(T.field(), T.prec()), 0};
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    acc = entry_add(acc, entry_mul(entry_mul(GramEntry{m[k][i]->conj(), 0},
                                                             T.at(k, l)),
                                                   GramEntry{*m[l][j], 0}));
            R.set(i, j, acc.num, acc.den);
        }
    return R;
}

int suggested_precision(int max_abs_val_pi0) { return 2 * max_abs_val_pi0 + 6; }

CanonicalForm normalize(const GramMatrix& T) {
    if (T.n() != 2) throw std::invalid_argument("normalize: rank-2 matrices only");
    const LocalField& fld = T.field();

    GramEntry t11 = T.at(0, 0), t12 = T.at(0, 1), t22 = T.at(1, 1);
    auto v11 = t11.val_pi(), v12 = t12.val_pi(), v22 = t22.val_pi();
    if (!v11 && !v12 && !v22)
        throw precision_error("normalize: matrix is 0 at working precision");

    auto less = [](const std::optional<int>& x, const std::optional<int>& y) {
        if (!x) return false;
        if (!y) return true;
        return *x < *y;
    };

    bool diag_attains =
        (v11 && (!v12 || *v11 <= *v12) && (!v22 || *v11 <= *v22)) ||
        (v22 && (!v12 || *v22 <= *v12) && (!v11 || *v22 <= *v11));

    if (!diag_attains) {
        // minimum strictly off-diagonal
        int vmin = *v12;
        if (vmin % 2 != 0) {
            // no vector of odd minimal norm exists: the antidiagonal plane
            return CanonicalForm::anti((vmin + 1) / 2);
        }
        // even off-diagonal minimum: e1 + e2 has norm of that valuation,
        // so fold it into the corner and fall through to a diagonal pivot.
        GramEntry tr = entry_add(t12, entry_conj(t12));
        t11 = entry_add(entry_add(t11, tr), t22);
        t12 = entry_add(t12, t22);
        v11 = t11.val_pi();
        v12 = t12.val_pi();
        if (!v11 || *v11 != vmin)
            throw precision_error("normalize: pivot construction lost precision");
    }

    // Put the minimal diagonal entry at the pivot.
    if (less(v22, v11)) {
        std::swap(t11, t22);
        std::swap(v11, v22);
        t12 = entry_conj(t12);
    }
    if (!v11) throw precision_error("normalize: pivot is 0 at working precision");
    if (*v11 % 2 != 0) throw std::invalid_argument("normalize: diagonal entry of odd valuation");

    // Split off the pivot: complement = t22 - Nm(t12)/t11.
    GramEntry comp = entry_add(t22, entry_neg(entry_div(entry_mul(t12, entry_conj(t12)), t11)));
    auto vc = comp.val_pi();
    if (!vc)
        throw precision_error(
            "normalize: complement is 0 at working precision (degenerate input or precision "
            "too low)");
    if (*vc % 2 != 0) throw std::logic_error("normalize: complement of odd valuation");

    int a1 = *v11 / 2, a2 = *vc / 2;
    int64_t u1 = entry_unit_class_w0(t11, *v11);
    int64_t u2 = entry_unit_class_w0(comp, *vc);
    int eps1 = chi_bar(-(u1 * u2) % fld.p, fld.p);
    if (a1 < a2) std::swap(a1, a2);
    return CanonicalForm{CanonicalForm::Kind::diagonal, a1, a2, eps1};
}

int chi_of_matrix(const GramMatrix& T) {
    if (T.n() != 2) throw std::invalid_argument("chi_of_matrix: rank-2 matrices only");
    GramEntry det = entry_add(entry_mul(T.at(0, 0), T.at(1, 1)),
                              entry_neg(entry_mul(T.at(0, 1), entry_conj(T.at(0, 1)))));
    auto v = det.val_pi();
    if (!v) throw precision_error("chi_of_matrix: determinant is 0 at working precision");
    if (*v % 2 != 0) throw std::logic_error("chi_of_matrix: determinant of odd valuation");
    int64_t cls = entry_unit_class_w0(det, *v);
    return chi_bar(-cls % T.field().p, T.field().p);
}

// --- text grammar ---

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw std::invalid_argument(std::string("gram parse: expected '") + c + "' at offset " +
                                        std::to_string(i));
    }
};

// integer or integer "/" p-power; returns (numer, k) for numer / p^k
std::pair<int64_t, int> parse_rat(Cursor& c, int64_t p) {
    c.skip_ws();
    size_t start = c.i;
    if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) ++c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) throw std::invalid_argument("gram parse: expected integer");
    int64_t num = std::stoll(c.s.substr(start, c.i - start));
    int k = 0;
    if (c.accept('/')) {
        c.skip_ws();
        size_t d0 = c.i;
        while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
        if (c.i == d0) throw std::invalid_argument("gram parse: expected denominator");
        int64_t den = std::stoll(c.s.substr(d0, c.i - d0));
        if (den <= 0) throw std::invalid_argument("gram parse: bad denominator");
        while (den > 1) {
            if (den % p != 0)
                throw std::invalid_argument("gram parse: denominator must be a power of p");
            den /= p;
            ++k;
        }
    }
    return {num, k};
}

bool accept_pi(Cursor& c) {
    c.skip_ws();
    if (c.s.compare(c.i, 3, "*pi") == 0) {
        c.i += 3;
        return true;
    }
    if (c.s.compare(c.i, 2, "pi") == 0) {
        c.i += 2;
        return true;
    }
    return false;
}

GramEntry build_entry(int64_t ra_num, int ra_k, int64_t rb_num, int rb_k, const LocalField& fld,
                      int prec) {
    // value = ra + rb*pi with ra = ra_num/p^{ra_k}, rb = rb_num/p^{rb_k}.
    // Common denominator pi^d with d = max(0, 2 ra_k, 2 rb_k - 1).
    int d = std::max({0, 2 * ra_k, 2 * rb_k - 1});
    int64_t u0 = fld.u0();
    auto scaled = [&](int64_t num, int k, int pi_pow) -> std::pair<int64_t, bool> {
        // num/p^k * pi^{pi_pow}: returns (integer coefficient, goes to pi slot)
        bool odd = pi_pow % 2 != 0;
        int half = pi_pow / 2;
        Int v = num;
        for (int i = 0; i < half; ++i) v *= u0 * fld.p;  // pi0^half
        for (int i = 0; i < k; ++i) {
            if (v % fld.p != 0) throw std::invalid_argument("gram parse: internal scale error");
            v /= fld.p;
        }
        return {static_cast<int64_t>(v % pow_u64(static_cast<uint64_t>(fld.p), prec)), odd};
    };
    int64_t slot_a = 0, slot_b = 0;
    if (ra_num != 0) {
        auto [v, odd] = scaled(ra_num, ra_k, d);
        (odd ? slot_b : slot_a) += v;
    }
    if (rb_num != 0) {
        auto [v, odd] = scaled(rb_num, rb_k, d + 1);
        (odd ? slot_b : slot_a) += v;
    }
    GramEntry e{RamifiedElement(fld, prec, slot_a, slot_b), d};
    e.reduce();
    return e;
}

GramEntry parse_entry(Cursor& c, const LocalField& fld, int prec) {
    auto [n1, k1] = parse_rat(c, fld.p);
    if (accept_pi(c)) {
        // lone "RAT*pi"
        return build_entry(0, 0, n1, k1, fld, prec);
    }
    c.skip_ws();
    if (c.i < c.s.size() && (c.s[c.i] == '+' || c.s[c.i] == '-')) {
        size_t save = c.i;
        auto [n2, k2] = parse_rat(c, fld.p);
        if (accept_pi(c)) return build_entry(n1, k1, n2, k2, fld, prec);
        c.i = save;  // not an entry continuation; let the caller see the sign
    }
    return build_entry(n1, k1, 0, 0, fld, prec);
}

}  // namespace

GramMatrix parse_gram(const std::string& text, const LocalField& fld, int prec) {
    Cursor c{text};
    c.expect('[');
    std::vector<std::vector<GramEntry>> rows;
    do {
        c.expect('[');
        std::vector<GramEntry> row;
        do {
            row.push_back(parse_entry(c, fld, prec));
        } while (c.accept(','));
        c.expect(']');
        rows.push_back(std::move(row));
    } while (c.accept(','));
    c.expect(']');
    c.skip_ws();
    if (c.i != text.size()) throw std::invalid_argument("gram parse: trailing input");

    int n = static_cast<int>(rows.size());
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != n)
            throw std::invalid_argument("gram parse: matrix is not square");
    GramMatrix T(fld, n, prec);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j < i) continue;
            const GramEntry& a = rows[i][j];
            const GramEntry& b = rows[j][i];
            int d = std::max(a.den, b.den);
            RamifiedElement ac = a.num.mul_pi(d - a.den).conj();
            if (d % 2) ac = ac.neg();
            if (!(ac == b.num.mul_pi(d - b.den)))
                throw std::invalid_argument("gram parse: matrix is not hermitian");
            if (i == j) {
                if ((a.den % 2 == 0 && a.num.part_pi() != 0) ||
                    (a.den % 2 == 1 && a.num.part_f0() != 0))
                    throw std::invalid_argument("gram parse: diagonal entry not F0-valued");
            }
            T.set(i, j, a.num, a.den);
        }
    return T;
}

std::string gram_to_text(const GramMatrix& T) {
    const LocalField& fld = T.field();
    uint64_t p = static_cast<uint64_t>(fld.p);
    uint64_t mod = pow_u64(p, T.prec());
    auto lift = [&](uint64_t r) -> int64_t {
        return r > mod / 2 ? static_cast<int64_t>(r) - static_cast<int64_t>(mod)
                           : static_cast<int64_t>(r);
    };
    auto u0_inv_pow = [&](int k) -> uint64_t {
        uint64_t u = static_cast<uint64_t>(fld.u0()) % mod, r = 1;
        for (int i = 0; i < k; ++i) r = (unsigned __int128)r * u % mod;
        // r = u0^k; invert via Euler
        uint64_t inv = 1, base = r, e = mod / p * (p - 1) - 1;
        while (e) {
            if (e & 1) inv = (unsigned __int128)inv * base % mod;
            base = (unsigned __int128)base * base % mod;
            e >>= 1;
        }
        return inv;
    };
    auto print_rat = [&](std::ostream& os, int64_t num, int k, bool with_sign) {
        if (with_sign) {
            os << (num >= 0 ? "+" : "-");
            num = num >= 0 ? num : -num;
        }
        os << num;
        if (k > 0 && num != 0) os << "/" << Int(pow_u64(p, k)).str();
    };
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < T.n(); ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < T.n(); ++j) {
            if (j) os << ",";
            GramEntry e = T.at(i, j);
            // value = (a + b pi)/pi^den = rA + rB*pi with p-power denominators
            // once the u0 powers of pi0 = u0 p are folded into the residues.
            int dh = e.den / 2, parity = e.den % 2;
            uint64_t a = e.num.part_f0(), b = e.num.part_pi();
            int64_t ra, rb;
            int ka, kb;
            if (parity == 0) {
                uint64_t f = u0_inv_pow(dh);
                ra = lift((unsigned __int128)a * f % mod);
                rb = lift((unsigned __int128)b * f % mod);
                ka = kb = dh;
            } else {
                // (a + b pi)/pi = b + (a/(u0 p)) pi
                ra = lift((unsigned __int128)b * u0_inv_pow(dh) % mod);
                rb = lift((unsigned __int128)a * u0_inv_pow(dh + 1) % mod);
                ka = dh;
                kb = dh + 1;
            }
            if (rb == 0) {
                print_rat(os, ra, ka, false);
            } else if (ra == 0) {
                print_rat(os, rb, kb, false);
                os << "*pi";
            } else {
                print_rat(os, ra, ka, false);
                print_rat(os, rb, kb, true);
                os << "*pi";
            }
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace hermloc
