#include "hermloc/counting.hpp"
#include "hermloc/density.hpp"

#include <thread>
#include <vector>

namespace hermloc {

namespace {

// Residue pair a + b*pi mod p^K, machine-word arithmetic.
struct Res {
    uint64_t a = 0, b = 0;
};

struct ModCtx {
    uint64_t p, mod, pl, plp1, pi0;  // p^K, p^ell, p^{ell+1}, u0*p mod p^K

    Res mul(const Res& x, const Res& y) const {
        Res r;
        r.a = ((unsigned __int128)x.a * y.a + (unsigned __int128)pi0 * (x.b * y.b % mod)) % mod;
        r.b = ((unsigned __int128)x.a * y.b + (unsigned __int128)x.b * y.a) % mod;
        return r;
    }
    Res add(const Res& x, const Res& y) const { return {(x.a + y.a) % mod, (x.b + y.b) % mod}; }
    Res sub(const Res& x, const Res& y) const {
        return {(x.a + mod - y.a) % mod, (x.b + mod - y.b) % mod};
    }
    Res conj(const Res& x) const { return {x.a, x.b ? mod - x.b : 0}; }
};

// Extract the residues of pi * entry at precision K (entry value must have
// pi-valuation >= -1).
Res pi_times_entry(const GramEntry& e, const ModCtx& m, int K) {
    GramEntry t = e;
    t.reduce();
    auto v = t.val_pi();
    if (v && *v < -1) throw std::invalid_argument("counting: entry valuation below -1");
    // pi * value = num * pi^{1 - den}
    RamifiedElement w =
        t.den <= 1 ? t.num.mul_pi(1 - t.den) : t.num.div_pi(t.den - 1);
    if (w.prec() < K)
        throw precision_error("counting: matrix entry carries less precision than the job needs");
    return {w.part_f0() % m.mod, w.part_pi() % m.mod};
}

struct RawJob {
    ModCtx m;
    int rank_m = 0, rank_n = 0, ell = 0;
    bool dual = true;
    std::vector<Res> S;  // pi * S, row-major m x m
    std::vector<Res> T;  // pi * T, row-major n x n
};

// Congruence checks on W = X* (pi S) X - (pi T):
//   diagonal:        W.b = 0 mod p^ell  (W.a = 0 mod p^{ell+1} automatically)
//   off-diag (herm): W.a = 0 mod p^{ell+1} and W.b = 0 mod p^ell
//   off-diag (dual): W.a = 0 mod p^ell   and W.b = 0 mod p^ell
inline bool diag_ok(const Res& w, const RawJob& j) { return w.b % j.m.pl == 0; }
inline bool offdiag_ok(const Res& w, const RawJob& j) {
    if (w.b % j.m.pl != 0) return false;
    return j.dual ? (w.a % j.m.pl == 0) : (w.a % j.m.plp1 == 0);
}

// c* S c for a column c.
Res herm_value(const std::vector<Res>& col, const RawJob& j) {
    Res acc{0, 0};
    for (int k = 0; k < j.rank_m; ++k) {
        Res row{0, 0};
        for (int l = 0; l < j.rank_m; ++l)
            row = j.m.add(row, j.m.mul(j.S[k * j.rank_m + l], col[l]));
        acc = j.m.add(acc, j.m.mul(j.m.conj(col[k]), row));
    }
    return acc;
}

std::vector<Res> s_times(const std::vector<Res>& col, const RawJob& j) {
    std::vector<Res> r(j.rank_m);
    for (int k = 0; k < j.rank_m; ++k) {
        Res acc{0, 0};
        for (int l = 0; l < j.rank_m; ++l)
            acc = j.m.add(acc, j.m.mul(j.S[k * j.rank_m + l], col[l]));
        r[k] = acc;
    }
    return r;
}

// Decode index -> column over (O_F/pi0^ell)^m, entries (a, b) mod p^ell.
std::vector<Res> decode_column(uint64_t idx, const RawJob& j) {
    std::vector<Res> c(j.rank_m);
    uint64_t pl = j.m.pl;
    for (int k = 0; k < j.rank_m; ++k) {
        c[k].a = idx % pl;
        idx /= pl;
        c[k].b = idx % pl;
        idx /= pl;
    }
    return c;
}

uint64_t count_n1(const RawJob& j, int threads);
uint64_t count_n2(const RawJob& j, int threads);

RawJob lower_job(const CountJob& job) {
    const LocalField& fld = job.S.field();
    if (!(fld == job.T.field())) throw std::invalid_argument("counting: field mismatch");
    if (job.T.n() > 2) throw std::invalid_argument("counting: n <= 2 required");
    if (job.S.n() > 4) throw std::invalid_argument("counting: m <= 4 required");
    if (job.ell < 1) throw std::invalid_argument("counting: ell >= 1 required");

    int K = job.working_prec > 0 ? job.working_prec : job.ell + 1;
    if (K < job.ell + 1) throw precision_error("counting: working precision below ell + 1");

    RawJob r;
    r.rank_m = job.S.n();
    r.rank_n = job.T.n();
    r.ell = job.ell;
    r.dual = job.convention == DualConvention::hermdual;
    uint64_t p = static_cast<uint64_t>(fld.p);
    r.m.p = p;
    r.m.mod = pow_u64(p, K);
    r.m.pl = pow_u64(p, job.ell);
    r.m.plp1 = pow_u64(p, job.ell + 1);
    r.m.pi0 = static_cast<uint64_t>(fld.u0()) % r.m.mod * p % r.m.mod;
    for (int i = 0; i < r.rank_m; ++i)
        for (int k = 0; k < r.rank_m; ++k) r.S.push_back(pi_times_entry(job.S.at(i, k), r.m, K));
    for (int i = 0; i < r.rank_n; ++i)
        for (int k = 0; k < r.rank_n; ++k) {
            GramEntry e = job.T.at(i, k);
            auto v = e.val_pi();
            if (i == k && v && *v < 0) {
                // non-integral diagonal: no solutions at any level
                r.rank_n = -1;
                return r;
            }
            r.T.push_back(pi_times_entry(e, r.m, K));
        }
    return r;
}

uint64_t column_space_size(const RawJob& j) {
    uint64_t s = 1;
    for (int k = 0; k < 2 * j.rank_m; ++k) s *= j.m.pl;
    return s;
}

uint64_t count_n1(const RawJob& j, int threads) {
    uint64_t total_cols = column_space_size(j);
    int nt = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (nt < 1) nt = 1;
    std::vector<uint64_t> partial(nt, 0);
    auto work = [&](int t) {
        uint64_t cnt = 0;
        for (uint64_t idx = t; idx < total_cols; idx += nt) {
            std::vector<Res> c = decode_column(idx, j);
            Res w = j.m.sub(herm_value(c, j), j.T[0]);
            if (diag_ok(w, j)) ++cnt;
        }
        partial[t] = cnt;
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
    uint64_t sum = 0;
    for (uint64_t c : partial) sum += c;
    return sum;
}

uint64_t count_n2(const RawJob& j, int threads) {
    uint64_t total_cols = column_space_size(j);

    // Second columns surviving the (2,2) congruence, with S*c cached.
    struct C2 {
        std::vector<Res> sc;
    };
    std::vector<C2> c2s;
    for (uint64_t idx = 0; idx < total_cols; ++idx) {
        std::vector<Res> c = decode_column(idx, j);
        Res w22 = j.m.sub(herm_value(c, j), j.T[3]);
        if (diag_ok(w22, j)) c2s.push_back({s_times(c, j)});
    }

    int nt = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (nt < 1) nt = 1;
    std::vector<uint64_t> partial(nt, 0);
    auto work = [&](int t) {
        uint64_t cnt = 0;
        // contiguous block of the first-column index space
        uint64_t lo = total_cols * t / nt, hi = total_cols * (t + 1) / nt;
        for (uint64_t idx = lo; idx < hi; ++idx) {
            std::vector<Res> c1 = decode_column(idx, j);
            Res w11 = j.m.sub(herm_value(c1, j), j.T[0]);
            if (!diag_ok(w11, j)) continue;
            std::vector<Res> c1c(j.rank_m);
            for (int k = 0; k < j.rank_m; ++k) c1c[k] = j.m.conj(c1[k]);
            for (const C2& c2 : c2s) {
                Res w12{0, 0};
                for (int k = 0; k < j.rank_m; ++k)
                    w12 = j.m.add(w12, j.m.mul(c1c[k], c2.sc[k]));
                w12 = j.m.sub(w12, j.T[1]);
                if (offdiag_ok(w12, j)) ++cnt;
            }
        }
        partial[t] = cnt;
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
    uint64_t sum = 0;
    for (uint64_t c : partial) sum += c;
    return sum;
}

}  // namespace

uint64_t count_representations(const CountJob& job) {
    RawJob raw = lower_job(job);
    if (raw.rank_n < 0) return 0;  // unsatisfiable: non-integral diagonal in T

    uint64_t cols = column_space_size(raw);
    unsigned __int128 size = 1;
    for (int i = 0; i < raw.rank_n; ++i) size *= cols;
    if (size > job.budget)
        throw budget_error("counting: enumeration size " + std::to_string((uint64_t)size) +
                           " exceeds budget " + std::to_string(job.budget));

    return raw.rank_n == 1 ? count_n1(raw, job.threads) : count_n2(raw, job.threads);
}

Rat alpha_bruteforce(const CountJob& job) {
    uint64_t cnt = count_representations(job);
    int n = job.T.n(), m = job.S.n();
    int64_t q = job.S.field().p;
    Rat norm = rat_pow(q, static_cast<long>(job.ell) * n * (n - 2 * m));
    if (job.convention == DualConvention::herm) norm *= rat_pow(q, n * (n - 1) / 2);
    return norm * cnt;
}

StabilizedAlpha stabilized_alpha(const GramMatrix& S, const GramMatrix& T, int max_ell,
                                 uint64_t budget, DualConvention conv, int threads) {
    StabilizedAlpha out;

    // non-integral diagonal: unsatisfiable at every level
    for (int i = 0; i < T.n(); ++i) {
        auto v = T.at(i, i).val_pi();
        if (v && *v < 0) {
            out.value = 0;
            out.ell_used = 1;
            out.stable = true;
            return out;
        }
    }

    int ell0 = 1;
    for (int i = 0; i < T.n(); ++i)
        for (int k = 0; k < T.n(); ++k) {
            auto v = T.at(i, k).val_pi();
            if (v) ell0 = std::max(ell0, *v / 2 + 1);
        }

    std::optional<Rat> prev;
    for (int ell = ell0; ell <= max_ell; ++ell) {
        CountJob job{S, T, ell, conv, budget, threads, 0};
        Rat cur;
        try {
            cur = alpha_bruteforce(job);
        } catch (const budget_error&) {
            break;  // report the last value, unstabilized
        }
        out.ell_used = ell;
        if (prev && *prev == cur) {
            out.value = cur;
            out.stable = true;
            return out;
        }
        prev = cur;
        out.value = cur;
    }
    out.stable = false;
    return out;
}

int64_t unit_with_chi_minus(int64_t p, int sign) {
    for (int64_t v = 1; v < p; ++v)
        if (chi_bar(-v, p) == sign) return v;
    throw std::logic_error("unit_with_chi_minus: none found");
}

GramMatrix build_S_r(SType s, int r, const LocalField& fld, int prec) {
    if (r < 0 || r > 1) throw std::invalid_argument("build_S_r: r in {0,1}");
    GramMatrix base = s == SType::hyperbolic
                          ? GramMatrix::hyperbolic(fld, prec)
                          : GramMatrix::diag_w0(fld, prec,
                                                {{unit_with_chi_minus(fld.p, hasse_sign(s)), 0},
                                                 {1, 0}});
    if (r == 0) return base;
    return GramMatrix::direct_sum(base, GramMatrix::hyperbolic(fld, prec));
}

ConventionCalibration calibrate_convention(int64_t p, uint64_t budget, int threads) {
    LocalField fld{p, Pi0Unit::plus_one};
    int prec = 4;
    GramMatrix Ssplit = build_S_r(SType::split, 0, fld, prec);
    GramMatrix Snon = build_S_r(SType::nonsplit, 0, fld, prec);
    Rat target_split = Rat(2) * (p - 1), target_non = Rat(2) * (p + 1);

    auto matches = [&](DualConvention conv) {
        for (int ell = 1; ell <= 2; ++ell) {
            try {
                CountJob js{Ssplit, Ssplit, ell, conv, budget, threads, 0};
                CountJob jn{Snon, Snon, ell, conv, budget, threads, 0};
                if (alpha_bruteforce(js) != target_split) return false;
                if (alpha_bruteforce(jn) != target_non) return false;
            } catch (const budget_error&) {
                if (ell == 1) throw;
                break;  // the ell = 2 confirmation is out of budget; the
                        // unimodular targets already stabilize at ell = 1
            }
        }
        return true;
    };

    bool dual_ok = matches(DualConvention::hermdual);
    bool herm_ok = matches(DualConvention::herm);
    if (!dual_ok && !herm_ok)
        throw std::logic_error("calibrate_convention: neither counting convention reproduces "
                               "alpha(S,S) = 2q-2 and alpha(S',S') = 2(q+1)");
    return {dual_ok ? DualConvention::hermdual : DualConvention::herm, Rat(p)};
}

}  // namespace hermloc
