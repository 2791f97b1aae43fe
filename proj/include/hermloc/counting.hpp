#pragma once

// Brute-force local densities by finite counting: the number of
// X in M_{m,n}(O_F/pi0^ell) with S[X] - T in pi0^ell * Herm (or Herm^dual),
// normalized per the counting lemma. Embarrassingly parallel over the
// first-column index space; totals are scheduling-independent.

#include "hermloc/density.hpp"
#include "hermloc/hermitian.hpp"
#include "hermloc/rational.hpp"

#include <cstdint>
#include <optional>

namespace hermloc {

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class DualConvention { herm, hermdual };

struct CountJob {
    GramMatrix S;  // m x m, entries allowed one pi denominator
    GramMatrix T;  // n x n, n <= 2
    int ell = 1;
    DualConvention convention = DualConvention::hermdual;
    uint64_t budget = uint64_t(1) << 36;  // candidate evaluations
    int threads = 0;                      // 0 = hardware concurrency
    int working_prec = 0;                 // pi0-digits; 0 = ell + 1
};

// |{X : S[X] = T mod pi0^ell * D}| with D per the convention.
uint64_t count_representations(const CountJob& job);

// Normalized density. hermdual: q^{ell n(n-2m)} * count;
// herm: q^{n(n-1)/2} * q^{ell n(n-2m)} * count  (|different| = q^{-1}).
Rat alpha_bruteforce(const CountJob& job);

struct StabilizedAlpha {
    Rat value;
    int ell_used = 0;
    bool stable = false;
};

// Raises ell from max(1, max pi0-valuation of T + 1) until two consecutive
// normalized values agree, or max_ell / budget is hit (flagged, not thrown).
StabilizedAlpha stabilized_alpha(const GramMatrix& S, const GramMatrix& T, int max_ell,
                                 uint64_t budget, DualConvention conv = DualConvention::hermdual,
                                 int threads = 0);

// S_r = S + H^r for the standard S choices.
GramMatrix build_S_r(SType s, int r, const LocalField& fld, int prec);

// Smallest unit v mod p with chi(-v) = sign.
int64_t unit_with_chi_minus(int64_t p, int sign);

struct ConventionCalibration {
    DualConvention convention;
    Rat herm_factor;  // q^{n(n-1)/2} relating the two counts at n = 2
};

// Checks both counting conventions against alpha(S,S) = 2q-2 and
// alpha(S',S') = 2(q+1) at ell = 1,2; throws if neither reproduces them.
ConventionCalibration calibrate_convention(int64_t p, uint64_t budget = uint64_t(1) << 36,
                                           int threads = 0);

}  // namespace hermloc
