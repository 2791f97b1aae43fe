#pragma once

// Hermitian Gram matrices over F with controlled pi-denominators, reduction
// to canonical form (Jordan splitting over the ramified extension), the
// q+1 coset representatives of U_2 \ pi_{2,1}, and the transform
// T |-> T[g^{-1}] used by the density recursion.

#include "hermloc/canonical_form.hpp"
#include "hermloc/local_ring.hpp"
#include "hermloc/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace hermloc {

// One matrix entry: num / pi^den.
struct GramEntry {
    RamifiedElement num;
    int den = 0;

    // Valuation of the entry, or nullopt if zero at precision.
    std::optional<int> val_pi() const {
        auto v = num.val_pi_opt();
        if (!v) return std::nullopt;
        return *v - den;
    }
    // Pull pi factors out of the denominator while the numerator allows it.
    void reduce();
};

class GramMatrix {
public:
    GramMatrix() = default;
    GramMatrix(const LocalField& fld, int n, int prec);

    static GramMatrix diag_w0(const LocalField& fld, int prec,
                              const std::vector<std::pair<int64_t, int>>& units_exps);
    // [[0, pi^{2a-1}], [(-pi)^{2a-1}, 0]]; a = 0 gives H itself.
    static GramMatrix antidiag(const LocalField& fld, int prec, int a);
    static GramMatrix hyperbolic(const LocalField& fld, int prec) { return antidiag(fld, prec, 0); }
    static GramMatrix direct_sum(const GramMatrix& A, const GramMatrix& B);

    int n() const { return n_; }
    const LocalField& field() const { return fld_; }
    int prec() const { return prec_; }
    const GramEntry& at(int i, int j) const { return e_[i * n_ + j]; }

    // Sets (i,j) and mirrors the conjugate at (j,i).
    void set(int i, int j, const RamifiedElement& num, int den = 0);

    bool is_hermitian_ok() const;  // diagnostics: diag entries F0-valued etc.
    int max_den() const;

    std::string str() const;

private:
    LocalField fld_;
    int n_ = 0;
    int prec_ = 0;
    std::vector<GramEntry> e_;
};

struct CosetRep {
    enum class Label { gamma_inf, gamma_x, pi_pi };
    Label label = Label::gamma_inf;
    int64_t x = 0;  // residue for gamma_x

    // Row-major entries over O_F. det has pi-valuation 1 (gamma reps) or 2.
    std::array<RamifiedElement, 4> matrix(const LocalField& fld, int prec) const;

    std::string str() const;
};

// gamma_inf = [[pi,0],[0,1]], gamma_x = [[1,x],[0,pi]] for x in 0..p-1,
// plus the i = 2 representative Diag{pi,pi}.
std::vector<CosetRep> coset_reps(const LocalField& fld);

// T[g^{-1}] = (g^{-1})* T g^{-1}. Exact: computed as adj(g)* T adj(g)
// scaled by Nm(det g)^{-1}, with denominators kept explicit.
GramMatrix transform(const GramMatrix& T, const CosetRep& g);

// Unimodular congruence T |-> u* T u for property tests.
struct UnimodularMatrix {
    RamifiedElement a, b, c, d;  // row-major 2x2 over O_F, unit determinant
};
GramMatrix congruence(const GramMatrix& T, const UnimodularMatrix& u);

// Reduction of a nondegenerate rank-2 hermitian matrix to its canonical
// class. Handles non-integral input (negative exponents in the result).
// Throws precision_error when pivoting would consume the working precision
// and std::invalid_argument on degenerate input.
CanonicalForm normalize(const GramMatrix& T);

// chi(T) from the raw determinant, without normalizing.
int chi_of_matrix(const GramMatrix& T);

// Default working precision for reducing T: 2*(max |entry valuation|) + 6
// pi-digits, at least 6 pi0-digits.
int suggested_precision(int max_abs_val_pi0);

// A concrete Gram matrix in the class of cf over F_0 = Q_p (unit classes
// chosen as small residues).
GramMatrix gram_of_class(const CanonicalForm& cf, const LocalField& fld, int prec);

// --- Gram-matrix text grammar (shared with the CLI) ---
//   matrix := '[' row (',' row)* ']';  row := '[' entry (',' entry)* ']'
//   entry  := RAT | RAT '*pi' | RAT '+' RAT '*pi' | RAT '-' RAT '*pi'
//   RAT    := integer | integer '/' p-power
GramMatrix parse_gram(const std::string& text, const LocalField& fld, int prec);
std::string gram_to_text(const GramMatrix& T);

}  // namespace hermloc
