#pragma once

// Classification data for rank-2 hermitian forms over the ramified extension.
//
// Diagonal{a, b, eps1}   ~  Diag{u1 (-pi0)^a, u2 (-pi0)^b},  a >= b,
//                           eps1 = chi(-u1 u2)
// AntiDiagonal{a}        ~  [[0, pi^{2a-1}], [(-pi)^{2a-1}, 0]]
//
// Fundamental invariant: (2a+1, 2b+1) resp. (2a, 2a). Exponents may go
// negative for non-integral forms produced by coset transforms; the density
// formulas treat any class with a negative invariant component as zero.

#include <stdexcept>
#include <string>
#include <utility>

namespace hermloc {

struct CanonicalForm {
    enum class Kind { diagonal, antidiagonal };

    Kind kind = Kind::diagonal;
    int a = 0;
    int b = 0;      // unused for antidiagonal
    int eps1 = 1;   // chi(-u1 u2) for diagonal; +1 for antidiagonal

    static CanonicalForm diag(int a, int b, int eps1) {
        if (a < b) std::swap(a, b);
        if (eps1 != 1 && eps1 != -1) throw std::invalid_argument("eps1 must be +-1");
        return CanonicalForm{Kind::diagonal, a, b, eps1};
    }
    static CanonicalForm anti(int a) { return CanonicalForm{Kind::antidiagonal, a, 0, 1}; }

    bool is_diagonal() const { return kind == Kind::diagonal; }

    bool operator==(const CanonicalForm& o) const {
        if (kind != o.kind || a != o.a) return false;
        return kind == Kind::antidiagonal || (b == o.b && eps1 == o.eps1);
    }

    std::string str() const {
        if (kind == Kind::diagonal)
            return "Diagonal{a=" + std::to_string(a) + ",b=" + std::to_string(b) +
                   ",eps1=" + std::string(eps1 > 0 ? "+1" : "-1") + "}";
        return "AntiDiagonal{a=" + std::to_string(a) + "}";
    }
};

// (2a+1, 2b+1) for diagonal forms, (2a, 2a) for antidiagonal ones.
inline std::pair<int, int> fundamental_invariant(const CanonicalForm& cf) {
    if (cf.kind == CanonicalForm::Kind::diagonal) return {2 * cf.a + 1, 2 * cf.b + 1};
    return {2 * cf.a, 2 * cf.a};
}

// chi(T) = chi(-det T): eps1 for diagonal forms, +1 for antidiagonal ones
// (chi(w0) = +1 since w0 = Nm(pi), so the w0-powers drop out).
inline int chi_of(const CanonicalForm& cf) {
    return cf.kind == CanonicalForm::Kind::diagonal ? cf.eps1 : 1;
}

}  // namespace hermloc
