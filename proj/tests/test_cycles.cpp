#include "hermloc/cycles.hpp"

#include <doctest.h>

using namespace hermloc;

TEST_CASE("mu_q values") {
    for (int64_t q : {3, 5, 7}) {
        CHECK(mu_q(q, 0, 0) == 0);
        CHECK(mu_q(q, 1, 0) == 1);
        CHECK(mu_q(q, 1, 1) == 2 * q + 2);
    }
    CHECK(mu_q(3, 1, 1) == 8);
    CHECK(mu_q(3, 2, 2) == 40);  // 2(5 + 3q + q^2) - 6 at q = 3
    CHECK_THROWS_AS(mu_q(3, -1, 0), std::invalid_argument);
    // symmetry
    for (int a = 0; a <= 12; ++a)
        for (int b = 0; b <= 12; ++b) CHECK(mu_q(5, a, b) == mu_q(5, b, a));
}

TEST_CASE("special cycle decomposition") {
    auto d0 = decompose_special_cycle(0);
    CHECK(d0.size() == 2);  // Z0 and Exc
    CHECK(d0.back().kind == CycleComponent::Kind::exc);
    CHECK(d0.back().multiplicity == 1);

    auto d2 = decompose_special_cycle(2);
    CHECK(d2.size() == 6);  // Z0, Z1+, Z2+, Z1-, Z2-, Exc(x3)
    CHECK(d2.back().multiplicity == 3);

    auto d1 = decompose_special_cycle(1);
    CHECK(d1.size() == 4);
    CHECK(d1.back().multiplicity == 2);

    for (int a = 0; a <= 8; ++a) {
        int msum = 0;
        for (const auto& c : decompose_special_cycle(a)) msum += c.multiplicity;
        CHECK(msum == (2 * a + 1) + (a + 1));
    }
}

TEST_CASE("pairwise intersection table") {
    auto zp = [](int s, Side side) {
        return CycleComponent{CycleComponent::Kind::zs_plus, side, s, 1};
    };
    auto zm = [](int s, Side side) {
        return CycleComponent{CycleComponent::Kind::zs_minus, side, s, 1};
    };
    CycleComponent exc{CycleComponent::Kind::exc, Side::kappa, 0, 1};
    CycleComponent z0k{CycleComponent::Kind::z0, Side::kappa, 0, 1};
    CycleComponent z0b{CycleComponent::Kind::z0, Side::kappa_bar, 0, 1};

    for (int64_t q : {3, 5, 7}) {
        CHECK(pair_intersection(zp(2, Side::kappa), zp(3, Side::kappa_bar), q) == q * q - 1);
        CHECK(pair_intersection(zm(1, Side::kappa), zp(4, Side::kappa_bar), q) == 0);
        CHECK(pair_intersection(exc, exc, q) == -2);
        CHECK(pair_intersection(zp(5, Side::kappa), exc, q) == 1);
        CHECK(pair_intersection(z0k, exc, q) == 1);
        CHECK(pair_intersection(z0k, z0b, q) == 0);
        CHECK(pair_intersection(z0k, zp(3, Side::kappa_bar), q) == 0);
        CHECK_THROWS_AS(pair_intersection(zp(1, Side::kappa), zm(2, Side::kappa), q),
                        std::invalid_argument);
    }
}

TEST_CASE("z_dot_special") {
    for (int64_t q : {3, 5, 7, 11}) {
        CHECK(z_dot_special(q, 1, 0) == 1);
        CHECK(z_dot_special(q, 0, 2) == 3);
        CHECK(z_dot_special(q, 2, 2) == 1 + q + q * q);
        // telescoping from the corollary's proof
        for (int s = 1; s <= 10; ++s)
            for (int b = 1; b <= 10; ++b) {
                Int step = z_dot_special(q, s, b) - z_dot_special(q, s, b - 1);
                Int qmin = 1;
                for (int i = 0; i < std::min(s, b); ++i) qmin *= q;
                CHECK(step - 1 == qmin - 1);
            }
    }
}

TEST_CASE("assembly worked examples") {
    for (int64_t q : {3, 5, 7}) {
        IntersectionReport r00 = assemble_intersection(q, 0, 0);
        CHECK(r00.I == -2);
        CHECK(r00.II == 2);
        CHECK(r00.III == 0);
        CHECK(r00.total == 0);

        IntersectionReport r10 = assemble_intersection(q, 1, 0);
        CHECK(r10.I == -4);
        CHECK(r10.II == 5);
        CHECK(r10.III == 0);
        CHECK(r10.total == 1);

        IntersectionReport r11 = assemble_intersection(q, 1, 1);
        CHECK(r11.I == -8);
        CHECK(r11.II == 12);
        CHECK(r11.III == 2 * (q - 1));
        CHECK(r11.total == 2 * q + 2);
    }
    CHECK(assemble_intersection(3, 2, 2).total == 40);
}

TEST_CASE("assembly equals mu_q on a grid") {
    for (int64_t q : {3, 4, 5, 7, 9})
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; b <= 6; ++b)
                CHECK(assemble_intersection(q, a, b).total == mu_q(q, a, b));
}

TEST_CASE("lifting lengths, closed form") {
    CHECK(lifting_length(3, 2, 1) == 4);       // (q^2-1)/(q-1)
    CHECK(lifting_length(3, 1, 3) == 10);      // 1 + 3q
    for (int64_t q : {3, 5})
        for (int l = 0; l <= 8; ++l) CHECK(lifting_length(q, 0, l) == l + 1);
    // nondecreasing in l, strictly increasing for l >= s
    for (int64_t q : {3, 5})
        for (int s = 0; s <= 6; ++s)
            for (int l = 1; l <= 8; ++l) {
                CHECK(lifting_length(q, s, l) >= lifting_length(q, s, l - 1));
                if (l - 1 >= s) CHECK(lifting_length(q, s, l) > lifting_length(q, s, l - 1));
            }
}

TEST_CASE("lifting lengths, inductive scheme") {
    for (int64_t q : {3, 5})
        for (int s = 0; s <= 6; ++s)
            for (int l = 0; l <= 6; ++l)
                CHECK(lifting_length_inductive(q, 0, s, l) == lifting_length(q, s, l));

    // n_{r,r} first branch at l = 0: bracket is 1
    CHECK(lifting_length_inductive(3, 1, 1, 0) == 1);
    // base case s = 2r, l = 0: q^r
    CHECK(lifting_length_inductive(3, 1, 2, 0) == 3);
    CHECK(lifting_length_inductive(5, 2, 4, 0) == 25);
    // the n_{r,r} branches agree on their overlap (l = 2r-1, 2r treated by
    // both the small-l and the large-l branch)
    for (int64_t q : {3, 5})
        for (int r = 1; r <= 4; ++r) {
            Rat qp1_over_qm1 = Rat(Int(q + 1), Int(q - 1));
            Rat third_2r = (rat_pow(q, r - 1) - 1) * qp1_over_qm1 + rat_pow(q, r - 1) +
                           (Rat(2 * r + 1) / 2 - r) * 2 * rat_pow(q, r) + 1;
            Rat first_2r = (rat_pow(q, r) - 1) * qp1_over_qm1 + 1;
            CHECK(lifting_length_inductive(q, r, r, 2 * r) == first_2r);
            CHECK(first_2r == third_2r);
        }
    // outside the induction's reach
    CHECK_THROWS_AS(lifting_length_inductive(3, 2, 3, 0), std::invalid_argument);
}
