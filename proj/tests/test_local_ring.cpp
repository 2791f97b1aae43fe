#include "hermloc/local_ring.hpp"

#include <doctest.h>

#include <random>

using namespace hermloc;

TEST_CASE("chi_bar basic values") {
    CHECK(chi_bar(1, 3) == 1);
    CHECK(chi_bar(0, 5) == 0);
    CHECK(chi_bar(-1, 3) == -1);
    CHECK(chi_bar(2, 5) == -1);
    CHECK(chi_bar(4, 5) == 1);
    CHECK(chi_bar(-1, 5) == 1);  // 5 = 1 mod 4
}

TEST_CASE("chi_unit and chi_general") {
    LocalField f3{3, Pi0Unit::plus_one};
    LocalField f5{5, Pi0Unit::plus_one};
    CHECK(chi_unit(1, f3) == 1);
    CHECK(chi_unit(-1, f3) == -1);
    CHECK(chi_unit(2, f5) == -1);
    CHECK_THROWS_AS(chi_unit(0, f3), std::invalid_argument);

    // -pi0 = w0 = Nm(pi) is a norm; pi0 = (-1) w0
    CHECK(chi_general(1, 2, f3) == 1);
    CHECK(chi_general(-1, 2, f3) == -1);
    CHECK(chi_general(1, 0, f3) == 1);
    CHECK_THROWS_AS(chi_general(1, 1, f3), std::invalid_argument);
}

TEST_CASE("ring arithmetic basics") {
    LocalField f{3, Pi0Unit::plus_one};
    int M = 4;
    RamifiedElement x(f, M, 1, 2);  // 1 + 2 pi
    CHECK(x.conj() == RamifiedElement(f, M, 1, -2));

    RamifiedElement pi = RamifiedElement::pi(f, M);
    CHECK(pi * pi == RamifiedElement::from_int(f, M, 3));  // pi^2 = pi0 = u0 p

    // val_pi(p + pi) = 1
    RamifiedElement y(f, M, 3, 1);
    CHECK(y.val_pi() == 1);
    CHECK(RamifiedElement::from_int(f, M, 3).val_pi() == 2);
    CHECK(pi.val_pi() == 1);

    CHECK_THROWS_AS(RamifiedElement::zero(f, M).val_pi(), precision_error);
}

TEST_CASE("conjugation is a ring involution and norms multiply") {
    std::mt19937 rng(12345);
    for (int64_t p : {3, 5, 7}) {
        LocalField f{p, Pi0Unit::plus_one};
        int M = 5;
        std::uniform_int_distribution<int64_t> d(0, pow_u64(p, M) - 1);
        for (int it = 0; it < 200; ++it) {
            RamifiedElement x(f, M, d(rng), d(rng));
            RamifiedElement y(f, M, d(rng), d(rng));
            CHECK((x * y).conj() == x.conj() * y.conj());
            CHECK(x.conj().conj() == x);
            CHECK((x * y).norm() == x.norm() * y.norm());
            CHECK(x.norm().part_pi() == 0);  // norms land in F0
            auto vx = x.val_pi_opt(), vy = y.val_pi_opt();
            if (vx && vy && *vx + *vy < 2 * M) {
                auto vxy = (x * y).val_pi_opt();
                REQUIRE(vxy.has_value());
                CHECK(*vxy == *vx + *vy);
            }
        }
    }
}

TEST_CASE("chi_unit is multiplicative") {
    for (int64_t p : {3, 5, 7, 11}) {
        LocalField f{p, Pi0Unit::plus_one};
        for (int64_t u = 1; u < p; ++u) {
            CHECK(chi_unit(u, f) * chi_unit(u, f) == 1);
            for (int64_t v = 1; v < p; ++v)
                CHECK(chi_unit(u * v % p, f) == chi_unit(u, f) * chi_unit(v, f));
        }
    }
}

TEST_CASE("nonresidue pi0 unit class") {
    LocalField f{5, Pi0Unit::nonresidue};
    CHECK(chi_bar(f.u0(), 5) == -1);
    CHECK(f.u0() == 2);
    int M = 4;
    RamifiedElement pi = RamifiedElement::pi(f, M);
    CHECK(pi * pi == RamifiedElement::from_int(f, M, f.u0() * 5));

    // pi0-division must divide by u0*p, not bare p
    RamifiedElement pi0 = RamifiedElement::from_int(f, M, 10);
    CHECK(pi0.div_pi(2) == RamifiedElement::one(f, M - 1));
    RamifiedElement five = RamifiedElement::from_int(f, M, 5);
    CHECK(five.div_pi(2).part_f0() % 5 == 3);  // 5/pi0 = 1/2 = 3 mod 5
    CHECK(five.div_pi(2) * pi0.truncate(M - 1) == five.truncate(M - 1));
}

TEST_CASE("division, inversion, precision") {
    LocalField f{5, Pi0Unit::plus_one};
    int M = 6;
    RamifiedElement x(f, M, 10, 5);  // 10 + 5 pi = pi0 (2 + pi): val 2
    CHECK(x.val_pi() == 2);
    RamifiedElement y = x.div_pi(2);
    CHECK(y.val_pi() == 0);
    CHECK(y.prec() == M - 1);
    CHECK(y == RamifiedElement(f, M - 1, 2, 1));

    RamifiedElement u(f, M, 2, 3);
    CHECK((u * u.inverse()) == RamifiedElement::one(f, M));
    CHECK_THROWS_AS(RamifiedElement(f, M, 5, 0).inverse(), std::invalid_argument);

    // pi-division costs one pi0-digit per pair
    RamifiedElement z = RamifiedElement::pi(f, M);
    CHECK(z.div_pi(1).prec() == M - 1);
    CHECK(z.div_pi(1) == RamifiedElement::one(f, M - 1));
}

TEST_CASE("gauss number closes under g^2 = q chi_bar(-1)") {
    for (int64_t q : {3, 5, 7, 9, 13}) {
        GaussNumber g = GaussNumber::g(q);
        GaussNumber g2 = g * g;
        CHECK(g2.is_rational());
        CHECK(g2.r == Rat(q) * chi_bar_minus_one(q));
    }
    // (2 + g)(1 - g) at q = 3: 2 - 2g + g - g^2 = 2 - g - (-3) = 5 - g
    GaussNumber a(3, 2, 1), b(3, 1, -1);
    GaussNumber c = a * b;
    CHECK(c.r == 5);
    CHECK(c.s == -1);
}
