#include "loopmod/cyclo.hpp"

#include "loopmod/arithcomb.hpp"

#include <random>

#include "doctest.h"

using namespace loopmod;

TEST_CASE("cyclotomic polynomials") {
    // Phi_1 = x - 1, Phi_2 = x + 1, Phi_3 = x^2 + x + 1, Phi_4 = x^2 + 1,
    // Phi_6 = x^2 - x + 1, Phi_12 = x^4 - x^2 + 1.
    CHECK(cyclotomic_poly(1) == std::vector<Rat>{Rat(-1), Rat(1)});
    CHECK(cyclotomic_poly(2) == std::vector<Rat>{Rat(1), Rat(1)});
    CHECK(cyclotomic_poly(3) == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
    CHECK(cyclotomic_poly(4) == std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
    CHECK(cyclotomic_poly(6) == std::vector<Rat>{Rat(1), Rat(-1), Rat(1)});
    CHECK(cyclotomic_poly(12) == std::vector<Rat>{Rat(1), Rat(0), Rat(-1), Rat(0), Rat(1)});
}

TEST_CASE("zeta powers reduce mod Phi_m") {
    CHECK(Cyclo::zeta(2) == Cyclo(-1));
    CHECK(Cyclo::zeta(2) * Cyclo::zeta(2) == Cyclo(1));
    CHECK(Cyclo::zeta(4) * Cyclo::zeta(4) == Cyclo(-1));
    CHECK(Cyclo::zeta(3) + Cyclo::zeta(3, 2) == Cyclo(-1));
    for (unsigned m : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 12u}) {
        CAPTURE(m);
        Cyclo z = Cyclo::zeta(m);
        Cyclo power(1);
        for (unsigned k = 0; k < m; ++k) power *= z;
        CHECK(power == Cyclo(1));
        // Phi_m(zeta) = 0
        const auto& phi = cyclotomic_poly(m);
        Cyclo value(0);
        Cyclo zk(1);
        for (size_t k = 0; k < phi.size(); ++k) {
            value += Cyclo(phi[k]) * zk;
            zk *= z;
        }
        CHECK(value.is_zero());
    }
}

TEST_CASE("rationals lift into any order") {
    Cyclo half(make_rat(1, 2));
    CHECK(half + Cyclo::zeta(6) == Cyclo::zeta(6) + half);
    CHECK((half * Cyclo(2)).is_rational());
    CHECK_THROWS_AS(Cyclo::zeta(3) + Cyclo::zeta(4), Error);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> small(-4, 4);
    for (unsigned m : {2u, 3u, 4u, 6u}) {
        unsigned deg = static_cast<unsigned>(euler_phi(m));
        auto random_elem = [&]() {
            std::vector<Rat> coords(deg);
            for (auto& c : coords) c = make_rat(small(rng), 1 + std::abs(small(rng)));
            return Cyclo::from_coords(m, std::move(coords));
        };
        for (int trial = 0; trial < 25; ++trial) {
            Cyclo a = random_elem(), b = random_elem(), c = random_elem();
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == Cyclo(1));
        }
    }
    CHECK_THROWS_AS(Cyclo(0).inverse(), Error);
}

TEST_CASE("inverse of zeta is its conjugate power") {
    for (unsigned m : {2u, 3u, 4u, 5u, 6u}) {
        CHECK(Cyclo::zeta(m).inverse() == Cyclo::zeta(m, static_cast<long>(m) - 1));
    }
}

TEST_CASE("canonical compare is a strict total order on samples") {
    std::vector<Cyclo> values = {Cyclo(0), Cyclo(1), Cyclo(-1), Cyclo::zeta(4),
                                 Cyclo::zeta(4, 3), Cyclo(make_rat(1, 2))};
    for (const auto& a : values)
        for (const auto& b : values) {
            int ab = Cyclo::compare(a, b);
            int ba = Cyclo::compare(b, a);
            CHECK(ab == -ba);
            CHECK((ab == 0) == (a == b));
        }
}
