#include "loopmod/arithcomb.hpp"

#include <algorithm>
#include <numeric>

#include "doctest.h"

using namespace loopmod;

TEST_CASE("euler phi and moebius") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(6) == 2);
    CHECK(euler_phi(12) == 4);
    CHECK(moebius(1) == 1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(6) == 1);
    CHECK(moebius(30) == -1);
}

TEST_CASE("twisted euler function") {
    CHECK(phi_twisted(0, 5) == Rat(4));
    CHECK(phi_twisted(1, 2) == Rat(-1));
    CHECK(phi_twisted(2, 4) == Rat(-2));
    // Depends on k only through gcd(|k|, d).
    for (long k = -9; k <= 9; ++k)
        for (unsigned long d = 1; d <= 10; ++d) {
            long g = k == 0 ? static_cast<long>(d) : std::gcd(std::abs(k), static_cast<long>(d));
            CHECK(phi_twisted(k, d) == phi_twisted(g, d));
        }
    // k = 0 gives the plain Euler function.
    for (unsigned long d = 1; d <= 12; ++d)
        CHECK(phi_twisted(0, d) == Rat(static_cast<long>(euler_phi(d))));
}

TEST_CASE("maj and descents") {
    CHECK(maj(Word{1, 1, 1, 1}) == 0);
    CHECK(maj(Word{1, 0}) == 1);   // i_2 < i_1 puts r = 1 in desc
    CHECK(maj(Word{0, 1, 0}) == 2);
    CHECK(maj(Word{}) == 0);
    CHECK(descents(Word{2, 0, 1, 0}) == std::vector<unsigned>{1, 3});
}

TEST_CASE("maj census by residue") {
    CHECK(count_maj_by_residue(Composition({3, 0}), 3) ==
          std::vector<mpz_class>{1, 0, 0});
    CHECK(count_maj_by_residue(Composition({1, 1}), 2) == std::vector<mpz_class>{1, 1});
    CHECK(count_maj_by_residue(Composition({2, 1}), 3) == std::vector<mpz_class>{1, 1, 1});
}

TEST_CASE("closed count examples") {
    CHECK(closed_count(Composition({4, 0, 0}), 4, 0) == 1);  // Gauss identity
    CHECK(closed_count(Composition({2, 0}), 2, 0) == 1);
    CHECK(closed_count(Composition({2, 0}), 2, 1) == 0);
    CHECK(closed_count(Composition({1, 1}), 2, 0) == 1);
    CHECK(closed_count(Composition({1, 1}), 2, 1) == 1);
    CHECK_THROWS_AS(closed_count(Composition({1, 1}), 3, 0), Error);
}

TEST_CASE("closed count equals the census for all small cases") {
    for (unsigned n = 1; n <= 3; ++n) {
        for (unsigned m = 1; m <= 8; ++m) {
            if (n == 3 && m > 6) continue;  // keep the census affordable
            for (const Composition& c : compositions_of(m, n + 1)) {
                std::vector<mpz_class> census = count_maj_by_residue(c, m);
                mpz_class total = 0;
                for (unsigned k = 0; k < m; ++k) {
                    CAPTURE(c.str());
                    CAPTURE(m);
                    CAPTURE(k);
                    CHECK(closed_count(c, m, static_cast<long>(k)) == census[k]);
                    total += census[k];
                }
                CHECK(total == multinomial(c));
            }
        }
    }
}

TEST_CASE("closed count is invariant under permuting parts") {
    Composition base({3, 2, 1});
    std::vector<unsigned> parts = base.parts;
    std::sort(parts.begin(), parts.end());
    do {
        for (unsigned k = 0; k < 6; ++k)
            CHECK(closed_count(Composition(parts), 6, k) == closed_count(base, 6, k));
    } while (std::next_permutation(parts.begin(), parts.end()));
}

TEST_CASE("word enumeration is lexicographic and complete") {
    auto words = words_with_multiplicities(Composition({1, 1, 1}));
    CHECK(words.size() == 6);
    CHECK(std::is_sorted(words.begin(), words.end()));
    CHECK(words.front() == Word{0, 1, 2});
    CHECK(words.back() == Word{2, 1, 0});
    CHECK(words_with_multiplicities(Composition({2, 0})).size() == 1);
}
