#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "loopmod/error.hpp"

namespace loopmod {

using Rat = mpq_class;

unsigned long euler_phi(unsigned long d);

// Classical Moebius function: 0 on non-squarefree d, (-1)^{#primes} otherwise.
int moebius(unsigned long d);

// Twisted Euler function phi_k(d) = phi(d) mu(d/gcd(d,k)) / phi(d/gcd(d,k)).
// Depends on k only through gcd(|k|, d); gcd(d, 0) = d.
Rat phi_twisted(long k, unsigned long d);

// Letter multiplicities (k_0,...,k_n); parts sum to the word length.
struct Composition {
    std::vector<unsigned> parts;

    Composition() = default;
    explicit Composition(std::vector<unsigned> p) : parts(std::move(p)) {}

    unsigned total() const;
    size_t size() const { return parts.size(); }
    unsigned operator[](size_t i) const { return parts[i]; }

    friend bool operator==(const Composition& a, const Composition& b) {
        return a.parts == b.parts;
    }
    friend bool operator<(const Composition& a, const Composition& b) {
        return a.parts < b.parts;
    }
    std::string str() const;
};

// All compositions of `total` into `parts` non-negative parts, in
// lexicographic order.
std::vector<Composition> compositions_of(unsigned total, unsigned parts);

// Sequence (i_1,...,i_N) over {0,...,n}. Position 1 is the rightmost tensor
// factor: the word encodes v_{i_N} (x) ... (x) v_{i_1}.
using Word = std::vector<int>;

// Descent positions {r : i_{r+1} < i_r, 1 <= r < N}.
std::vector<unsigned> descents(const Word& w);

// Major index: sum of descents, 0 for the empty descent set.
unsigned maj(const Word& w);

Composition letter_multiplicities(const Word& w, unsigned n);

mpz_class multinomial(const Composition& c);

// Words with the given letter multiplicities, lexicographic in (i_1,...,i_N).
std::vector<Word> words_with_multiplicities(const Composition& c);

// Entry k counts words with multiplicities c and Maj = k (mod m).
std::vector<mpz_class> count_maj_by_residue(const Composition& c, unsigned m);

// Closed Moebius/Euler form of the same count:
//   (1/m) sum_{d|m} phi_k(d) multinomial(m/d; k_0/d,...,k_n/d),
// the d-term present only when d divides every part. Requires sum(c) = m;
// throws NonIntegerResult if the sum fails to be a non-negative integer.
mpz_class closed_count(const Composition& c, unsigned m, long k);

}  // namespace loopmod
