#pragma once

#include <functional>
#include <string>
#include <vector>

#include "loopmod/braiding.hpp"

namespace loopmod {

struct CharQuery {
    unsigned n = 1;
    unsigned m = 1;
    long s = 0;  // component residue, 0 <= s < m
    Composition composition;
    long r = 0;  // delta coefficient
};

// Closed form of dim L^s(V(pi))_{nu + r delta} for the natural tensor-power
// family: (1/m) sum_{d|m} phi_{r-s}(d) multinomial(m/d; composition/d), a
// d-term present only when d divides every part. NonIntegerResult if the sum
// is not a non-negative integer.
mpz_class closed_dim(const CharQuery& q);

// Weight multiplicity dim V^{1/d}_{nu/d}, supplied per divisor d with the
// scaled composition.
using MultiplicityFn = std::function<mpz_class(unsigned d, const Composition& scaled)>;
// Whether the divisor-d term enters for the given weight; the default is the
// composition divisibility rule.
using TermPredicate = std::function<bool(unsigned d, const Composition& c)>;

mpz_class multinomial_multiplicity(unsigned d, const Composition& scaled);
bool divides_all_parts(unsigned d, const Composition& c);

// The classical loop-character formula with user-supplied weight
// multiplicities: (1/m) sum_{d|m} phi_{r-s}(d) mult(d, composition/d).
mpz_class classical_dim(const CharQuery& q, const MultiplicityFn& mult = multinomial_multiplicity,
                        const TermPredicate& include = divides_all_parts);

struct CharacterRow {
    Composition composition;
    std::vector<long> varpi;
    unsigned k = 0;  // residue s - r mod m
    mpz_class closed;
    mpz_class brute;
    mpz_class maj_census;
};

struct ComparisonReport {
    unsigned n = 1;
    unsigned m = 1;
    std::vector<CharacterRow> rows;
    std::vector<std::string> discrepancies;

    bool ok() const { return discrepancies.empty(); }
};

// For every composition of m and every residue k, compare the closed formula
// against the eta-eigenspace dimensions and the Maj census. Disagreements are
// collected, not thrown.
ComparisonReport compare_all(unsigned n, unsigned m, unsigned jobs = 1);

}  // namespace loopmod
