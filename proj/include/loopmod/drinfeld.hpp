#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loopmod/field.hpp"

namespace loopmod {

// Polynomial in u with FieldElem coefficients, constant term first.
using UPoly = std::vector<FieldElem>;

UPoly upoly_one();
UPoly upoly_mul(const UPoly& a, const UPoly& b);
// Substitute u -> c*u.
UPoly upoly_twist(const UPoly& p, const FieldElem& c);
UPoly upoly_from_roots(const std::vector<FieldElem>& roots);  // prod (1 - b u)
int upoly_degree(const UPoly& p);
bool upoly_equal(const UPoly& a, const UPoly& b);
std::string upoly_str(const UPoly& p);

// n-tuple of constant-term-1 polynomials in u, optionally in factored form
// (multiset of inverse roots b per component, poly = prod (1 - b u)).
struct DrinfeldTuple {
    unsigned n = 1;
    std::vector<UPoly> polys;                                // n entries
    std::optional<std::vector<std::vector<FieldElem>>> roots;

    // Component access is 1-based to match pi_1, ..., pi_n.
    const UPoly& poly(unsigned i) const { return polys.at(i - 1); }
    // Coefficient pi_{i,r} (0 beyond the degree).
    FieldElem coeff(unsigned i, unsigned r) const;
    unsigned degree(unsigned i) const { return static_cast<unsigned>(upoly_degree(poly(i))); }
    bool is_trivial() const;

    static DrinfeldTuple from_roots(unsigned n, std::vector<std::vector<FieldElem>> roots);
    static DrinfeldTuple from_coeffs(unsigned n, std::vector<UPoly> polys);

    // The natural-power family (prod_{j=0}^{m-1}(1 - zeta^j u), 1, ..., 1).
    static DrinfeldTuple natural_power(unsigned n, unsigned m);

    std::string str() const;
};

// Largest m such that every pi_i is a polynomial in u^m, i.e. the gcd of all
// indices r with pi_{i,r} != 0. TrivialTuple when every pi_i = 1.
unsigned detect_period(const DrinfeldTuple& pi);

// pi^0: one representative inverse root per zeta_m-orbit, smallest under the
// canonical order. Requires factored form (FactoredFormRequired) and a
// zeta_m-stable root multiset (NotPeriodic).
DrinfeldTuple extract_base(const DrinfeldTuple& pi, unsigned m);

// pi^{1/d} with pi_i^{1/d}(u) = prod_{j=0}^{m/d-1} pi_i^0(zeta^{jd} u).
// NotADivisor unless d | m.
DrinfeldTuple power_quotient(const DrinfeldTuple& pi0, unsigned m, unsigned d);

// pi^-: u^{deg pi_i} pi_i(1/u), renormalized to constant term 1.
DrinfeldTuple minus_tuple(const DrinfeldTuple& pi);

// The assignment chi_{pi,d}: P_{i,+-r} -> pi^{+-}_{i,r} t^{+-r},
// K_i -> q^{deg pi_i}, D -> q^d.
struct HighestWeightChar {
    DrinfeldTuple base;
    DrinfeldTuple minus;
    long d = 0;

    struct Monomial {
        FieldElem coefficient;
        long t_power;
    };
    // chi(P_{i,r}) for i in 1..n and any integer r.
    Monomial P(unsigned i, long r) const;
    FieldElem K(unsigned i) const { return FieldElem::q(base.degree(i)); }
    FieldElem D() const { return FieldElem::q(d); }
};

HighestWeightChar chi_of(const DrinfeldTuple& pi, long d);

}  // namespace loopmod
