#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "loopmod/error.hpp"

namespace loopmod {

using Rat = mpq_class;

// Rational from numerator/denominator, canonicalized.
Rat make_rat(long num, long den = 1);

// Coefficients of the m-th cyclotomic polynomial Phi_m, constant term first,
// monic of degree phi(m). Computed by dividing x^m - 1 by Phi_d for proper
// divisors d and cached per m.
const std::vector<Rat>& cyclotomic_poly(unsigned m);

// Element of Q(zeta_m), represented by its coordinates in the power basis
// 1, z, ..., z^{phi(m)-1} of Q[x]/Phi_m(x). Order m = 1 means a plain
// rational; binary operations lift rationals into the other operand's field
// and reject mixing two different nontrivial orders.
class Cyclo {
public:
    Cyclo() : m_(1), coords_(1, Rat(0)) {}
    Cyclo(long value) : m_(1), coords_(1, Rat(value)) {}
    Cyclo(const Rat& value) : m_(1), coords_(1, value) {}

    // zeta_m^k, reduced mod Phi_m.
    static Cyclo zeta(unsigned m, long k = 1);
    static Cyclo from_coords(unsigned m, std::vector<Rat> coords);

    unsigned order() const { return m_; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    // Throws OrderMismatch if the element is not rational.
    Rat rational_value() const;

    Cyclo operator-() const;
    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

    // Multiplicative inverse; DivisionByZero on zero.
    Cyclo inverse() const;

    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    // Deterministic total order on canonical forms (for orbit representatives
    // and stable output); not compatible with any ring structure.
    static int compare(const Cyclo& a, const Cyclo& b);

    // Canonical rendering, e.g. "0", "-1/2", "z^2", "1 - 3/2*z".
    std::string str() const;

private:
    Cyclo(unsigned m, std::vector<Rat> coords) : m_(m), coords_(std::move(coords)) {}
    static void align(Cyclo& a, Cyclo& b);
    void lift_to(unsigned m);

    unsigned m_;
    std::vector<Rat> coords_;  // length phi(m_)
};

}  // namespace loopmod
