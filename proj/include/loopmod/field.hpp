#pragma once

#include <limits>
#include <string>
#include <vector>

#include "loopmod/cyclo.hpp"

namespace loopmod {

// Polynomial in q with Cyclo coefficients, constant term first, trailing
// zeros stripped (zero polynomial = empty coefficient vector).
class QPoly {
public:
    QPoly() = default;
    QPoly(const Cyclo& c);
    QPoly(long c) : QPoly(Cyclo(c)) {}
    explicit QPoly(std::vector<Cyclo> coeffs);

    static QPoly q_power(unsigned k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    Cyclo coeff(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Cyclo(0); }
    const std::vector<Cyclo>& coeffs() const { return coeffs_; }
    const Cyclo& leading() const;

    // Index of the lowest nonzero coefficient; poly must be nonzero.
    unsigned low_order() const;

    QPoly operator-() const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    QPoly scaled(const Cyclo& c) const;
    // Divide all coefficients by the leading one.
    QPoly monic() const;
    // Drop a factor q^k (requires low_order() >= k).
    QPoly shifted_down(unsigned k) const;

    static void divrem(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem);
    // Exact division; throws on nonzero remainder (internal bug trap).
    static QPoly exact_div(const QPoly& a, const QPoly& b);
    // Monic gcd via the Euclidean algorithm.
    static QPoly gcd(QPoly a, QPoly b);

    static int compare(const QPoly& a, const QPoly& b);
    std::string str() const;

private:
    void strip();
    std::vector<Cyclo> coeffs_;
};

// q-adic valuation value: an integer or +infinity (valuation of 0).
struct Valuation {
    static Valuation infinity() { return Valuation{0, true}; }
    static Valuation finite(long v) { return Valuation{v, false}; }

    long value = 0;
    bool infinite = false;

    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.infinite || b.infinite) return infinity();
        return finite(a.value + b.value);
    }
    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    friend bool operator>=(const Valuation& a, long v) { return a.infinite || a.value >= v; }
    std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

// Element of Q(zeta_m)(q): a reduced fraction of QPolys with monic
// denominator. The canonical form makes equality decidable.
class FieldElem {
public:
    FieldElem() : num_(), den_(Cyclo(1)) {}
    FieldElem(long v) : num_(Cyclo(v)), den_(Cyclo(1)) {}
    FieldElem(const Rat& v) : num_(Cyclo(v)), den_(Cyclo(1)) {}
    FieldElem(const Cyclo& v) : num_(v), den_(Cyclo(1)) {}
    FieldElem(QPoly num, QPoly den);
    explicit FieldElem(QPoly num) : num_(std::move(num)), den_(Cyclo(1)) {}

    // q^power, also for negative powers.
    static FieldElem q(long power = 1);
    static FieldElem zeta(unsigned m, long k = 1) { return FieldElem(Cyclo::zeta(m, k)); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    FieldElem operator-() const;
    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
    FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }

    FieldElem inverse() const;
    FieldElem pow(long e) const;

    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    // Order of vanishing at q = 0; +infinity for 0. Membership in the local
    // ring A is q_valuation() >= 0.
    Valuation q_valuation() const;
    // Image in A/qA = Q(zeta_m); NegativeValuation outside A.
    Cyclo reduce_q0() const;

    // True if the element is a constant (degree-0) rational number.
    bool is_rational_constant() const;
    Rat rational_value() const;

    static int compare(const FieldElem& a, const FieldElem& b);
    std::string str() const;

private:
    struct reduced_tag {};
    FieldElem(reduced_tag, QPoly num, QPoly den);
    void normalize();
    QPoly num_, den_;
};

}  // namespace loopmod
