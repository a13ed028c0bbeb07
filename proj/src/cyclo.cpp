#include "loopmod/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "loopmod/arithcomb.hpp"

namespace loopmod {

Rat make_rat(long num, long den) {
    if (den == 0) throw Error(errc::division_by_zero, "rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

namespace {

using Poly = std::vector<Rat>;  // constant term first, no trailing zeros

void strip(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient of a by b (exact division expected for cyclotomic construction).
Poly poly_div(Poly a, const Poly& b) {
    Poly quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        quo[shift] = c;
        for (size_t k = 0; k < b.size(); ++k) a[shift + k] -= c * b[k];
        strip(a);
    }
    return quo;
}

Poly compute_cyclotomic(unsigned m) {
    // x^m - 1 divided by Phi_d for every proper divisor d of m.
    Poly num(m + 1, Rat(0));
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d == 0) num = poly_div(std::move(num), cyclotomic_poly(d));
    }
    return num;
}

std::map<unsigned, Poly> g_phi_cache;
std::mutex g_phi_mutex;

}  // namespace

const std::vector<Rat>& cyclotomic_poly(unsigned m) {
    if (m == 0) throw Error(errc::config_error, "cyclotomic order must be positive");
    {
        std::lock_guard<std::mutex> lock(g_phi_mutex);
        auto it = g_phi_cache.find(m);
        if (it != g_phi_cache.end()) return it->second;
    }
    Poly p = compute_cyclotomic(m);
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    return g_phi_cache.emplace(m, std::move(p)).first->second;
}

namespace {

// Reduce a coefficient vector (any length) mod Phi_m to length phi(m).
std::vector<Rat> reduce_mod_phi(unsigned m, std::vector<Rat> c) {
    const auto& phi = cyclotomic_poly(m);
    const size_t deg = phi.size() - 1;
    while (c.size() > deg) {
        Rat top = c.back();
        c.pop_back();
        if (top == 0) continue;
        size_t shift = c.size() - deg;
        for (size_t k = 0; k < deg; ++k) c[shift + k] -= top * phi[k];
    }
    c.resize(deg, Rat(0));
    return c;
}

}  // namespace

Cyclo Cyclo::zeta(unsigned m, long k) {
    if (m == 0) throw Error(errc::config_error, "cyclotomic order must be positive");
    long e = k % static_cast<long>(m);
    if (e < 0) e += m;
    std::vector<Rat> c(static_cast<size_t>(e) + 1, Rat(0));
    c.back() = 1;
    return Cyclo(m, reduce_mod_phi(m, std::move(c)));
}

Cyclo Cyclo::from_coords(unsigned m, std::vector<Rat> coords) {
    return Cyclo(m, reduce_mod_phi(m, std::move(coords)));
}

bool Cyclo::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rat& r) { return r == 0; });
}

bool Cyclo::is_rational() const {
    for (size_t k = 1; k < coords_.size(); ++k)
        if (coords_[k] != 0) return false;
    return true;
}

Rat Cyclo::rational_value() const {
    if (!is_rational()) throw Error(errc::order_mismatch, "value is not rational: " + str());
    return coords_[0];
}

void Cyclo::lift_to(unsigned m) {
    if (m_ == m) return;
    if (m_ != 1) throw Error(errc::order_mismatch, "cannot mix cyclotomic orders");
    Rat v = coords_[0];
    m_ = m;
    coords_.assign(euler_phi(m), Rat(0));
    coords_[0] = v;
}

void Cyclo::align(Cyclo& a, Cyclo& b) {
    if (a.m_ == b.m_) return;
    if (a.m_ == 1)
        a.lift_to(b.m_);
    else if (b.m_ == 1)
        b.lift_to(a.m_);
    else
        throw Error(errc::order_mismatch, "cannot mix cyclotomic orders " + std::to_string(a.m_) +
                                              " and " + std::to_string(b.m_));
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    Cyclo x = a, y = b;
    Cyclo::align(x, y);
    for (size_t k = 0; k < x.coords_.size(); ++k) x.coords_[k] += y.coords_[k];
    return x;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    Cyclo x = a, y = b;
    Cyclo::align(x, y);
    std::vector<Rat> prod(x.coords_.size() + y.coords_.size() - 1, Rat(0));
    for (size_t i = 0; i < x.coords_.size(); ++i) {
        if (x.coords_[i] == 0) continue;
        for (size_t j = 0; j < y.coords_.size(); ++j) {
            if (y.coords_[j] == 0) continue;
            prod[i + j] += x.coords_[i] * y.coords_[j];
        }
    }
    return Cyclo::from_coords(x.m_, std::move(prod));
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw Error(errc::division_by_zero, "inverse of zero");
    if (is_rational()) {
        Cyclo r = *this;
        r.coords_[0] = Rat(1) / r.coords_[0];
        return r;
    }
    // Extended Euclid on (a, Phi_m) over Q[x]: u*a + v*Phi = gcd = const.
    using Poly = std::vector<Rat>;
    Poly r0 = coords_;
    while (!r0.empty() && r0.back() == 0) r0.pop_back();
    Poly r1 = cyclotomic_poly(m_);
    Poly u0 = {Rat(1)}, u1 = {};
    auto strip = [](Poly& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    while (!r1.empty()) {
        // r0 = quo*r1 + rem
        Poly rem = r0;
        Poly quo(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, Rat(0));
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rat c = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            quo[shift] = c;
            for (size_t k = 0; k < r1.size(); ++k) rem[shift + k] -= c * r1[k];
            strip(rem);
        }
        // u2 = u0 - quo*u1
        Poly u2 = u0;
        u2.resize(std::max(u2.size(), quo.size() + (u1.empty() ? 0 : u1.size() - 1)), Rat(0));
        for (size_t i = 0; i < quo.size(); ++i) {
            if (quo[i] == 0) continue;
            for (size_t j = 0; j < u1.size(); ++j) u2[i + j] -= quo[i] * u1[j];
        }
        strip(u2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    // r0 is a nonzero constant (Phi_m irreducible over Q, a nonzero).
    if (r0.size() != 1)
        throw Error(errc::division_by_zero, "element not invertible mod Phi_m");
    Rat g = r0[0];
    for (auto& c : u0) c /= g;
    return Cyclo::from_coords(m_, std::move(u0));
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    Cyclo x = a, y = b;
    Cyclo::align(x, y);
    return x.coords_ == y.coords_;
}

int Cyclo::compare(const Cyclo& a, const Cyclo& b) {
    Cyclo x = a, y = b;
    if (x.m_ != y.m_ && (x.m_ == 1 || y.m_ == 1)) align(x, y);
    if (x.m_ != y.m_) return x.m_ < y.m_ ? -1 : 1;
    for (size_t k = 0; k < x.coords_.size(); ++k) {
        int c = cmp(x.coords_[k], y.coords_[k]);
        if (c != 0) return c;
    }
    return 0;
}

std::string Cyclo::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coords_.size(); ++k) {
        const Rat& c = coords_[k];
        if (c == 0) continue;
        Rat a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string mag = a.get_str();
        if (k == 0) {
            os << mag;
        } else {
            if (mag != "1") os << mag << "*";
            os << "z";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) return "0";
    return os.str();
}

}  // namespace loopmod
