#include "loopmod/field.hpp"

#include <sstream>

namespace loopmod {

QPoly::QPoly(const Cyclo& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

QPoly::QPoly(std::vector<Cyclo> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

QPoly QPoly::q_power(unsigned k) {
    std::vector<Cyclo> c(k + 1, Cyclo(0));
    c.back() = Cyclo(1);
    return QPoly(std::move(c));
}

bool QPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == Cyclo(1); }

const Cyclo& QPoly::leading() const {
    if (is_zero()) throw Error(errc::division_by_zero, "leading coefficient of zero polynomial");
    return coeffs_.back();
}

unsigned QPoly::low_order() const {
    for (size_t k = 0; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero()) return static_cast<unsigned>(k);
    throw Error(errc::division_by_zero, "low order of zero polynomial");
}

void QPoly::strip() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Cyclo> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Cyclo(0));
    for (size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
    return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Cyclo> c(a.coeffs_.size() + b.coeffs_.size() - 1, Cyclo(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return QPoly(std::move(c));
}

QPoly QPoly::scaled(const Cyclo& c) const {
    if (c.is_zero()) return QPoly();
    QPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

QPoly QPoly::monic() const { return scaled(leading().inverse()); }

QPoly QPoly::shifted_down(unsigned k) const {
    if (is_zero()) return QPoly();
    if (low_order() < k)
        throw Error(errc::division_by_zero, "shifted_down would truncate nonzero terms");
    return QPoly(std::vector<Cyclo>(coeffs_.begin() + k, coeffs_.end()));
}

void QPoly::divrem(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
    if (b.is_zero()) throw Error(errc::division_by_zero, "polynomial division by zero");
    rem = a;
    std::vector<Cyclo> q(a.coeffs_.size() >= b.coeffs_.size()
                             ? a.coeffs_.size() - b.coeffs_.size() + 1
                             : 0,
                         Cyclo(0));
    Cyclo lead_inv = b.leading().inverse();
    while (!rem.is_zero() && rem.coeffs_.size() >= b.coeffs_.size()) {
        Cyclo c = rem.coeffs_.back() * lead_inv;
        size_t shift = rem.coeffs_.size() - b.coeffs_.size();
        q[shift] = c;
        for (size_t k = 0; k < b.coeffs_.size(); ++k) rem.coeffs_[shift + k] -= c * b.coeffs_[k];
        rem.strip();
    }
    quo = QPoly(std::move(q));
}

QPoly QPoly::exact_div(const QPoly& a, const QPoly& b) {
    QPoly quo, rem;
    divrem(a, b, quo, rem);
    if (!rem.is_zero())
        throw Error(errc::division_by_zero, "exact polynomial division left a remainder");
    return quo;
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    // Remainders are re-scaled to monic each round; the raw Euclidean
    // sequence blows up rational coefficient sizes catastrophically.
    while (!b.is_zero()) {
        b = b.monic();
        QPoly quo, rem;
        divrem(a, b, quo, rem);
        a = std::move(b);
        b = std::move(rem);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

int QPoly::compare(const QPoly& a, const QPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (size_t k = 0; k < a.coeffs_.size(); ++k) {
        int c = Cyclo::compare(a.coeffs_[k], b.coeffs_[k]);
        if (c != 0) return c;
    }
    return 0;
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = coeffs_.size(); k-- > 0;) {
        const Cyclo& c = coeffs_[k];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool neg = cs.size() > 1 && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
                   cs.find(" - ") == std::string::npos;
        if (!first)
            os << (neg ? " - " : " + ");
        else if (neg)
            os << "-";
        if (neg) cs = cs.substr(1);
        first = false;
        bool composite = cs.find(' ') != std::string::npos;
        if (k == 0) {
            os << (composite ? "(" + cs + ")" : cs);
        } else {
            if (cs != "1") os << (composite ? "(" + cs + ")" : cs) << "*";
            os << "q";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

FieldElem::FieldElem(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(errc::division_by_zero, "zero denominator");
    normalize();
}

// Numerator and denominator already coprime; only canonicalize.
FieldElem::FieldElem(reduced_tag, QPoly num, QPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) {
        den_ = QPoly(Cyclo(1));
        return;
    }
    Cyclo lead_inv = den_.leading().inverse();
    num_ = num_.scaled(lead_inv);
    den_ = den_.scaled(lead_inv);
}

FieldElem FieldElem::q(long power) {
    if (power >= 0) return FieldElem(QPoly::q_power(static_cast<unsigned>(power)));
    return FieldElem(QPoly(Cyclo(1)), QPoly::q_power(static_cast<unsigned>(-power)));
}

void FieldElem::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly(Cyclo(1));
        return;
    }
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = QPoly::exact_div(num_, g);
        den_ = QPoly::exact_div(den_, g);
    }
    Cyclo lead_inv = den_.leading().inverse();
    num_ = num_.scaled(lead_inv);
    den_ = den_.scaled(lead_inv);
}

bool FieldElem::is_one() const { return num_.is_one() && den_.is_one(); }

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    r.num_ = -r.num_;
    return r;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Work over the least common denominator; any residual common factor of
    // the sum divides the denominator gcd, so the final reduction is small.
    QPoly g = QPoly::gcd(a.den_, b.den_);
    if (g.degree() <= 0)
        return FieldElem(FieldElem::reduced_tag{}, a.num_ * b.den_ + b.num_ * a.den_,
                         a.den_ * b.den_);
    QPoly bden_red = QPoly::exact_div(b.den_, g);
    QPoly num = a.num_ * bden_red + b.num_ * QPoly::exact_div(a.den_, g);
    QPoly den = a.den_ * bden_red;
    if (num.is_zero()) return FieldElem(0);
    QPoly h = QPoly::gcd(num, g);
    if (h.degree() > 0) {
        num = QPoly::exact_div(num, h);
        den = QPoly::exact_div(den, h);
    }
    return FieldElem(FieldElem::reduced_tag{}, std::move(num), std::move(den));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    if (a.is_zero() || b.is_zero()) return FieldElem(0);
    // Cross-reduce before multiplying so gcds run on small operands.
    QPoly an = a.num_, bd = b.den_;
    QPoly g1 = QPoly::gcd(an, bd);
    if (g1.degree() > 0) {
        an = QPoly::exact_div(an, g1);
        bd = QPoly::exact_div(bd, g1);
    }
    QPoly bn = b.num_, ad = a.den_;
    QPoly g2 = QPoly::gcd(bn, ad);
    if (g2.degree() > 0) {
        bn = QPoly::exact_div(bn, g2);
        ad = QPoly::exact_div(ad, g2);
    }
    return FieldElem(FieldElem::reduced_tag{}, an * bn, ad * bd);
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw Error(errc::division_by_zero, "inverse of zero");
    return FieldElem(reduced_tag{}, den_, num_);
}

FieldElem FieldElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElem result(1);
    FieldElem base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Valuation FieldElem::q_valuation() const {
    if (is_zero()) return Valuation::infinity();
    return Valuation::finite(static_cast<long>(num_.low_order()) -
                             static_cast<long>(den_.low_order()));
}

Cyclo FieldElem::reduce_q0() const {
    Valuation v = q_valuation();
    if (v.infinite) return Cyclo(0);
    if (v.value < 0)
        throw Error(errc::negative_valuation, "element lies outside the local ring A: " + str());
    if (v.value > 0) return Cyclo(0);
    unsigned lo = den_.low_order();
    return num_.coeff(lo) * den_.coeff(lo).inverse();
}

bool FieldElem::is_rational_constant() const {
    return den_.is_one() && (num_.is_zero() || (num_.degree() == 0 && num_.coeff(0).is_rational()));
}

Rat FieldElem::rational_value() const {
    if (!is_rational_constant())
        throw Error(errc::non_integer_result, "expected a rational constant, got " + str());
    return num_.is_zero() ? Rat(0) : num_.coeff(0).rational_value();
}

int FieldElem::compare(const FieldElem& a, const FieldElem& b) {
    int c = QPoly::compare(a.num_, b.num_);
    if (c != 0) return c;
    return QPoly::compare(a.den_, b.den_);
}

std::string FieldElem::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str();
    std::string d = den_.str();
    auto wrap = [](const std::string& s) {
        bool atom = s.find(' ') == std::string::npos && s.find('*') == std::string::npos;
        return atom ? s : "(" + s + ")";
    };
    return wrap(n) + "/" + wrap(d);
}

}  // namespace loopmod
