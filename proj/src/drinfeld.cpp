#include "loopmod/drinfeld.hpp"

#include <algorithm>
#include <list>
#include <numeric>
#include <sstream>

namespace loopmod {

UPoly upoly_one() { return UPoly{FieldElem(1)}; }

namespace {

void upoly_strip(UPoly& p) {
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

}  // namespace

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    UPoly c(a.size() + b.size() - 1, FieldElem(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    upoly_strip(c);
    return c;
}

UPoly upoly_twist(const UPoly& p, const FieldElem& c) {
    UPoly out = p;
    FieldElem power(1);
    for (size_t r = 1; r < out.size(); ++r) {
        power *= c;
        out[r] *= power;
    }
    upoly_strip(out);
    return out;
}

UPoly upoly_from_roots(const std::vector<FieldElem>& roots) {
    UPoly p = upoly_one();
    for (const FieldElem& b : roots) p = upoly_mul(p, UPoly{FieldElem(1), -b});
    return p;
}

int upoly_degree(const UPoly& p) {
    for (size_t r = p.size(); r-- > 0;)
        if (!p[r].is_zero()) return static_cast<int>(r);
    return 0;
}

bool upoly_equal(const UPoly& a, const UPoly& b) {
    size_t len = std::max(a.size(), b.size());
    for (size_t r = 0; r < len; ++r) {
        FieldElem x = r < a.size() ? a[r] : FieldElem(0);
        FieldElem y = r < b.size() ? b[r] : FieldElem(0);
        if (x != y) return false;
    }
    return true;
}

std::string upoly_str(const UPoly& p) {
    std::ostringstream os;
    bool first = true;
    for (size_t r = 0; r < p.size(); ++r) {
        if (p[r].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << p[r].str() << ")";
        if (r >= 1) os << "*u" << (r > 1 ? "^" + std::to_string(r) : "");
    }
    if (first) return "0";
    return os.str();
}

FieldElem DrinfeldTuple::coeff(unsigned i, unsigned r) const {
    const UPoly& p = poly(i);
    return r < p.size() ? p[r] : FieldElem(0);
}

bool DrinfeldTuple::is_trivial() const {
    for (unsigned i = 1; i <= n; ++i)
        if (degree(i) > 0) return false;
    return true;
}

DrinfeldTuple DrinfeldTuple::from_roots(unsigned n, std::vector<std::vector<FieldElem>> roots) {
    if (roots.size() != n)
        throw Error(errc::config_error, "expected one root list per tuple component");
    DrinfeldTuple t;
    t.n = n;
    for (const auto& component : roots) {
        for (const auto& b : component)
            if (b.is_zero()) throw Error(errc::config_error, "inverse roots must be nonzero");
        t.polys.push_back(upoly_from_roots(component));
    }
    t.roots = std::move(roots);
    return t;
}

DrinfeldTuple DrinfeldTuple::from_coeffs(unsigned n, std::vector<UPoly> polys) {
    if (polys.size() != n)
        throw Error(errc::config_error, "expected one polynomial per tuple component");
    for (auto& p : polys) {
        if (p.empty() || !p[0].is_one())
            throw Error(errc::config_error, "tuple polynomials must have constant term 1");
        upoly_strip(p);
    }
    DrinfeldTuple t;
    t.n = n;
    t.polys = std::move(polys);
    return t;
}

DrinfeldTuple DrinfeldTuple::natural_power(unsigned n, unsigned m) {
    std::vector<std::vector<FieldElem>> roots(n);
    for (unsigned j = 0; j < m; ++j) roots[0].push_back(FieldElem::zeta(m, j));
    return from_roots(n, std::move(roots));
}

std::string DrinfeldTuple::str() const {
    std::ostringstream os;
    os << "(";
    for (unsigned i = 1; i <= n; ++i) {
        if (i > 1) os << ", ";
        os << upoly_str(poly(i));
    }
    os << ")";
    return os.str();
}

unsigned detect_period(const DrinfeldTuple& pi) {
    unsigned g = 0;
    for (unsigned i = 1; i <= pi.n; ++i) {
        const UPoly& p = pi.poly(i);
        for (unsigned r = 1; r < p.size(); ++r)
            if (!p[r].is_zero()) g = std::gcd(g, r);
    }
    if (g == 0) throw Error(errc::trivial_tuple, "period of the all-ones tuple is undefined");
    return g;
}

DrinfeldTuple extract_base(const DrinfeldTuple& pi, unsigned m) {
    if (!pi.roots)
        throw Error(errc::factored_form_required, "extract_base needs the tuple in factored form");
    if (m == 0) throw Error(errc::config_error, "period must be positive");
    FieldElem zeta = FieldElem::zeta(m);

    std::vector<std::vector<FieldElem>> base_roots(pi.n);
    for (unsigned i = 0; i < pi.n; ++i) {
        std::list<FieldElem> pool((*pi.roots)[i].begin(), (*pi.roots)[i].end());
        while (!pool.empty()) {
            auto min_it = pool.begin();
            for (auto it = std::next(pool.begin()); it != pool.end(); ++it)
                if (FieldElem::compare(*it, *min_it) < 0) min_it = it;
            FieldElem rep = *min_it;
            // Remove the full zeta-orbit of the representative.
            FieldElem member = rep;
            for (unsigned s = 0; s < m; ++s) {
                auto it = std::find(pool.begin(), pool.end(), member);
                if (it == pool.end())
                    throw Error(errc::not_periodic,
                                "root multiset is not stable under multiplication by zeta_" +
                                    std::to_string(m));
                pool.erase(it);
                member *= zeta;
            }
            base_roots[i].push_back(rep);
        }
    }
    return DrinfeldTuple::from_roots(pi.n, std::move(base_roots));
}

DrinfeldTuple power_quotient(const DrinfeldTuple& pi0, unsigned m, unsigned d) {
    if (d == 0 || m % d != 0)
        throw Error(errc::not_a_divisor, std::to_string(d) + " does not divide " + std::to_string(m));
    FieldElem zeta = FieldElem::zeta(m);
    std::vector<UPoly> polys;
    std::optional<std::vector<std::vector<FieldElem>>> roots;
    if (pi0.roots) roots.emplace(pi0.n);
    for (unsigned i = 1; i <= pi0.n; ++i) {
        UPoly prod = upoly_one();
        for (unsigned j = 0; j < m / d; ++j) {
            FieldElem twist = zeta.pow(static_cast<long>(j) * d);
            prod = upoly_mul(prod, upoly_twist(pi0.poly(i), twist));
            if (roots)
                for (const FieldElem& b : (*pi0.roots)[i - 1])
                    (*roots)[i - 1].push_back(b * twist);
        }
        polys.push_back(std::move(prod));
    }
    DrinfeldTuple out = DrinfeldTuple::from_coeffs(pi0.n, std::move(polys));
    out.roots = std::move(roots);
    return out;
}

DrinfeldTuple minus_tuple(const DrinfeldTuple& pi) {
    std::vector<UPoly> polys;
    for (unsigned i = 1; i <= pi.n; ++i) {
        const UPoly& p = pi.poly(i);
        unsigned deg = pi.degree(i);
        UPoly rev(deg + 1, FieldElem(0));
        for (unsigned s = 0; s <= deg; ++s) rev[s] = p[deg - s];
        FieldElem lead_inv = rev[0].inverse();
        for (auto& c : rev) c *= lead_inv;
        polys.push_back(std::move(rev));
    }
    DrinfeldTuple out = DrinfeldTuple::from_coeffs(pi.n, std::move(polys));
    if (pi.roots) {
        std::vector<std::vector<FieldElem>> roots(pi.n);
        for (unsigned i = 0; i < pi.n; ++i)
            for (const FieldElem& b : (*pi.roots)[i]) roots[i].push_back(b.inverse());
        out.roots = std::move(roots);
    }
    return out;
}

HighestWeightChar::Monomial HighestWeightChar::P(unsigned i, long r) const {
    unsigned a = static_cast<unsigned>(r < 0 ? -r : r);
    const DrinfeldTuple& side = r < 0 ? minus : base;
    return Monomial{side.coeff(i, a), r};
}

HighestWeightChar chi_of(const DrinfeldTuple& pi, long d) {
    return HighestWeightChar{pi, minus_tuple(pi), d};
}

}  // namespace loopmod
