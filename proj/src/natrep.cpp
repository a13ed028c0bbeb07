#include "loopmod/natrep.hpp"

#include <sstream>

namespace loopmod {

EvalParams::EvalParams(unsigned rank, std::vector<FieldElem> a)
    : n(rank), params(std::move(a)) {
    for (const auto& p : params)
        if (p.is_zero())
            throw Error(errc::config_error, "evaluation parameters must be nonzero");
}

EvalParams EvalParams::natural(unsigned n, unsigned m, unsigned length) {
    std::vector<FieldElem> a;
    a.reserve(length);
    for (unsigned j = 1; j <= length; ++j) a.push_back(FieldElem::zeta(m, j - 1));
    return EvalParams(n, std::move(a));
}

int letter_at_slot(const Word& w, unsigned slot) {
    return w.at(w.size() - slot);
}

void set_letter_at_slot(Word& w, unsigned slot, int letter) {
    w.at(w.size() - slot) = letter;
}

std::vector<long> PWeight::varpi_coords() const {
    std::vector<long> coords;
    for (size_t i = 1; i < composition.size(); ++i)
        coords.push_back(static_cast<long>(composition[i - 1]) -
                         static_cast<long>(composition[i]));
    return coords;
}

PWeight weight_of_word(const Word& w, unsigned n) {
    return PWeight{letter_multiplicities(w, n)};
}

std::optional<Composition> composition_from_varpi(const std::vector<long>& coords,
                                                  unsigned total) {
    // k_i = k_0 - (c_1 + ... + c_i); sum k_i = total pins k_0.
    size_t n = coords.size();
    long prefix = 0, prefix_sum = 0;
    for (size_t i = 0; i < n; ++i) {
        prefix += coords[i];
        prefix_sum += prefix;
    }
    long numerator = static_cast<long>(total) + prefix_sum;
    if (numerator % static_cast<long>(n + 1) != 0) return std::nullopt;
    long k0 = numerator / static_cast<long>(n + 1);
    std::vector<unsigned> parts(n + 1);
    long k = k0;
    for (size_t i = 0; i <= n; ++i) {
        if (i > 0) k -= coords[i - 1];
        if (k < 0) return std::nullopt;
        parts[i] = static_cast<unsigned>(k);
    }
    Composition c(std::move(parts));
    if (c.total() != total) return std::nullopt;
    return c;
}

ModuleVector::ModuleVector(const Word& w, FieldElem c) { add_term(w, c); }

void ModuleVector::add_term(const Word& w, const FieldElem& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FieldElem ModuleVector::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? FieldElem(0) : it->second;
}

ModuleVector ModuleVector::operator-() const {
    ModuleVector r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

ModuleVector operator+(const ModuleVector& a, const ModuleVector& b) {
    ModuleVector r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
}

ModuleVector operator-(const ModuleVector& a, const ModuleVector& b) { return a + (-b); }

ModuleVector ModuleVector::scaled(const FieldElem& c) const {
    ModuleVector r;
    if (c.is_zero()) return r;
    for (const auto& [w, x] : terms_) r.terms_.emplace(w, x * c);
    return r;
}

bool ModuleVector::in_lattice() const {
    for (const auto& [w, c] : terms_)
        if (!(c.q_valuation() >= 0)) return false;
    return true;
}

std::map<Word, Cyclo> ModuleVector::reduce_q0() const {
    std::map<Word, Cyclo> out;
    for (const auto& [w, c] : terms_) {
        Cyclo r = c.reduce_q0();
        if (!r.is_zero()) out.emplace(w, r);
    }
    return out;
}

std::string ModuleVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*[";
        for (size_t r = 0; r < w.size(); ++r) {
            if (r) os << ",";
            os << w[r];
        }
        os << "]";
    }
    return os.str();
}

std::string Gen::str() const {
    const char* k = kind == Kind::E ? "E" : kind == Kind::F ? "F" : "K";
    return std::string(k) + "_" + std::to_string(i);
}

int loop_degree(const Gen& g) {
    if (g.i != 0) return 0;
    if (g.kind == Gen::Kind::E) return 1;
    if (g.kind == Gen::Kind::F) return -1;
    return 0;
}

namespace {

// K_i eigenvalue exponent of the single-factor basis vector v_j:
// K_i v_j = q^{d(j+1,i) - d(j,i)} v_j with indices mod n+1.
int k_exponent(unsigned n, unsigned i, int j) {
    int up = (j + 1) % static_cast<int>(n + 1) == static_cast<int>(i) ? 1 : 0;
    int down = j == static_cast<int>(i) ? 1 : 0;
    return up - down;
}

}  // namespace

ModuleVector act(const Gen& g, const EvalParams& ctx, const Word& w) {
    const unsigned n = ctx.n;
    const unsigned N = ctx.N();
    if (w.size() != N) throw Error(errc::config_error, "word length does not match context");
    if (g.i > n) throw Error(errc::config_error, "generator index out of range");
    ModuleVector out;

    if (g.kind == Gen::Kind::K) {
        long e = 0;
        for (int letter : w) e += k_exponent(n, g.i, letter);
        out.add_term(w, FieldElem::q(e));
        return out;
    }

    const int mod = static_cast<int>(n + 1);
    if (g.kind == Gen::Kind::E) {
        // Delta^{N-1}(E_i) = sum_p 1^{(p-1)} (x) E_i (x) (K_i^{-1})^{(N-p)}.
        for (unsigned p = 1; p <= N; ++p) {
            int letter = letter_at_slot(w, p);
            if (letter != static_cast<int>(g.i)) continue;
            long e = 0;
            for (unsigned p2 = p + 1; p2 <= N; ++p2)
                e -= k_exponent(n, g.i, letter_at_slot(w, p2));
            FieldElem coeff = FieldElem::q(e);
            if (g.i == 0) coeff *= ctx.param(p);
            Word w2 = w;
            set_letter_at_slot(w2, p, (letter - 1 + mod) % mod);
            out.add_term(w2, coeff);
        }
        return out;
    }

    // Delta^{N-1}(F_i) = sum_p K_i^{(p-1)} (x) F_i (x) 1^{(N-p)}.
    const int source = (static_cast<int>(g.i) - 1 + mod) % mod;
    for (unsigned p = 1; p <= N; ++p) {
        int letter = letter_at_slot(w, p);
        if (letter != source) continue;
        long e = 0;
        for (unsigned p2 = 1; p2 < p; ++p2)
            e += k_exponent(n, g.i, letter_at_slot(w, p2));
        FieldElem coeff = FieldElem::q(e);
        if (g.i == 0) coeff *= ctx.param(p).inverse();
        Word w2 = w;
        set_letter_at_slot(w2, p, static_cast<int>(g.i));
        out.add_term(w2, coeff);
    }
    return out;
}

ModuleVector act(const Gen& g, const EvalParams& ctx, const ModuleVector& v) {
    ModuleVector out;
    for (const auto& [w, c] : v.terms())
        out += act(g, ctx, w).scaled(c);
    return out;
}

std::vector<Word> weight_space_basis(const EvalParams& ctx, const Composition& c) {
    if (c.total() != ctx.N())
        throw Error(errc::config_error, "composition total does not match tensor length");
    if (c.size() != ctx.n + 1)
        throw Error(errc::config_error, "composition has wrong number of parts");
    return words_with_multiplicities(c);
}

FieldElem q_int(long k) {
    // (q^k - q^{-k}) / (q - q^{-1})
    return (FieldElem::q(k) - FieldElem::q(-k)) / (FieldElem::q(1) - FieldElem::q(-1));
}

FieldElem q_factorial(unsigned s) {
    FieldElem f(1);
    for (unsigned k = 2; k <= s; ++k) f *= q_int(static_cast<long>(k));
    return f;
}

ModuleVector divided_power(const Gen& g, unsigned s, const EvalParams& ctx,
                           const ModuleVector& v) {
    ModuleVector out = v;
    for (unsigned k = 0; k < s; ++k) out = act(g, ctx, out);
    if (s >= 2) out = out.scaled(q_factorial(s).inverse());
    return out;
}

}  // namespace loopmod
