#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loopmod/arithcomb.hpp"
#include "loopmod/field.hpp"

namespace loopmod {

// Evaluation parameters of a tensor product V(a_1) (x) ... (x) V(a_N); slot
// j counts tensor factors left to right. The main use is a_j = zeta^{j-1}.
struct EvalParams {
    unsigned n = 1;
    std::vector<FieldElem> params;

    EvalParams() = default;
    EvalParams(unsigned rank, std::vector<FieldElem> a);

    unsigned N() const { return static_cast<unsigned>(params.size()); }
    const FieldElem& param(unsigned slot) const { return params.at(slot - 1); }

    // a_j = zeta_m^{j-1} for j = 1..length.
    static EvalParams natural(unsigned n, unsigned m, unsigned length);
};

// Word position r (1-based) vs tensor slot p (1-based, left to right):
// p = N - r + 1. Slot 1 is the leftmost factor.
int letter_at_slot(const Word& w, unsigned slot);
void set_letter_at_slot(Word& w, unsigned slot, int letter);

struct PWeight {
    Composition composition;

    // ((k_0 - k_1), ..., (k_{n-1} - k_n)) in the fundamental-weight basis.
    std::vector<long> varpi_coords() const;
    friend bool operator==(const PWeight& a, const PWeight& b) {
        return a.composition == b.composition;
    }
};

PWeight weight_of_word(const Word& w, unsigned n);

// Composition of `total` realizing the given varpi coordinates, if any.
std::optional<Composition> composition_from_varpi(const std::vector<long>& coords,
                                                  unsigned total);

// Finite FieldElem-linear combination of Words (zero coefficients pruned).
class ModuleVector {
public:
    ModuleVector() = default;
    explicit ModuleVector(const Word& w, FieldElem c = FieldElem(1));

    void add_term(const Word& w, const FieldElem& c);
    const std::map<Word, FieldElem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    FieldElem coeff(const Word& w) const;

    ModuleVector operator-() const;
    friend ModuleVector operator+(const ModuleVector& a, const ModuleVector& b);
    friend ModuleVector operator-(const ModuleVector& a, const ModuleVector& b);
    ModuleVector scaled(const FieldElem& c) const;
    ModuleVector& operator+=(const ModuleVector& o) { return *this = *this + o; }
    ModuleVector& operator-=(const ModuleVector& o) { return *this = *this - o; }
    friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
        return a.terms_ == b.terms_;
    }

    // True if every coefficient has q-valuation >= 0 (lattice membership).
    bool in_lattice() const;
    // Coefficient-wise image in A/qA; requires lattice membership.
    std::map<Word, Cyclo> reduce_q0() const;

    std::string str() const;

private:
    std::map<Word, FieldElem> terms_;
};

struct Gen {
    enum class Kind { E, F, K };
    Kind kind;
    unsigned i;  // affine node index, 0..n

    std::string str() const;
};

// Loop grading degree: +1 for E_0, -1 for F_0, 0 otherwise.
int loop_degree(const Gen& g);

// Action of E_i, F_i, K_i (i in {0,...,n}) on the tensor product, via the
// coproduct D(E)=E(x)K^{-1}+1(x)E, D(F)=F(x)1+K(x)F iterated over slots.
ModuleVector act(const Gen& g, const EvalParams& ctx, const ModuleVector& v);
ModuleVector act(const Gen& g, const EvalParams& ctx, const Word& w);

// All words with multiplicities c (requires sum(c) = N), deterministic order.
std::vector<Word> weight_space_basis(const EvalParams& ctx, const Composition& c);

// Quantum integer [k]_q and factorial [s]_q!.
FieldElem q_int(long k);
FieldElem q_factorial(unsigned s);

// gen applied s times, divided by [s]_q!.
ModuleVector divided_power(const Gen& g, unsigned s, const EvalParams& ctx,
                           const ModuleVector& v);

}  // namespace loopmod
