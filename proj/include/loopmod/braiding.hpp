#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "loopmod/linalg.hpp"
#include "loopmod/natrep.hpp"

namespace loopmod {

// The intertwiner I_z applied to tensor slots (pos, pos+1), identity
// elsewhere. Fixes v_i (x) v_i; on mixed pairs it mixes the word with its
// transposition with the standard rational coefficients in z and q.
// PoleAtQSquared when z = q^2.
ModuleVector apply_Iz_at(const FieldElem& z, unsigned pos, const EvalParams& ctx,
                         const ModuleVector& v);
ModuleVector apply_Iz_at(const FieldElem& z, unsigned pos, const EvalParams& ctx, const Word& w,
                         const FieldElem& coeff = FieldElem(1));

// eta = I_{zeta^{m-1},m-1} o ... o I_{zeta,1} on V(1) (x) V(zeta) (x) ... (x)
// V(zeta^{m-1}). Order-m symmetry commuting with U_q(g); preserves weight
// spaces and fixes the highest weight word. Weight-space matrices and their
// powers are cached per composition; the cache is guarded so distinct weight
// spaces can be built and queried concurrently.
class EtaOperator {
public:
    EtaOperator(unsigned m, unsigned n);

    unsigned m() const { return m_; }
    unsigned n() const { return n_; }
    unsigned N() const { return ctx_.N(); }
    const EvalParams& ctx() const { return ctx_; }
    FieldElem zeta(long k = 1) const { return FieldElem::zeta(m_, k); }

    ModuleVector apply(const ModuleVector& v, unsigned times = 1) const;
    ModuleVector apply(const Word& w) const { return apply(ModuleVector(w)); }

    // Matrix of eta^power on the weight space of c, in the order of
    // weight_space_basis.
    const Matrix& block_power(const Composition& c, unsigned power) const;

    // Matrix of Pi_s = (1/m) sum_k zeta^{-ks} eta^k on the weight space of c.
    Matrix projector_block(long s, const Composition& c) const;

    // Entry k = dim of the zeta^k-eigenspace of eta on the weight space,
    // computed as the trace of Pi_k and cross-checked against exact_rank of
    // the projector block. TraceNotInteger if either fails.
    std::vector<long> eigenspace_dims(const Composition& c) const;

private:
    struct BlockCache {
        std::vector<Word> basis;
        std::map<Word, size_t> index;
        std::vector<ModuleVector> images;  // eta^p of each basis word at the top power
        std::vector<Matrix> powers;
    };

    unsigned m_, n_;
    EvalParams ctx_;
    mutable std::mutex cache_mutex_;
    mutable std::map<Composition, BlockCache> block_cache_;
};

// Pi_s(v) = (1/m) sum_{k=0}^{m-1} zeta^{-ks} eta^k(v).
ModuleVector projector_apply(const EtaOperator& eta, long s, const ModuleVector& v);

// True iff eta(x v) = zeta^k x eta(v) with k the loop degree of the
// generator. The orientation of the exponent (equivalently zeta^{-k} with
// the degree table negated on the affine node) is pinned by the q = 0 limit
// eta(w) = zeta^{+Maj(w)} w, which this realization satisfies: the two signs
// flip together under zeta -> zeta^{-1}, so they cannot be chosen
// independently.
bool eta_grading_check(const EtaOperator& eta, const Gen& g, const ModuleVector& v);

}  // namespace loopmod
