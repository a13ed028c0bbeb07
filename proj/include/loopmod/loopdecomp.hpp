#pragma once

#include <memory>
#include <string>
#include <vector>

#include "loopmod/braiding.hpp"
#include "loopmod/drinfeld.hpp"

namespace loopmod {

// Element v (x) t^r of the loop module L(V; d); D acts by q^{d+r}.
struct LoopVector {
    ModuleVector v;
    long r = 0;
    long d = 0;
};

// x(v (x) t^r) = (xv) (x) t^{r+k} for x of loop degree k.
LoopVector loop_act(const Gen& g, const EvalParams& ctx, const LoopVector& lv);

// D eigenvalue action: D(v (x) t^r) = q^{d+r} v (x) t^r.
LoopVector loop_act_D(const LoopVector& lv);

// Pi_hat_s(v (x) t^r) = Pi_{s-r}(v) (x) t^r.
LoopVector hat_projector(const EtaOperator& eta, long s, const LoopVector& lv);

struct GradedWeight {
    PWeight nu;
    long r = 0;
};

// dim L^s(V(pi))_{nu + r delta} = dim of the zeta^{s-r}-eigenspace of eta on
// the nu weight space; 0 when nu is not a weight of V(pi).
long component_weight_dim(const EtaOperator& eta, long s, const GradedWeight& gw);
long component_weight_dim(const EtaOperator& eta, long s, const std::vector<long>& varpi_coords,
                          long r);

// Handle to the simple component L^s(V(pi)) generated by v_pi (x) t^s.
struct ComponentHandle {
    long s = 0;
    std::shared_ptr<const EtaOperator> eta;

    long weight_dim(const GradedWeight& gw) const { return component_weight_dim(*eta, s, gw); }
};

struct DecompositionReport {
    unsigned n = 1;
    unsigned m = 1;
    long d = 0;
    std::vector<std::string> pi0_roots;
    struct Entry {
        Composition composition;
        long r;
        long dim;
    };
    struct Component {
        long s;
        std::vector<Entry> dims;
    };
    std::vector<Component> components;
    std::vector<ComponentHandle> handles;
};

// Decompose L(V(pi); d) into its m simple graded components with character
// tables over the window r in [-m, m] and all compositions of m. Requires
// the natural-tensor-power family (prod_j (1 - a zeta^j u), 1, ..., 1) in
// factored form; UnsupportedTuple otherwise. `jobs` bounds worker threads
// (0 = hardware concurrency).
DecompositionReport decompose(const DrinfeldTuple& pi, long d, unsigned jobs = 1);

}  // namespace loopmod
