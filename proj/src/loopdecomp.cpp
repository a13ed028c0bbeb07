#include "loopmod/loopdecomp.hpp"

#include <algorithm>

#include "loopmod/parallel.hpp"

namespace loopmod {

LoopVector loop_act(const Gen& g, const EvalParams& ctx, const LoopVector& lv) {
    return LoopVector{act(g, ctx, lv.v), lv.r + loop_degree(g), lv.d};
}

LoopVector loop_act_D(const LoopVector& lv) {
    return LoopVector{lv.v.scaled(FieldElem::q(lv.d + lv.r)), lv.r, lv.d};
}

LoopVector hat_projector(const EtaOperator& eta, long s, const LoopVector& lv) {
    return LoopVector{projector_apply(eta, s - lv.r, lv.v), lv.r, lv.d};
}

long component_weight_dim(const EtaOperator& eta, long s, const GradedWeight& gw) {
    const Composition& c = gw.nu.composition;
    if (c.total() != eta.N() || c.size() != eta.n() + 1) return 0;
    long m = static_cast<long>(eta.m());
    long k = ((s - gw.r) % m + m) % m;
    return eta.eigenspace_dims(c)[static_cast<size_t>(k)];
}

long component_weight_dim(const EtaOperator& eta, long s, const std::vector<long>& varpi_coords,
                          long r) {
    if (varpi_coords.size() != eta.n()) return 0;
    auto c = composition_from_varpi(varpi_coords, eta.N());
    if (!c) return 0;
    return component_weight_dim(eta, s, GradedWeight{PWeight{*c}, r});
}

namespace {

// The supported family: pi = (prod_{j=0}^{m-1}(1 - a zeta^j u), 1, ..., 1)
// up to the twist a, i.e. pi^0 = (1 - a u, 1, ..., 1).
void check_natural_family(const DrinfeldTuple& pi0) {
    bool ok = pi0.degree(1) == 1;
    for (unsigned i = 2; ok && i <= pi0.n; ++i) ok = pi0.degree(i) == 0;
    if (!ok)
        throw Error(errc::unsupported_tuple,
                    "decompose supports the natural tensor-power family only; base tuple was " +
                        pi0.str());
}

}  // namespace

DecompositionReport decompose(const DrinfeldTuple& pi, long d, unsigned jobs) {
    unsigned m = detect_period(pi);
    DrinfeldTuple pi0 = extract_base(pi, m);
    check_natural_family(pi0);

    DecompositionReport report;
    report.n = pi.n;
    report.m = m;
    report.d = d;
    for (const FieldElem& b : (*pi0.roots)[0]) report.pi0_roots.push_back(b.str());

    auto eta = std::make_shared<EtaOperator>(m, pi.n);

    // Dimensions depend only on (s - r) mod m, so compute the eigenspace
    // table once per composition and fan it out over the window.
    std::vector<Composition> comps = compositions_of(m, pi.n + 1);
    std::vector<std::vector<long>> dim_tables(comps.size());
    parallel_for_index(comps.size(), jobs,
                       [&](size_t i) { dim_tables[i] = eta->eigenspace_dims(comps[i]); });

    long window = static_cast<long>(m);
    for (unsigned s = 0; s < m; ++s) {
        DecompositionReport::Component component;
        component.s = s;
        for (size_t i = 0; i < comps.size(); ++i) {
            for (long r = -window; r <= window; ++r) {
                long k = ((static_cast<long>(s) - r) % static_cast<long>(m) +
                          static_cast<long>(m)) %
                         static_cast<long>(m);
                component.dims.push_back(
                    DecompositionReport::Entry{comps[i], r, dim_tables[i][static_cast<size_t>(k)]});
            }
        }
        report.components.push_back(std::move(component));
        report.handles.push_back(ComponentHandle{static_cast<long>(s), eta});
    }
    return report;
}

}  // namespace loopmod
