#include "loopmod/braiding.hpp"

#include <algorithm>

namespace loopmod {

ModuleVector apply_Iz_at(const FieldElem& z, unsigned pos, const EvalParams& ctx, const Word& w,
                         const FieldElem& coeff) {
    const unsigned N = ctx.N();
    if (pos < 1 || pos + 1 > N)
        throw Error(errc::config_error, "I_z position out of range");
    FieldElem denom = z - FieldElem::q(2);
    if (denom.is_zero())
        throw Error(errc::pole_at_q_squared, "I_z undefined at z = q^2");

    ModuleVector out;
    int left = letter_at_slot(w, pos);
    int right = letter_at_slot(w, pos + 1);
    if (left == right) {
        out.add_term(w, coeff);
        return out;
    }
    Word swapped = w;
    set_letter_at_slot(swapped, pos, right);
    set_letter_at_slot(swapped, pos + 1, left);

    FieldElem mixed = FieldElem::q(1) * (z - FieldElem(1)) / denom;
    if (left < right) {
        // I_z(v_i (x) v_j) with i < j.
        FieldElem stay = (FieldElem(1) - FieldElem::q(2)) / denom;
        out.add_term(w, coeff * stay);
        out.add_term(swapped, coeff * mixed);
    } else {
        // I_z(v_j (x) v_i) with i < j.
        FieldElem stay = (FieldElem(1) - FieldElem::q(2)) * z / denom;
        out.add_term(w, coeff * stay);
        out.add_term(swapped, coeff * mixed);
    }
    return out;
}

ModuleVector apply_Iz_at(const FieldElem& z, unsigned pos, const EvalParams& ctx,
                         const ModuleVector& v) {
    ModuleVector out;
    for (const auto& [w, c] : v.terms()) out += apply_Iz_at(z, pos, ctx, w, c);
    return out;
}

EtaOperator::EtaOperator(unsigned m, unsigned n)
    : m_(m), n_(n), ctx_(EvalParams::natural(n, m, m)) {
    if (m == 0) throw Error(errc::config_error, "period must be positive");
}

ModuleVector EtaOperator::apply(const ModuleVector& v, unsigned times) const {
    ModuleVector out = v;
    for (unsigned t = 0; t < times; ++t)
        for (unsigned pos = 1; pos < N(); ++pos)
            out = apply_Iz_at(zeta(pos), pos, ctx_, out);
    return out;
}

const Matrix& EtaOperator::block_power(const Composition& c, unsigned power) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto& cache = block_cache_[c];
    if (cache.powers.empty()) {
        cache.basis = weight_space_basis(ctx_, c);
        for (size_t j = 0; j < cache.basis.size(); ++j) cache.index.emplace(cache.basis[j], j);
        cache.powers.push_back(identity_matrix(cache.basis.size()));
        cache.images.reserve(cache.basis.size());
        for (const Word& w : cache.basis) cache.images.push_back(ModuleVector(w));
    }
    // Extend by applying eta to the cached image vectors; cheaper than
    // matrix products because each intertwiner touches two slots only.
    while (cache.powers.size() <= power) {
        size_t dim = cache.basis.size();
        Matrix next(dim, Vec(dim, FieldElem(0)));
        for (size_t j = 0; j < dim; ++j) {
            cache.images[j] = apply(cache.images[j]);
            for (const auto& [w, coeff] : cache.images[j].terms())
                next[cache.index.at(w)][j] = coeff;
        }
        cache.powers.push_back(std::move(next));
    }
    return cache.powers[power];
}

Matrix EtaOperator::projector_block(long s, const Composition& c) const {
    size_t dim = block_power(c, 0).size();
    Matrix out(dim, Vec(dim, FieldElem(0)));
    FieldElem inv_m(make_rat(1, static_cast<long>(m_)));
    for (unsigned k = 0; k < m_; ++k) {
        FieldElem w = zeta(-static_cast<long>(k) * s) * inv_m;
        out = matadd(out, matscale(block_power(c, k), w));
    }
    return out;
}

std::vector<long> EtaOperator::eigenspace_dims(const Composition& c) const {
    std::vector<FieldElem> traces;
    for (unsigned k = 0; k < m_; ++k) traces.push_back(trace(block_power(c, k)));

    FieldElem inv_m(make_rat(1, static_cast<long>(m_)));
    std::vector<long> dims(m_, 0);
    long total = 0;
    for (unsigned k = 0; k < m_; ++k) {
        FieldElem d(0);
        for (unsigned j = 0; j < m_; ++j)
            d += zeta(-static_cast<long>(j) * k) * traces[j];
        d *= inv_m;
        if (!d.is_rational_constant())
            throw Error(errc::trace_not_integer,
                        "projector trace is not rational: " + d.str());
        Rat value = d.rational_value();
        if (value.get_den() != 1 || value < 0)
            throw Error(errc::trace_not_integer,
                        "projector trace is not a non-negative integer: " + value.get_str());
        dims[k] = static_cast<long>(value.get_num().get_si());
        total += dims[k];

        size_t rank = exact_rank(projector_block(static_cast<long>(k), c));
        if (static_cast<long>(rank) != dims[k])
            throw Error(errc::trace_not_integer,
                        "projector trace " + std::to_string(dims[k]) +
                            " disagrees with projector rank " + std::to_string(rank));
    }
    if (total != static_cast<long>(block_power(c, 0).size()))
        throw Error(errc::trace_not_integer, "eigenspace dimensions do not sum to the block size");
    return dims;
}

ModuleVector projector_apply(const EtaOperator& eta, long s, const ModuleVector& v) {
    unsigned m = eta.m();
    FieldElem inv_m(make_rat(1, static_cast<long>(m)));
    ModuleVector out;
    ModuleVector power = v;
    for (unsigned k = 0; k < m; ++k) {
        out += power.scaled(eta.zeta(-static_cast<long>(k) * s) * inv_m);
        if (k + 1 < m) power = eta.apply(power);
    }
    return out;
}

bool eta_grading_check(const EtaOperator& eta, const Gen& g, const ModuleVector& v) {
    int k = loop_degree(g);
    ModuleVector lhs = eta.apply(act(g, eta.ctx(), v));
    ModuleVector rhs = act(g, eta.ctx(), eta.apply(v)).scaled(eta.zeta(k));
    return lhs == rhs;
}

}  // namespace loopmod
