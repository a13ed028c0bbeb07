#include "loopmod/crystal.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "loopmod/linalg.hpp"

namespace loopmod {

ModuleVector StringDecomp::reconstruct(const EvalParams& ctx) const {
    ModuleVector out;
    Gen f{Gen::Kind::F, i};
    for (const auto& [s, u] : components) out += divided_power(f, s, ctx, u);
    return out;
}

namespace {

Composition composition_of(const ModuleVector& v, const EvalParams& ctx) {
    Composition c;
    bool first = true;
    for (const auto& [w, coeff] : v.terms()) {
        Composition wc = letter_multiplicities(w, ctx.n);
        if (first) {
            c = wc;
            first = false;
        } else if (!(wc == c)) {
            throw Error(errc::config_error, "vector is not weight-homogeneous");
        }
    }
    return c;
}

long pairing_with_alpha(const Composition& c, unsigned i) {
    size_t prev = (i + c.size() - 1) % c.size();
    return static_cast<long>(c[prev]) - static_cast<long>(c[i]);
}

// Composition after replacing s letters i by i-1 (weight lambda + s alpha_i);
// empty optional when out of range.
std::optional<Composition> raise_composition(const Composition& c, unsigned i, unsigned s) {
    if (c[i] < s) return std::nullopt;
    Composition out = c;
    size_t prev = (i + c.size() - 1) % c.size();
    out.parts[i] -= s;
    out.parts[prev] += s;
    return out;
}

}  // namespace

StringDecomp string_decompose(unsigned i, const EvalParams& ctx, const ModuleVector& v) {
    StringDecomp result;
    result.i = i;
    if (v.is_zero()) return result;
    Composition c = composition_of(v, ctx);
    result.t_shift = pairing_with_alpha(c, i);

    std::vector<Word> basis = weight_space_basis(ctx, c);
    std::map<Word, size_t> index;
    for (size_t j = 0; j < basis.size(); ++j) index.emplace(basis[j], j);

    Gen e{Gen::Kind::E, i};
    Gen f{Gen::Kind::F, i};

    // Kernel of E_i in each weight space lambda + s alpha_i, pushed back down
    // by divided powers; the retained columns form a basis of the lambda
    // space.
    struct Column {
        unsigned s;
        ModuleVector kernel_vector;
        ModuleVector image;  // F_i^{(s)} (kernel_vector)
    };
    std::vector<Column> columns;
    for (unsigned s = 0;; ++s) {
        auto cs = raise_composition(c, i, s);
        if (!cs) break;
        if (result.t_shift + static_cast<long>(s) < 0) continue;
        std::vector<Word> upper = weight_space_basis(ctx, *cs);
        auto upper_above = raise_composition(c, i, s + 1);
        std::vector<Word> target =
            upper_above ? weight_space_basis(ctx, *upper_above) : std::vector<Word>{};
        std::map<Word, size_t> target_index;
        for (size_t j = 0; j < target.size(); ++j) target_index.emplace(target[j], j);

        Matrix e_matrix(target.size(), Vec(upper.size(), FieldElem(0)));
        for (size_t j = 0; j < upper.size(); ++j) {
            ModuleVector img = act(e, ctx, Word(upper[j]));
            for (const auto& [w, coeff] : img.terms()) e_matrix[target_index.at(w)][j] = coeff;
        }
        std::vector<Vec> kernel =
            target.empty() ? std::vector<Vec>() : nullspace(e_matrix);
        if (target.empty())
            for (size_t j = 0; j < upper.size(); ++j) {
                Vec unit(upper.size(), FieldElem(0));
                unit[j] = FieldElem(1);
                kernel.push_back(std::move(unit));
            }
        for (const Vec& coords : kernel) {
            ModuleVector u;
            for (size_t j = 0; j < upper.size(); ++j)
                if (!coords[j].is_zero()) u.add_term(upper[j], coords[j]);
            columns.push_back(Column{s, u, divided_power(f, s, ctx, u)});
        }
    }

    Matrix a(basis.size(), Vec(columns.size(), FieldElem(0)));
    for (size_t col = 0; col < columns.size(); ++col)
        for (const auto& [w, coeff] : columns[col].image.terms()) a[index.at(w)][col] = coeff;
    Vec rhs(basis.size(), FieldElem(0));
    for (const auto& [w, coeff] : v.terms()) rhs[index.at(w)] = coeff;

    auto solution = solve(a, rhs);
    if (!solution)
        throw Error(errc::config_error, "string decomposition solve failed (internal)");

    std::map<unsigned, ModuleVector> by_s;
    for (size_t col = 0; col < columns.size(); ++col) {
        if ((*solution)[col].is_zero()) continue;
        by_s[columns[col].s] += columns[col].kernel_vector.scaled((*solution)[col]);
    }
    for (auto& [s, u] : by_s)
        if (!u.is_zero()) result.components.emplace_back(s, std::move(u));
    return result;
}

ModuleVector kashiwara_op(CrystalOp op, unsigned i, const EvalParams& ctx,
                          const ModuleVector& v) {
    StringDecomp decomp = string_decompose(i, ctx, v);
    Gen f{Gen::Kind::F, i};
    ModuleVector out;
    for (const auto& [s, u] : decomp.components) {
        if (op == CrystalOp::Etilde) {
            if (s == 0) continue;
            out += divided_power(f, s - 1, ctx, u);
        } else {
            out += divided_power(f, s + 1, ctx, u);
        }
    }
    return out;
}

TensorStep tensor_rule_step(CrystalOp op, unsigned i, const Word& w, unsigned n,
                            unsigned zeta_order) {
    const unsigned N = static_cast<unsigned>(w.size());
    const int mod = static_cast<int>(n + 1);
    const int plus_letter = (static_cast<int>(i) - 1 + mod) % mod;  // Ftilde source
    const int minus_letter = static_cast<int>(i);                   // Etilde source

    // Bracket cancellation left to right: '+' opens, '-' closes.
    std::vector<unsigned> open_slots;   // unmatched '+'
    std::vector<unsigned> closed_slots; // unmatched '-'
    for (unsigned p = 1; p <= N; ++p) {
        int letter = letter_at_slot(w, p);
        if (letter == plus_letter) {
            open_slots.push_back(p);
        } else if (letter == minus_letter) {
            if (!open_slots.empty())
                open_slots.pop_back();
            else
                closed_slots.push_back(p);
        }
    }

    TensorStep step;
    long m = static_cast<long>(zeta_order);
    if (op == CrystalOp::Ftilde) {
        if (open_slots.empty()) return step;
        unsigned p = open_slots.front();
        Word out = w;
        set_letter_at_slot(out, p, minus_letter);
        step.word = std::move(out);
        step.slot = p;
        step.zeta_exp = i == 0 ? ((-(static_cast<long>(p) - 1)) % m + m) % m : 0;
    } else {
        if (closed_slots.empty()) return step;
        unsigned p = closed_slots.back();
        Word out = w;
        set_letter_at_slot(out, p, plus_letter);
        step.word = std::move(out);
        step.slot = p;
        step.zeta_exp = i == 0 ? (static_cast<long>(p) - 1) % m : 0;
    }
    return step;
}

namespace {

struct ModQImage {
    bool valid = false;
    bool zero = false;
    Word word;
    long zeta_exp = 0;
    std::string issue;
};

ModQImage reduce_to_basis_multiple(const ModuleVector& v, unsigned zeta_order, bool allow_zeta) {
    ModQImage out;
    if (!v.in_lattice()) {
        out.issue = "image leaves the lattice";
        return out;
    }
    std::map<Word, Cyclo> reduced = v.reduce_q0();
    if (reduced.empty()) {
        out.valid = true;
        out.zero = true;
        return out;
    }
    if (reduced.size() > 1) {
        out.issue = "image mod q is not a single basis word";
        return out;
    }
    const auto& [w, coeff] = *reduced.begin();
    for (unsigned k = 0; k < zeta_order; ++k) {
        if (coeff == Cyclo::zeta(zeta_order, k)) {
            if (!allow_zeta && k != 0) {
                out.issue = "nonzero zeta exponent on a non-affine direction";
                return out;
            }
            out.valid = true;
            out.word = w;
            out.zeta_exp = k;
            return out;
        }
    }
    out.issue = "image coefficient mod q is not a power of zeta: " + coeff.str();
    return out;
}

std::vector<Word> all_words(unsigned n, unsigned N) {
    std::vector<Word> out;
    Word w(N, 0);
    for (;;) {
        out.push_back(w);
        size_t pos = 0;
        while (pos < N && w[pos] == static_cast<int>(n)) w[pos++] = 0;
        if (pos == N) break;
        ++w[pos];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string word_str(const Word& w) {
    std::ostringstream os;
    os << "(";
    for (size_t r = 0; r < w.size(); ++r) {
        if (r) os << ",";
        os << w[r];
    }
    os << ")";
    return os.str();
}

}  // namespace

AxiomReport verify_axioms(const EvalParams& ctx, unsigned zeta_order) {
    AxiomReport report;
    report.n = ctx.n;
    report.N = ctx.N();
    report.zeta_order = zeta_order;

    const unsigned m = zeta_order;
    for (const Word& w : all_words(ctx.n, ctx.N())) {
        for (unsigned i = 0; i <= ctx.n; ++i) {
            for (CrystalOp op : {CrystalOp::Ftilde, CrystalOp::Etilde}) {
                const char* opname = op == CrystalOp::Ftilde ? "Ftilde" : "Etilde";
                ModuleVector image = kashiwara_op(op, i, ctx, ModuleVector(w));

                // (i) weight compatibility: the image is homogeneous of the
                // shifted weight.
                Composition expected = letter_multiplicities(w, ctx.n);
                size_t from = op == CrystalOp::Ftilde ? (i + ctx.n) % (ctx.n + 1) : i;
                size_t to = op == CrystalOp::Ftilde ? i : (i + ctx.n) % (ctx.n + 1);
                bool weight_ok = true;
                if (!image.is_zero()) {
                    if (expected.parts[from] == 0) {
                        weight_ok = false;
                    } else {
                        --expected.parts[from];
                        ++expected.parts[to];
                        for (const auto& [iw, coeff] : image.terms())
                            if (!(letter_multiplicities(iw, ctx.n) == expected)) weight_ok = false;
                    }
                }
                if (!weight_ok)
                    report.violations.push_back(std::string("(i) ") + opname + "_" +
                                                std::to_string(i) + " " + word_str(w) +
                                                ": image not weight-homogeneous");

                // (ii) lattice stability + (iii) image mod q.
                ModQImage modq = reduce_to_basis_multiple(image, m, i == 0);
                if (!modq.valid) {
                    report.violations.push_back(std::string("(ii/iii) ") + opname + "_" +
                                                std::to_string(i) + " " + word_str(w) + ": " +
                                                modq.issue);
                    continue;
                }
                if (modq.zero) continue;

                // (iv) reciprocity with matched exponents.
                CrystalOp inverse_op =
                    op == CrystalOp::Ftilde ? CrystalOp::Etilde : CrystalOp::Ftilde;
                ModuleVector back = kashiwara_op(inverse_op, i, ctx, ModuleVector(modq.word));
                ModQImage back_modq = reduce_to_basis_multiple(back, m, i == 0);
                bool reciprocal = back_modq.valid && !back_modq.zero && back_modq.word == w &&
                                  (back_modq.zeta_exp + modq.zeta_exp) % m == 0;
                if (!reciprocal)
                    report.violations.push_back(std::string("(iv) ") + opname + "_" +
                                                std::to_string(i) + " " + word_str(w) +
                                                ": reciprocity fails");
            }
        }
    }
    return report;
}

std::vector<std::string> check_oracle_agreement(const EvalParams& ctx, unsigned zeta_order) {
    std::vector<std::string> mismatches;
    for (const Word& w : all_words(ctx.n, ctx.N())) {
        for (unsigned i = 0; i <= ctx.n; ++i) {
            for (CrystalOp op : {CrystalOp::Ftilde, CrystalOp::Etilde}) {
                const char* opname = op == CrystalOp::Ftilde ? "Ftilde" : "Etilde";
                TensorStep rule = tensor_rule_step(op, i, w, ctx.n, zeta_order);
                ModuleVector image = kashiwara_op(op, i, ctx, ModuleVector(w));
                ModQImage modq = reduce_to_basis_multiple(image, zeta_order, i == 0);
                std::ostringstream os;
                os << opname << "_" << i << " " << word_str(w) << ": ";
                if (!modq.valid) {
                    os << "oracle image invalid: " << modq.issue;
                    mismatches.push_back(os.str());
                    continue;
                }
                if (modq.zero != !rule.word.has_value()) {
                    os << "rule " << (rule.word ? "acts" : "vanishes") << " but oracle "
                       << (modq.zero ? "vanishes" : "acts");
                    mismatches.push_back(os.str());
                    continue;
                }
                if (modq.zero) continue;
                if (!(modq.word == *rule.word) ||
                    (modq.zeta_exp - rule.zeta_exp) % static_cast<long>(zeta_order) != 0) {
                    os << "rule gives zeta^" << rule.zeta_exp << " " << word_str(*rule.word)
                       << " but oracle gives zeta^" << modq.zeta_exp << " " << word_str(modq.word);
                    mismatches.push_back(os.str());
                }
            }
        }
    }
    return mismatches;
}

CrystalGraph build_component_crystal(long s, unsigned m, unsigned n, long r_min, long r_max) {
    if (r_min > r_max) throw Error(errc::config_error, "empty grade window");
    CrystalGraph graph;
    std::map<std::pair<long, Word>, size_t> index;
    for (long r = r_min; r <= r_max; ++r) {
        long want = ((s - r) % static_cast<long>(m) + static_cast<long>(m)) %
                    static_cast<long>(m);
        for (const Word& w : all_words(n, m)) {
            if (static_cast<long>(maj(w) % m) != want) continue;
            index.emplace(std::make_pair(r, w), graph.nodes.size());
            graph.nodes.push_back(CrystalGraph::Node{w, r, r == r_min || r == r_max});
        }
    }
    for (size_t from = 0; from < graph.nodes.size(); ++from) {
        const auto& node = graph.nodes[from];
        for (unsigned i = 0; i <= n; ++i) {
            TensorStep step = tensor_rule_step(CrystalOp::Ftilde, i, node.word, n, m);
            if (!step.word) continue;
            long r_to = node.r - (i == 0 ? 1 : 0);
            auto it = index.find(std::make_pair(r_to, *step.word));
            if (it == index.end()) continue;  // leaves the window
            // Edge exponent k with target = zeta^k Ftilde(source).
            unsigned k = static_cast<unsigned>(
                ((-step.zeta_exp) % static_cast<long>(m) + static_cast<long>(m)) %
                static_cast<long>(m));
            graph.edges.push_back(CrystalGraph::Edge{from, it->second, i, k});
        }
    }
    return graph;
}

}  // namespace loopmod
