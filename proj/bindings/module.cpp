// Python bindings: the main operations at orchestration level, returning
// plain data (ints, lists, JSON strings the package wrapper decodes).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "loopmod/charformula.hpp"
#include "loopmod/crystal.hpp"
#include "loopmod/io.hpp"
#include "loopmod/loopdecomp.hpp"
#include "loopmod/runconfig.hpp"

namespace py = pybind11;
using namespace loopmod;

namespace {

py::int_ big_int(const mpz_class& value) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(value.get_str().c_str(), nullptr, 10));
}

Composition to_composition(const std::vector<unsigned>& parts) {
    return Composition(parts);
}

CrystalOp to_op(const std::string& name) {
    if (name == "F" || name == "Ftilde" || name == "f") return CrystalOp::Ftilde;
    if (name == "E" || name == "Etilde" || name == "e") return CrystalOp::Etilde;
    throw Error(errc::config_error, "crystal operator must be 'E' or 'F', got " + name);
}

DrinfeldTuple tuple_from_text(const std::string& text, unsigned n, unsigned m) {
    if (text.empty()) return DrinfeldTuple::natural_power(n, m);
    DrinfeldTuple pi = parse_tuple(text, m);
    if (pi.n != n)
        throw Error(errc::config_error, "tuple rank does not match n");
    return pi;
}

}  // namespace

PYBIND11_MODULE(_loopmod, mod) {
    mod.doc() = "exact decomposition of quantum loop modules, characters and zeta-crystals";

    py::register_exception<Error>(mod, "LoopmodError");

    mod.def("euler_phi", [](unsigned long d) { return euler_phi(d); }, py::arg("d"));
    mod.def("moebius", [](unsigned long d) { return moebius(d); }, py::arg("d"));
    mod.def(
        "phi_twisted",
        [](long k, unsigned long d) {
            Rat value = phi_twisted(k, d);
            return py::make_tuple(big_int(value.get_num()), big_int(value.get_den()));
        },
        py::arg("k"), py::arg("d"), "numerator/denominator pair of phi_k(d)");

    mod.def("maj", [](const Word& w) { return maj(w); }, py::arg("word"));
    mod.def(
        "count_maj_by_residue",
        [](const std::vector<unsigned>& parts, unsigned m) {
            py::list out;
            for (const auto& c : count_maj_by_residue(to_composition(parts), m))
                out.append(big_int(c));
            return out;
        },
        py::arg("composition"), py::arg("m"));
    mod.def(
        "closed_count",
        [](const std::vector<unsigned>& parts, unsigned m, long k) {
            return big_int(closed_count(to_composition(parts), m, k));
        },
        py::arg("composition"), py::arg("m"), py::arg("k"));
    mod.def(
        "multinomial",
        [](const std::vector<unsigned>& parts) { return big_int(multinomial(to_composition(parts))); },
        py::arg("composition"));

    mod.def(
        "eigenspace_dims",
        [](unsigned n, unsigned m, const std::vector<unsigned>& parts) {
            EtaOperator eta(m, n);
            return eta.eigenspace_dims(to_composition(parts));
        },
        py::arg("n"), py::arg("m"), py::arg("composition"));
    mod.def(
        "component_weight_dim",
        [](unsigned n, unsigned m, long s, const std::vector<unsigned>& parts, long r) {
            EtaOperator eta(m, n);
            return component_weight_dim(eta, s, GradedWeight{PWeight{to_composition(parts)}, r});
        },
        py::arg("n"), py::arg("m"), py::arg("s"), py::arg("composition"), py::arg("r"));

    mod.def(
        "decompose_json",
        [](unsigned n, unsigned m, const std::string& tuple_text, long d, unsigned jobs) {
            DecompositionReport report = decompose(tuple_from_text(tuple_text, n, m), d, jobs);
            return render_json(decomposition_to_json(report));
        },
        py::arg("n"), py::arg("m"), py::arg("tuple_text") = std::string(), py::arg("d") = 0,
        py::arg("jobs") = 1);
    mod.def(
        "tuple_period",
        [](const std::string& text, unsigned m) { return detect_period(parse_tuple(text, m)); },
        py::arg("tuple_text"), py::arg("zeta_order"));

    mod.def(
        "character_table_json",
        [](unsigned n, unsigned m, unsigned jobs) {
            return render_json(comparison_to_json(compare_all(n, m, jobs)));
        },
        py::arg("n"), py::arg("m"), py::arg("jobs") = 1);
    mod.def(
        "character_table_csv",
        [](unsigned n, unsigned m, unsigned jobs) {
            return comparison_to_csv(compare_all(n, m, jobs));
        },
        py::arg("n"), py::arg("m"), py::arg("jobs") = 1);

    mod.def(
        "crystal_graph_json",
        [](long s, unsigned m, unsigned n, long r_min, long r_max) {
            return render_json(crystal_to_json(build_component_crystal(s, m, n, r_min, r_max)));
        },
        py::arg("s"), py::arg("m"), py::arg("n"), py::arg("r_min"), py::arg("r_max"));
    mod.def(
        "crystal_graph_dot",
        [](long s, unsigned m, unsigned n, long r_min, long r_max) {
            return crystal_to_dot(build_component_crystal(s, m, n, r_min, r_max));
        },
        py::arg("s"), py::arg("m"), py::arg("n"), py::arg("r_min"), py::arg("r_max"));

    mod.def(
        "verify_axioms_json",
        [](unsigned n, unsigned N, unsigned zeta_order) {
            return render_json(axioms_to_json(verify_axioms(EvalParams::natural(n, zeta_order, N),
                                                            zeta_order)));
        },
        py::arg("n"), py::arg("N"), py::arg("zeta_order"));
    mod.def(
        "oracle_mismatches",
        [](unsigned n, unsigned N, unsigned zeta_order) {
            return check_oracle_agreement(EvalParams::natural(n, zeta_order, N), zeta_order);
        },
        py::arg("n"), py::arg("N"), py::arg("zeta_order"));

    mod.def(
        "tensor_rule_step",
        [](const std::string& op, unsigned i, const Word& w, unsigned n, unsigned zeta_order)
            -> py::object {
            TensorStep step = tensor_rule_step(to_op(op), i, w, n, zeta_order);
            if (!step.word) return py::none();
            return py::make_tuple(*step.word, step.zeta_exp);
        },
        py::arg("op"), py::arg("i"), py::arg("word"), py::arg("n"), py::arg("zeta_order"));
    mod.def(
        "kashiwara_mod_q",
        [](const std::string& op, unsigned i, const Word& w, unsigned n, unsigned N,
           unsigned zeta_order) -> py::object {
            EvalParams ctx = EvalParams::natural(n, zeta_order, N);
            ModuleVector image = kashiwara_op(to_op(op), i, ctx, ModuleVector(w));
            auto reduced = image.reduce_q0();
            if (reduced.empty()) return py::none();
            py::list terms;
            for (const auto& [word, coeff] : reduced)
                terms.append(py::make_tuple(word, coeff.str()));
            return terms;
        },
        py::arg("op"), py::arg("i"), py::arg("word"), py::arg("n"), py::arg("N"),
        py::arg("zeta_order"));

    mod.def(
        "field_eval",
        [](const std::string& expr, unsigned zeta_order) {
            return parse_field_elem(expr, zeta_order).str();
        },
        py::arg("expr"), py::arg("zeta_order"), "canonical form of an exact expression");
    mod.def(
        "q_valuation",
        [](const std::string& expr, unsigned zeta_order) -> py::object {
            Valuation v = parse_field_elem(expr, zeta_order).q_valuation();
            if (v.infinite) return py::none();
            return py::int_(v.value);
        },
        py::arg("expr"), py::arg("zeta_order"));
    mod.def(
        "reduce_q0",
        [](const std::string& expr, unsigned zeta_order) {
            return parse_field_elem(expr, zeta_order).reduce_q0().str();
        },
        py::arg("expr"), py::arg("zeta_order"));
}
