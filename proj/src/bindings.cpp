#include "pqsym/expr.hpp"
#include "pqsym/json_io.hpp"
#include "pqsym/oracle.hpp"
#include "pqsym/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pqsym;

namespace {

Composition make_composition(const std::vector<int>& parts) { return Composition(parts); }

py::object int_from_string(const std::string& digits) {
    return py::module_::import("builtins").attr("int")(digits);
}

Rat rat_from_object(const py::object& obj) {
    if (py::isinstance<py::int_>(obj)) return rat_from_string(py::str(obj).cast<std::string>());
    return rat_from_string(obj.cast<std::string>());
}

template <class Element>
std::vector<std::pair<std::vector<int>, std::string>> terms_out(const Element& f) {
    std::vector<std::pair<std::vector<int>, std::string>> out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
        out.emplace_back(it->first.parts(), rat_to_string(it->second));
    return out;
}

py::dict suite_to_dict(const SuiteResult& result) {
    py::dict d;
    d["suite"] = result.suite;
    d["total_checks"] = result.total_checks();
    d["pass"] = result.pass();
    py::list checks;
    for (const auto& r : result.results) {
        py::dict c;
        c["name"] = r.name;
        c["checks"] = r.checks;
        c["failures"] = r.failures;
        c["pass"] = r.pass();
        checks.append(c);
    }
    d["checks"] = checks;
    return d;
}

}  // namespace

PYBIND11_MODULE(_pqsym, m) {
    m.doc() = "Exact arithmetic for peak quasisymmetric functions";

    py::class_<Composition>(m, "Composition")
        .def(py::init(&make_composition), py::arg("parts"))
        .def_property_readonly("parts", [](const Composition& c) { return c.parts(); })
        .def("weight", &Composition::weight)
        .def("length", &Composition::length)
        .def("all_odd", &Composition::all_odd)
        .def("concat", &Composition::concat)
        .def("dilated", &Composition::dilated)
        .def("repeated", &Composition::repeated)
        .def("__repr__", [](const Composition& c) { return c.str(); })
        .def("__eq__", [](const Composition& a, const Composition& b) { return a == b; })
        .def("__hash__",
             [](const Composition& c) { return py::hash(py::tuple(py::cast(c.parts()))); });

    m.def("descent_set", [](const Composition& a) { return descent_set(a).elements; });
    m.def("peak_set", [](const Composition& a) { return peak_set(a).elements; });
    m.def("hat", &hat);
    m.def("lambda_odd", &lambda_odd);
    m.def("is_lyndon", &is_lyndon);
    m.def("is_elementary", &is_elementary);
    m.def("wll_compare", &wll_compare);
    m.def("lex_compare", &lex_compare);
    m.def("cfl_factorize", [](const Composition& a) {
        std::vector<std::pair<std::vector<int>, int>> out;
        for (const auto& [word, mult] : cfl_factorize(a).factors)
            out.emplace_back(word.parts(), mult);
        return out;
    });
    m.def("reduce_elementary", [](const Composition& a) {
        auto [g, red] = reduce_elementary(a);
        return std::make_pair(g, red);
    });
    m.def("enumerate_odd_compositions", &enumerate_odd_compositions);
    m.def("enumerate_compositions", &enumerate_compositions);
    m.def("fibonacci", [](int n) { return int_from_string(fibonacci(n).str()); });
    m.def("qshuffle", [](const Composition& a, const Composition& b) {
        std::vector<std::pair<std::vector<int>, py::object>> out;
        for (const auto& [gamma, mult] : qshuffle(a, b))
            out.emplace_back(gamma.parts(), int_from_string(mult.str()));
        return out;
    });

    py::class_<QSymElement>(m, "QSymElement")
        .def_property_readonly("basis",
                               [](const QSymElement& f) {
                                   return std::string(f.basis() == QBasis::M ? "M" : "F");
                               })
        .def("terms", &terms_out<QSymElement>)
        .def("is_zero", &QSymElement::is_zero)
        .def("max_weight", &QSymElement::max_weight)
        .def("to_basis",
             [](const QSymElement& f, const std::string& b) {
                 return f.to_basis(b == "M" ? QBasis::M : QBasis::F);
             })
        .def("to_json", [](const QSymElement& f) { return element_to_json(f).dump(); })
        .def("__add__", [](const QSymElement& a, const QSymElement& b) { return a + b; })
        .def("__sub__", [](const QSymElement& a, const QSymElement& b) { return a - b; })
        .def("__mul__", [](const QSymElement& a, const QSymElement& b) { return a * b; })
        .def("__rmul__", [](const QSymElement& f, const py::object& c) { return rat_from_object(c) * f; })
        .def("__eq__", [](const QSymElement& a, const QSymElement& b) { return a == b; })
        .def("__repr__", [](const QSymElement& f) { return format_element(f); });

    py::class_<PQSymElement>(m, "PQSymElement")
        .def_property_readonly("basis",
                               [](const PQSymElement& f) {
                                   return std::string(f.basis() == PBasis::L ? "L" : "K");
                               })
        .def("terms", &terms_out<PQSymElement>)
        .def("is_zero", &PQSymElement::is_zero)
        .def("max_weight", &PQSymElement::max_weight)
        .def("to_basis",
             [](const PQSymElement& f, const std::string& b) {
                 return f.to_basis(b == "L" ? PBasis::L : PBasis::K);
             })
        .def("to_json", [](const PQSymElement& f) { return element_to_json(f).dump(); })
        .def("__add__", [](const PQSymElement& a, const PQSymElement& b) { return a + b; })
        .def("__sub__", [](const PQSymElement& a, const PQSymElement& b) { return a - b; })
        .def("__mul__", [](const PQSymElement& a, const PQSymElement& b) { return a * b; })
        .def("__rmul__",
             [](const PQSymElement& f, const py::object& c) { return rat_from_object(c) * f; })
        .def("__eq__", [](const PQSymElement& a, const PQSymElement& b) { return a == b; })
        .def("__repr__", [](const PQSymElement& f) { return format_element(f); });

    py::class_<GeneratorPolynomial>(m, "GeneratorPolynomial")
        .def("is_zero", &GeneratorPolynomial::is_zero)
        .def("integral", &GeneratorPolynomial::integral)
        .def("expand", &expand_generator_poly)
        .def("straighten", &straighten_generator)
        .def("to_json", [](const GeneratorPolynomial& p) { return generator_to_json(p).dump(); })
        .def("__add__",
             [](const GeneratorPolynomial& a, const GeneratorPolynomial& b) { return a + b; })
        .def("__sub__",
             [](const GeneratorPolynomial& a, const GeneratorPolynomial& b) { return a - b; })
        .def("__mul__",
             [](const GeneratorPolynomial& a, const GeneratorPolynomial& b) { return a * b; })
        .def("__eq__",
             [](const GeneratorPolynomial& a, const GeneratorPolynomial& b) { return a == b; })
        .def("__repr__", [](const GeneratorPolynomial& p) { return format_generator(p); });

    m.def("qsym_m", [](const Composition& a, const py::object& c) {
        return QSymElement::monomial(a, rat_from_object(c), QBasis::M);
    }, py::arg("alpha"), py::arg("coef") = py::int_(1));
    m.def("qsym_f", [](const Composition& a, const py::object& c) {
        return QSymElement::monomial(a, rat_from_object(c), QBasis::F);
    }, py::arg("alpha"), py::arg("coef") = py::int_(1));
    m.def("pqsym_l", [](const Composition& a, const py::object& c) {
        return PQSymElement::monomial(a, rat_from_object(c), PBasis::L);
    }, py::arg("alpha"), py::arg("coef") = py::int_(1));
    m.def("pqsym_k", [](const Composition& a, const py::object& c) {
        return PQSymElement::monomial(a, rat_from_object(c), PBasis::K);
    }, py::arg("alpha"), py::arg("coef") = py::int_(1));

    m.def("theta", &theta, "Descent-to-peak map QSym -> PQSym");
    m.def("embed_to_qsym", &embed_to_qsym);
    m.def("adams_psi", &adams_psi);
    m.def("adams_phi", &adams_phi);
    m.def("lambda_qsym", &lambda_qsym);
    m.def("lambda_tilde", &lambda_tilde);
    m.def("qn", &qn_generator, py::arg("alpha"), py::arg("n"));
    m.def("sym_e", &sym_e);
    m.def("sym_h", &sym_h);
    m.def("sym_p", &sym_p);
    m.def("sym_q", &sym_q);

    m.def("decompose_inductive", &decompose_inductive);
    m.def("decompose_zb", &decompose_zb);
    m.def("zb_basis", [](int n) {
        py::list out;
        for (const auto& mono : enumerate_zb_basis(n))
            out.append(format_generator(GeneratorPolynomial::monomial(mono)));
        return out;
    });
    m.def("verify_completeness", [](int n) {
        CompletenessReport rep = verify_completeness(n);
        py::dict d;
        d["n"] = rep.n;
        d["fibonacci"] = int_from_string(rep.expected_rank.str());
        d["basis_size"] = rep.basis_size;
        d["rank"] = rep.rank;
        d["det"] = int_from_string(rep.det.str());
        d["lattice_full"] = rep.lattice_full;
        d["pass"] = rep.pass;
        return d;
    });
    m.def("verify_euler_relations", &verify_euler_relations);

    m.def("parse_eval", [](const std::string& text, const std::string& basis) -> py::object {
        TargetBasis target = target_basis_from_string(basis);
        Expr e = parse_expression(text);
        if (target == TargetBasis::M || target == TargetBasis::F)
            return py::cast(eval_qsym(e, target));
        return py::cast(eval_pqsym(e, target));
    }, py::arg("text"), py::arg("basis"));
    m.def("eval_to_string", [](const std::string& text, const std::string& basis) {
        return eval_to_string(text, target_basis_from_string(basis));
    });

    m.def("check_identity",
          [](const PQSymElement& a, const PQSymElement& b, int k) { return check_identity(a, b, k); });
    m.def("run_suite", [](const std::string& name, int max_weight) {
        return suite_to_dict(run_suite(name, max_weight));
    }, py::arg("name"), py::arg("max_weight") = 0);
    m.def("suite_names", &suite_names);
}
