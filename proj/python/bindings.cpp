#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcl/ibox.hpp"
#include "qcl/pbw.hpp"
#include "qcl/serialize.hpp"
#include "qcl/verify.hpp"

namespace py = pybind11;
using namespace qcl;

namespace {

PyObject* input_error = nullptr;
PyObject* refusal_error = nullptr;

IntMatrix to_matrix(const std::vector<IntVector>& rows, std::size_t cols_if_empty = 0) {
    if (rows.empty()) {
        return IntMatrix(0, cols_if_empty);
    }
    return IntMatrix::from_rows(rows);
}

py::tuple rational(const Rational& r) { return py::make_tuple(r.numerator(), r.denominator()); }

// {exponent tuple: {v power: coefficient}}
py::dict terms_of(const TorusElement& p) {
    py::dict out;
    for (const auto& [a, c] : p.terms()) {
        py::dict coef;
        for (const auto& [pw, x] : c.terms()) {
            coef[py::int_(pw)] = x;
        }
        out[py::tuple(py::cast(a))] = coef;
    }
    return out;
}

TorusElement element_from(const IntMatrix& L, const py::dict& terms) {
    TorusElement out(std::make_shared<const IntMatrix>(L));
    for (const auto& [key, value] : terms) {
        const auto a = key.cast<IntVector>();
        QLaurent c;
        if (py::isinstance<py::dict>(value)) {
            for (const auto& [pw, x] : value.cast<py::dict>()) {
                c.add_term(pw.cast<long>(), x.cast<Int>());
            }
        } else {
            c.add_term(0, value.cast<Int>());
        }
        out.add_term(a, c);
    }
    return out;
}

IBox box_from(const std::pair<std::size_t, std::size_t>& b) { return IBox{b.first, b.second}; }

py::dict report_dict(const VerifyReport& report) {
    py::dict checks;
    for (const auto& c : report.checks) {
        py::dict entry;
        entry["pass"] = c.passed;
        entry["cases"] = c.cases;
        entry["detail"] = c.detail;
        checks[py::str(c.name)] = entry;
    }
    py::dict out;
    out["pass"] = report.passed();
    out["seeds"] = report.seeds_visited;
    out["checks"] = checks;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum seeds of reduced words: exact torus arithmetic, mutation and pairings.";

    input_error = PyErr_NewException("qcl._core.InputError", PyExc_ValueError, nullptr);
    refusal_error = PyErr_NewException("qcl._core.Refusal", PyExc_ArithmeticError, nullptr);
    m.add_object("InputError", py::handle(input_error));
    m.add_object("Refusal", py::handle(refusal_error));
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyObject* type = e.kind() == ErrorKind::refusal ? refusal_error : input_error;
            py::object inst = py::reinterpret_borrow<py::object>(type)(e.what());
            inst.attr("code") = e.code();
            PyErr_SetObject(type, inst.ptr());
        }
    });

    py::class_<CartanDatum, std::shared_ptr<CartanDatum>>(m, "Cartan")
        .def(py::init([](const std::vector<IntVector>& A, const IntVector& d, const std::vector<std::string>& labels) {
                 return std::make_shared<CartanDatum>(to_matrix(A), d, labels);
             }),
             py::arg("matrix"), py::arg("symmetrizers"), py::arg("labels") = std::vector<std::string>{})
        .def_static("preset", [](const std::string& name) { return std::make_shared<CartanDatum>(CartanDatum::preset(name)); })
        .def_static("preset_names", &CartanDatum::preset_names)
        .def_property_readonly("rank", &CartanDatum::rank)
        .def_property_readonly("matrix", [](const CartanDatum& c) { return c.cartan().to_rows(); })
        .def_property_readonly("symmetrizers", &CartanDatum::symmetrizers)
        .def_property_readonly("labels", &CartanDatum::labels)
        .def("simple_root", [](const CartanDatum& c, std::size_t j) { return c.simple_root(j).coords; })
        .def("form", [](const CartanDatum& c, const IntVector& x, const IntVector& y) {
            return rational(bilinear_form(c, Weight{x}, Weight{y}));
        }, "Invariant form of two weights as (numerator, denominator).")
        .def("reflect", [](const CartanDatum& c, std::size_t i, const IntVector& x) { return reflect(c, i, Weight{x}).coords; })
        .def("positive_roots", [](const CartanDatum& c) {
            std::vector<IntVector> out;
            for (const auto& r : positive_roots(c)) out.push_back(r.coords);
            return out;
        })
        .def("reduced_words_of_longest", [](const CartanDatum& c) { return reduced_words_of_longest(c); });

    py::class_<WeylWord>(m, "Word")
        .def(py::init([](const std::shared_ptr<CartanDatum>& c, const std::vector<std::size_t>& letters) {
            return WeylWord(c, letters);
        }))
        .def_property_readonly("letters", &WeylWord::letters)
        .def("__len__", &WeylWord::size)
        .def("is_reduced", &WeylWord::is_reduced)
        .def("act", [](const WeylWord& w, const IntVector& x, std::size_t k) { return w.act(Weight{x}, k).coords; })
        .def("beta_roots", [](const WeylWord& w) {
            std::vector<IntVector> out;
            for (const auto& r : w.beta_roots()) out.push_back(r.coords);
            return out;
        })
        .def("position_maps", [](const WeylWord& w, std::size_t k) {
            const auto p = w.position_maps(k);
            py::dict out;
            out["k_plus"] = p.k_plus;
            out["k_minus"] = p.k_minus;
            out["k_min"] = p.k_min;
            out["k_max"] = p.k_max;
            return out;
        });

    py::class_<TorusElement>(m, "TorusElement")
        .def(py::init([](const std::vector<IntVector>& L, const py::dict& terms) {
                 return element_from(to_matrix(L), terms);
             }),
             py::arg("L"), py::arg("terms") = py::dict())
        .def_static("x_pow", [](const std::vector<IntVector>& L, const IntVector& a) {
            return x_pow(std::make_shared<const IntMatrix>(to_matrix(L)), a);
        })
        .def_property_readonly("L", [](const TorusElement& p) { return p.L().to_rows(); })
        .def("terms", &terms_of)
        .def("is_positive", [](const TorusElement& p) { return is_positive(p); })
        .def("shifted", &TorusElement::shifted)
        .def("__len__", &TorusElement::size)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__pow__", [](const TorusElement& p, Int n) { return power(p, n); })
        .def("__repr__", &TorusElement::to_string);

    m.def("exact_div_right", &exact_div_right, "The R with R * q == p.");

    py::class_<QuantumSeed>(m, "QuantumSeed")
        .def_property_readonly("L", [](const QuantumSeed& s) { return s.pair.L.to_rows(); })
        .def_property_readonly("B", [](const QuantumSeed& s) { return s.pair.B.to_rows(); })
        .def_property_readonly("exchangeable", [](const QuantumSeed& s) { return s.pair.exchangeable; })
        .def_property_readonly("d", [](const QuantumSeed& s) { return s.pair.d; })
        .def_property_readonly("vars", [](const QuantumSeed& s) { return s.vars; })
        .def_property_readonly("history", [](const QuantumSeed& s) { return s.history; })
        .def("mutate", py::overload_cast<const QuantumSeed&, std::size_t>(&mutate_seed))
        .def("mutate_sequence", py::overload_cast<const QuantumSeed&, const std::vector<std::size_t>&>(&mutate_seed))
        .def("to_json", [](const QuantumSeed& s) { return json_io::to_json(s).dump(); });

    py::class_<GlsSeed>(m, "GlsSeed")
        .def_property_readonly("word", [](const GlsSeed& g) { return g.word; })
        .def_property_readonly("seed", [](const GlsSeed& g) { return g.seed; })
        .def_property_readonly("L", [](const GlsSeed& g) { return g.pair().L.to_rows(); })
        .def_property_readonly("B", [](const GlsSeed& g) { return g.pair().B.to_rows(); })
        .def_property_readonly("lambda_matrix", [](const GlsSeed& g) { return g.lambda.to_rows(); })
        .def_property_readonly("exchangeable", [](const GlsSeed& g) { return g.pair().exchangeable; })
        .def_property_readonly("frozen", [](const GlsSeed& g) { return g.pair().frozen(); })
        .def_property_readonly("d", [](const GlsSeed& g) { return g.pair().d; })
        .def_property_readonly("var_weights", [](const GlsSeed& g) {
            std::vector<IntVector> out;
            for (const auto& w : g.var_weights) out.push_back(w.coords);
            return out;
        })
        .def("lambda_vars", &lambda_vars)
        .def("lambda_tilde", &lambda_tilde)
        .def("satisfies_identity", &satisfies_gls_identity)
        .def("degree", [](const GlsSeed& g, const TorusElement& p) { return degree(g.pair(), p); })
        .def("codegree", [](const GlsSeed& g, const TorusElement& p) { return codegree(g.pair(), p); })
        .def("report", [](const GlsSeed& g) { return json_io::gls_report(g).dump(); });

    m.def("build_gls", &build_gls, py::arg("word"));

    m.def("pbw_to_g", [](const WeylWord& w, const IntVector& a) { return pbw_to_g(w, PbwVector{a}).entries; });
    m.def("g_to_pbw", [](const WeylWord& w, const IntVector& g) {
        const auto r = g_to_pbw(w, GVector{g});
        return py::make_tuple(r.pbw.entries, r.in_cw);
    }, "Returns (pbw vector, whether every entry is non-negative).");
    m.def("pbw_of_cluster_monomial", [](const WeylWord& w, const IntVector& m) {
        return pbw_of_cluster_monomial(w, m).entries;
    });
    m.def("l_pairing", [](const GlsSeed& g, const IntVector& x, const IntVector& y) {
        return l_pairing(g, PbwVector{x}, PbwVector{y});
    });
    m.def("gr_pairing", [](const GlsSeed& g, const IntVector& x, const IntVector& y) {
        return gr_pairing(g, GVector{x}, GVector{y});
    });
    m.def("gl_pairing", [](const GlsSeed& g, const IntVector& x, const IntVector& y) {
        return gl_pairing(g, GVector{x}, GVector{y});
    });

    m.def("lambda_boxes", [](const GlsSeed& g, std::pair<std::size_t, std::size_t> b1, std::pair<std::size_t, std::size_t> b2) {
        return lambda_boxes(g, box_from(b1), box_from(b2));
    });
    m.def("boxes_commute", [](const WeylWord& w, std::pair<std::size_t, std::size_t> b1, std::pair<std::size_t, std::size_t> b2) {
        return boxes_commute(w, box_from(b1), box_from(b2));
    });

    m.def("verify", [](const WeylWord& w, std::size_t depth, unsigned threads) {
        VerifyOptions options;
        options.depth = depth;
        options.threads = threads;
        VerifyReport report;
        {
            py::gil_scoped_release release;
            report = verify_word(w, options);
        }
        return report_dict(report);
    }, py::arg("word"), py::arg("depth") = 4, py::arg("threads") = 0);
}
