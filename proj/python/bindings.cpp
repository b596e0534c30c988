// Python bindings. Exact values cross the boundary as Python int and
// fractions.Fraction; rational arguments accept int, Fraction or "p/q".
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cherfd/decomp.hpp"
#include "cherfd/error.hpp"
#include "cherfd/findim.hpp"
#include "cherfd/gseries.hpp"
#include "cherfd/repdata.hpp"
#include "cherfd/weights.hpp"
#include "cli.hpp"

namespace py = pybind11;
using namespace cherfd;

namespace {

py::object to_py(const BigInt& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(to_string(v).c_str(), nullptr, 10));
}

py::object to_py(const Rat& v) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(v.num()), to_py(v.den()));
}

py::object to_py(const Bound& b) {
  if (b.is_finite()) return to_py(b.value());
  return py::float_(b == Bound::pos_inf() ? INFINITY : -INFINITY);
}

Rat to_rat(const py::handle& h) { return Rat::parse(py::str(h).cast<std::string>()); }

BigInt to_bigint(const py::handle& h) { return parse_bigint(py::str(h).cast<std::string>()); }

py::dict series_dict(const GradedSeries& s) {
  py::dict d;
  for (const auto& [e, coeff] : s.terms()) d[to_py(e)] = to_py(coeff);
  return d;
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["kind"] = v.infinite() ? "INFINITE_DIMENSIONAL" : "INCONCLUSIVE";
  d["witness_exponent"] = v.witness_exponent ? to_py(*v.witness_exponent) : py::none();
  d["dim_neg"] = v.dim_neg ? to_py(*v.dim_neg) : py::none();
  d["dim_pos"] = v.dim_pos ? to_py(*v.dim_pos) : py::none();
  d["window"] = py::make_tuple(to_py(v.window_lo), to_py(v.window_hi));
  return d;
}

Verdict verdict_from(const GroupData& g, const Rat& c, const DecompMatrix& m,
                     const std::string& tau, const py::object& hi) {
  std::optional<Rat> trunc;
  if (!hi.is_none()) trunc = to_rat(hi);
  return sl2_symmetry_test(simple_character(g, c, m, tau, trunc));
}

}  // namespace

PYBIND11_MODULE(_cherfd, m) {
  m.doc() = "Exact graded characters and finite-dimensionality tests for Cherednik algebras";

  static py::exception<Error> error(m, "CherfdError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      exc.attr("code") = std::string(errc_name(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<GroupData>(m, "Group")
      .def_property_readonly("name", &GroupData::name)
      .def_property_readonly("dim_v", [](const GroupData& g) { return to_py(g.dim_v()); })
      .def_property_readonly("num_reflections",
                             [](const GroupData& g) { return to_py(g.num_reflections()); })
      .def_property_readonly("c_ref", [](const GroupData& g) {
        return g.c_ref() ? to_py(*g.c_ref()) : py::none();
      })
      .def_property_readonly("labels",
                             [](const GroupData& g) {
                               std::vector<std::string> out;
                               for (const auto& ir : g.irreps()) out.push_back(ir.label);
                               return out;
                             })
      .def("twist", &GroupData::twist)
      .def("to_json", &serialize_group)
      .def("__contains__", &GroupData::contains)
      .def("__eq__", [](const GroupData& a, const GroupData& b) { return a == b; });

  py::class_<DecompMatrix>(m, "DecompMatrix")
      .def_readonly("group", &DecompMatrix::group)
      .def_readonly("twisted_labels", &DecompMatrix::twisted_labels)
      .def_property_readonly("columns",
                             [](const DecompMatrix& d) {
                               std::vector<std::string> out;
                               for (const auto& [k, v] : d.columns) out.push_back(k);
                               return out;
                             })
      .def("to_json", &serialize_decomp);

  m.def("load_group", &load_group, py::arg("path"));
  m.def("parse_group", [](const std::string& text) { return parse_group(text); },
        py::arg("text"));
  m.def("load_decomp", &load_decomp, py::arg("path"), py::arg("group"));
  m.def("parse_decomp",
        [](const std::string& text, const GroupData& g) { return parse_decomp(text, g); },
        py::arg("text"), py::arg("group"));

  m.def("h_weight",
        [](const GroupData& g, const py::object& c, const std::string& tau) {
          return to_py(h_weight(g, to_rat(c), tau));
        },
        py::arg("group"), py::arg("c"), py::arg("tau"));

  m.def("labels_in_window",
        [](const GroupData& g, const py::object& c, const std::string& lo,
           const std::string& hi) {
          const WindowQuery q = labels_in_window(g, to_rat(c), Bound::parse(lo), Bound::parse(hi));
          py::list labels;
          for (const auto& w : q.labels) labels.append(py::make_tuple(w.label, to_py(w.h)));
          return py::make_tuple(labels, q.exhaustive);
        },
        py::arg("group"), py::arg("c"), py::arg("lo"), py::arg("hi"),
        "Labels with h in (lo, hi], ascending, and whether the list is exhaustive.");

  m.def("poly_coeff",
        [](const py::object& dim_v, unsigned long k) { return to_py(poly_coeff(to_bigint(dim_v), k)); },
        py::arg("dim_v"), py::arg("k"));

  m.def("verma_series",
        [](const GroupData& g, const py::object& c, const std::string& tau, const py::object& hi) {
          return series_dict(verma_series(g, to_rat(c), tau, to_rat(hi)));
        },
        py::arg("group"), py::arg("c"), py::arg("tau"), py::arg("hi"));

  m.def("expansion",
        [](const DecompMatrix& d, const std::string& tau, const GroupData& g,
           const py::object& c) {
          const GrothExpansion e = expansion(d, tau, g, to_rat(c));
          py::list terms;
          for (const auto& t : e.terms) terms.append(py::make_tuple(to_py(t.coeff), t.label, to_py(t.h)));
          py::dict out;
          out["target"] = e.target;
          out["terms"] = terms;
          out["valid_below"] = to_py(e.valid_below);
          out["text"] = e.str();
          return out;
        },
        py::arg("matrix"), py::arg("tau"), py::arg("group"), py::arg("c"));

  m.def("simple_character",
        [](const GroupData& g, const py::object& c, const DecompMatrix& d, const std::string& tau,
           const py::object& hi) {
          std::optional<Rat> trunc;
          if (!hi.is_none()) trunc = to_rat(hi);
          return series_dict(simple_character(g, to_rat(c), d, tau, trunc));
        },
        py::arg("group"), py::arg("c"), py::arg("matrix"), py::arg("tau"),
        py::arg("hi") = py::none());

  m.def("findim",
        [](const GroupData& g, const py::object& c, const DecompMatrix& d, const std::string& tau,
           const py::object& hi) { return verdict_dict(verdict_from(g, to_rat(c), d, tau, hi)); },
        py::arg("group"), py::arg("c"), py::arg("matrix"), py::arg("tau"),
        py::arg("hi") = py::none());

  m.def("classify",
        [](const GroupData& g, const py::object& c, const DecompMatrix& d,
           const std::vector<std::string>& candidates, std::size_t expected) {
          const Rat cr = to_rat(c);
          std::map<std::string, Verdict> verdicts;
          for (const auto& tau : candidates) {
            // Candidates without a usable column stay undecided.
            if (d.columns.count(tau) == 0) continue;
            try {
              verdicts.emplace(tau, verdict_from(g, cr, d, tau, py::none()));
            } catch (const Error&) {
            }
          }
          return classify(candidates, expected, verdicts);
        },
        py::arg("group"), py::arg("c"), py::arg("matrix"), py::arg("candidates"),
        py::arg("expected_count"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs one command line; returns (exit_code, stdout, stderr).");
}
