#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "actkit/decomposition.hpp"
#include "actkit/error.hpp"
#include "actkit/oracle.hpp"
#include "actkit/symbolic.hpp"

namespace py = pybind11;
using namespace actkit;

namespace {

  std::vector<std::vector<std::string>> labelled(FiniteAct const& act, std::vector<std::vector<index_type>> const& parts) {
    std::vector<std::vector<std::string>> out;
    for (auto const& part : parts) {
      auto& labels = out.emplace_back();
      for (auto a : part) {
        labels.push_back(act.label(a));
      }
    }
    return out;
  }

  MonoidPtr monoid_from(py::object const& spec) {
    if (py::isinstance<py::str>(spec)) {
      return builtin_monoid(spec.cast<std::string>());
    }
    return spec.cast<std::shared_ptr<FiniteMonoid>>();
  }

  SuiteOptions suite_options(std::size_t max_size) {
    return SuiteOptions{"python", max_size, Budgets::from_environment(), 1};
  }

}  // namespace

PYBIND11_MODULE(_actkit, m) {
  m.doc() = "Acts over finite monoids: decomposition, isomorphism and cancellation";

  py::register_exception<Error>(m, "ActkitError", PyExc_ValueError);

  py::class_<FiniteMonoid, std::shared_ptr<FiniteMonoid>>(m, "Monoid")
      .def_static("builtin", [](std::string const& spec) { return std::const_pointer_cast<FiniteMonoid>(builtin_monoid(spec)); })
      .def_static("from_json",
                  [](std::string const& text) {
                    return std::const_pointer_cast<FiniteMonoid>(load_monoid(json::parse(text)));
                  })
      .def("to_json", [](FiniteMonoid const& x) { return to_document(x).dump(); })
      .def_property_readonly("size", &FiniteMonoid::size)
      .def_property_readonly("labels", &FiniteMonoid::labels)
      .def_property_readonly("identity", [](FiniteMonoid const& x) { return x.label(x.identity()); })
      .def("product",
           [](FiniteMonoid const& x, std::string const& s, std::string const& t) {
             return x.label(x.product(x.index_of(s), x.index_of(t)));
           })
      .def("idempotents",
           [](FiniteMonoid const& x) {
             std::vector<std::string> out;
             for (auto e : idempotents(x)) {
               out.push_back(x.label(e));
             }
             return out;
           })
      .def("idempotent_classes", [](std::shared_ptr<FiniteMonoid> const& x) {
        std::vector<std::vector<std::string>> out;
        for (auto const& block : idempotent_classes(x)) {
          auto& labels = out.emplace_back();
          for (auto e : block) {
            labels.push_back(x->label(e));
          }
        }
        return out;
      });

  py::class_<FiniteAct>(m, "Act")
      .def_static("from_json", [](std::string const& text) { return validate_act(json::parse(text)); })
      .def_static("regular", [](py::object const& monoid) { return regular_act(monoid_from(monoid)); })
      .def_static("free", [](py::object const& monoid, std::size_t k) { return free_act(monoid_from(monoid), k); })
      .def_static("principal",
                  [](py::object const& monoid, std::string const& e) {
                    auto mp = monoid_from(monoid);
                    return principal_right_act(mp, mp->index_of(e));
                  })
      .def_static("projective",
                  [](py::object const& monoid, std::vector<std::string> const& es) {
                    auto                    mp = monoid_from(monoid);
                    std::vector<index_type> idx;
                    for (auto const& e : es) {
                      idx.push_back(mp->index_of(e));
                    }
                    return projective_act(mp, idx);
                  })
      .def_static("coproduct", [](std::vector<FiniteAct> const& acts) { return coproduct(acts); })
      .def("__len__", &FiniteAct::size)
      .def("__eq__", [](FiniteAct const& x, FiniteAct const& y) { return x == y; })
      .def_property_readonly("labels", &FiniteAct::labels)
      .def("act",
           [](FiniteAct const& x, std::string const& a, std::string const& s) {
             auto i = x.find(a);
             if (!i) {
               throw Error(ErrorKind::UnknownLabel, "unknown carrier element '" + a + "'");
             }
             return x.label(x.act(*i, x.monoid().index_of(s)));
           })
      .def("to_json", [](FiniteAct const& x) { return to_document(x).dump(); })
      .def("decompose", [](FiniteAct const& x) { return labelled(x, decompose(x).components); })
      .def("decomposition_json", [](FiniteAct const& x) { return decomposition_report(x).dump(); })
      .def("is_indecomposable", [](FiniteAct const& x) { return is_indecomposable(x); })
      .def("is_cyclic", [](FiniteAct const& x) { return is_cyclic(x); })
      .def("is_simple", [](FiniteAct const& x) { return is_simple(x); })
      .def("canonical_json", [](FiniteAct const& x) { return to_document(x.monoid_ptr(), canonical_form(x)).dump(); })
      .def("iso_signature",
           [](FiniteAct const& x) {
             std::vector<std::pair<std::string, std::size_t>> out;
             for (auto const& [form, k] : iso_signature(x).classes) {
               out.emplace_back(form.key(), k);
             }
             return out;
           })
      .def("find_isomorphism",
           [](FiniteAct const& x, FiniteAct const& y) -> std::optional<std::map<std::string, std::string>> {
             auto f = find_isomorphism(x, y);
             if (!f) {
               return std::nullopt;
             }
             std::map<std::string, std::string> map;
             for (index_type a = 0; a < x.size(); ++a) {
               map[x.label(a)] = y.label(f->map[a]);
             }
             return map;
           })
      .def("symbolize_json", [](FiniteAct const& x) { return to_document(symbolize(x)).dump(); });

  m.def("decide_cancellable_json",
        [](std::string const& text) { return to_document(decide_cancellable(load_symbolic(json::parse(text)))).dump(); });
  m.def("decide_internally_cancellable_json", [](std::string const& text) {
    return to_document(decide_internally_cancellable(load_symbolic(json::parse(text)))).dump();
  });
  m.def("sym_coproduct_json", [](std::string const& x, std::string const& y) {
    return to_document(sym_coproduct(load_symbolic(json::parse(x)), load_symbolic(json::parse(y)))).dump();
  });
  m.def("sym_iso_json", [](std::string const& x, std::string const& y) {
    return sym_iso(load_symbolic(json::parse(x)), load_symbolic(json::parse(y)));
  });
  m.def("enumerate_acts",
        [](py::object const& monoid, std::size_t max_size) {
          return enumerate_acts(monoid_from(monoid), max_size, Budgets::from_environment().candidate_tables);
        });
  m.def(
      "verify_json",
      [](py::object const& monoid, std::string const& suite, std::size_t max_size) {
        auto mp   = monoid_from(monoid);
        auto opts = suite_options(max_size);
        if (py::isinstance<py::str>(monoid)) {
          opts.monoid_name = monoid.cast<std::string>();
        }
        SuiteReport report;
        if (suite == "decomposition") {
          report = verify_unique_decomposition(mp, opts);
        } else if (suite == "cancellation") {
          report = verify_finite_cancellation(mp, opts);
        } else if (suite == "internal") {
          report = verify_internal_cancellation(mp, opts);
        } else {
          throw Error(ErrorKind::UnsupportedParams, "unknown suite '" + suite + "'");
        }
        return to_document(report, false).dump();
      },
      py::arg("monoid"), py::arg("suite"), py::arg("max_size"));
  m.def(
      "verify_symbolic_json",
      [](std::uint64_t seed, std::size_t trials) { return to_document(verify_symbolic_theorems(seed, trials), false).dump(); },
      py::arg("seed") = 0, py::arg("trials") = 1000);

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
