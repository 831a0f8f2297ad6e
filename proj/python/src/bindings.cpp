#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <memory>
#include <sstream>

#include "unitwreath/catalog.hpp"
#include "unitwreath/cli.hpp"
#include "unitwreath/construct.hpp"
#include "unitwreath/errors.hpp"
#include "unitwreath/grpalg.hpp"
#include "unitwreath/oracle.hpp"
#include "unitwreath/pcgroup.hpp"
#include "unitwreath/report.hpp"

namespace py = pybind11;
using namespace unitwreath;

namespace {

using GroupPtr = std::shared_ptr<FiniteGroup>;

GroupElement element_of(const FiniteGroup& g, std::uint32_t index) {
  if (index >= g.order()) throw py::index_error("element index out of range");
  return g.element(index);
}

std::vector<std::uint32_t> indices(const Subgroup& s) { return s.elements; }

AlgebraElement algebra_element(const FiniteGroup& g, const std::vector<std::uint32_t>& support) {
  std::vector<GroupElement> elems;
  for (auto i : support) elems.push_back(element_of(g, i));
  return AlgebraElement::from_support(g, elems);
}

std::vector<std::uint32_t> support_of(const AlgebraElement& u) {
  std::vector<std::uint32_t> out;
  for (auto i : u.support().indices()) out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

WitnessConstraints constraints(const FiniteGroup& g, const std::optional<std::uint32_t>& a,
                               const std::optional<std::uint32_t>& b, const std::optional<std::uint32_t>& z) {
  WitnessConstraints w;
  if (a) w.a = element_of(g, *a);
  if (b) w.b = element_of(g, *b);
  if (z) w.z = element_of(g, *z);
  return w;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Wreath-product sections in unit groups of modular 2-group algebras";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<ConstraintError>(m, "ConstraintError", error.ptr());
  py::register_exception<InconsistencyError>(m, "InconsistencyError", error.ptr());
  py::register_exception<GroupMismatchError>(m, "GroupMismatchError", error.ptr());
  py::register_exception<ContractError>(m, "ContractError", error.ptr());
  py::register_exception<NoWitnessError>(m, "NoWitnessError", error.ptr());
  py::register_exception<ConstructionError>(m, "ConstructionError", error.ptr());
  py::register_exception<CapExceededError>(m, "CapExceededError", error.ptr());

  py::class_<FiniteGroup, GroupPtr>(m, "Group", "Finite 2-group given by a refined pc presentation")
      .def_property_readonly("name", &FiniteGroup::name)
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("generators", [](const FiniteGroup& g) { return g.presentation().generators; })
      .def("presentation", [](const FiniteGroup& g) { return to_text(g.presentation()); })
      .def("element", [](const FiniteGroup& g, const std::string& word) {
        const auto x = g.parse_word(word);
        if (!x) throw py::value_error("cannot parse word '" + word + "'");
        return x->bits;
      }, py::arg("word"), "Index of the element named by a word in the generators")
      .def("format", [](const FiniteGroup& g, std::uint32_t x) { return g.format(element_of(g, x)); })
      .def("multiply", [](const FiniteGroup& g, std::uint32_t x, std::uint32_t y) {
        return g.multiply(element_of(g, x), element_of(g, y)).bits;
      })
      .def("inverse", [](const FiniteGroup& g, std::uint32_t x) { return g.inverse(element_of(g, x)).bits; })
      .def("power", [](const FiniteGroup& g, std::uint32_t x, std::uint64_t e) {
        return g.power(element_of(g, x), e).bits;
      })
      .def("conjugate", [](const FiniteGroup& g, std::uint32_t x, std::uint32_t h) {
        return g.conjugate(element_of(g, x), element_of(g, h)).bits;
      })
      .def("commutator", [](const FiniteGroup& g, std::uint32_t x, std::uint32_t y) {
        return g.commutator(element_of(g, x), element_of(g, y)).bits;
      })
      .def("element_order", [](const FiniteGroup& g, std::uint32_t x) { return g.element_order(element_of(g, x)); })
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("derived_subgroup", [](const FiniteGroup& g) { return indices(derived_subgroup(g)); })
      .def("center", [](const FiniteGroup& g) { return indices(center(g)); })
      .def("__repr__", [](const FiniteGroup& g) {
        return "<Group " + g.name() + " of order " + std::to_string(g.order()) + ">";
      });

  m.def("load", [](const std::string& text) { return std::make_shared<FiniteGroup>(load(text)); }, py::arg("text"),
        "Parse a presentation from text");
  m.def("load_file", [](const std::filesystem::path& p) { return std::make_shared<FiniteGroup>(load_file(p)); },
        py::arg("path"));

  m.def("algebra_multiply", [](const GroupPtr& g, const std::vector<std::uint32_t>& x,
                               const std::vector<std::uint32_t>& y) {
    return support_of(algebra_element(*g, x) * algebra_element(*g, y));
  }, py::arg("group"), py::arg("x"), py::arg("y"), "Product in GF(2)[G] of two supports (element indices)");
  m.def("augmentation", [](const GroupPtr& g, const std::vector<std::uint32_t>& x) {
    return augmentation(algebra_element(*g, x));
  });
  m.def("unit_order", [](const GroupPtr& g, const std::vector<std::uint32_t>& x) {
    return unit_order(NormalizedUnit(algebra_element(*g, x)));
  });
  m.def("unit_inverse", [](const GroupPtr& g, const std::vector<std::uint32_t>& x) {
    return support_of(inverse_unit(NormalizedUnit(algebra_element(*g, x))).value());
  });

  m.def("check_hypotheses", [](const GroupPtr& g) { return to_json(*g, check_hypotheses(*g)).dump(); },
        py::arg("group"), "Hypothesis report as a JSON string");
  m.def("construct", [](const GroupPtr& g, bool oracle, std::size_t cap, std::optional<std::uint32_t> a,
                        std::optional<std::uint32_t> b, std::optional<std::uint32_t> z) {
    SectionOptions options;
    options.oracle = oracle;
    options.cap = cap;
    return to_json(*g, run_construction(*g, options, constraints(*g, a, b, z))).dump();
  }, py::arg("group"), py::arg("oracle") = false, py::arg("cap") = kDefaultClosureCap, py::arg("a") = py::none(),
     py::arg("b") = py::none(), py::arg("z") = py::none(), "Section report as a JSON string");
  m.def("scan", [](const std::filesystem::path& dir, std::optional<std::size_t> order) {
    return to_json(scan(dir, order)).dump();
  }, py::arg("dir"), py::arg("order") = py::none(), "Census as a JSON string");
  m.def("verify_all", [](const std::filesystem::path& dir, std::optional<std::size_t> order, bool fail_fast) {
    SectionOptions options;
    options.oracle = true;
    return to_json(verify_all(dir, order, fail_fast ? VerifyMode::first_failure : VerifyMode::collect_all, options))
        .dump();
  }, py::arg("dir"), py::arg("order") = py::none(), py::arg("fail_fast") = false);
  m.def("reference_wreath", [](int s) { return to_json(reference_wreath(s)).dump(); }, py::arg("s"),
        "C2 wr C_(2^s) with its multiplication table, as a JSON string");
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run the command-line interface; returns (exit_code, stdout, stderr)");
}
