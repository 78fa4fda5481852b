#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "lqca/affine.hpp"
#include "lqca/border.hpp"
#include "lqca/check.hpp"
#include "lqca/document.hpp"
#include "lqca/evolution.hpp"
#include "lqca/transfer.hpp"

namespace py = pybind11;
using namespace lqca;

namespace {

py::object json_to_python(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Configuration to_configuration(const Automaton& a, const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return parse_configuration(a, obj.cast<std::string>());
  if (py::isinstance<py::dict>(obj)) {
    std::map<CellIndex, StateIndex> cells;
    for (auto [k, v] : obj.cast<py::dict>()) cells[k.cast<CellIndex>()] = a.state_index(v.cast<std::string>());
    if (cells.empty()) return {};
    const CellIndex lo = cells.begin()->first;
    std::vector<StateIndex> dense(static_cast<std::size_t>(cells.rbegin()->first - lo + 1), 0);
    for (auto [i, s] : cells) dense[static_cast<std::size_t>(i - lo)] = s;
    return Configuration(lo, dense);
  }
  throw py::type_error("configuration must be a string like '-1:b,0:b' or a dict {cell: state}");
}

py::dict configuration_dict(const Automaton& a, const Configuration& c) {
  py::dict out;
  for (std::size_t i = 0; i < c.cells().size(); ++i) {
    if (c.cells()[i] != 0) out[py::int_(c.start() + static_cast<CellIndex>(i))] = a.symbol(c.cells()[i]);
  }
  return out;
}

Word to_word(const Automaton& a, const py::object& obj) {
  std::vector<std::string> symbols;
  if (py::isinstance<py::str>(obj)) {
    symbols = split_word(obj.cast<std::string>(), a.symbols());
  } else {
    symbols = obj.cast<std::vector<std::string>>();
  }
  Word w;
  for (const auto& s : symbols) w.push_back(a.state_index(s));
  return w;
}

CheckOptions make_options(double tolerance, std::optional<std::size_t> window) {
  CheckOptions o;
  o.tol = Tolerance::from_membership(tolerance);
  o.oracle_window = window;
  return o;
}

}  // namespace

PYBIND11_MODULE(_lqca, m) {
  m.doc() = "Unitarity decision for linear quantum cellular automata";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<OracleScaleError>(m, "OracleScaleError", PyExc_RuntimeError);

  py::class_<Tolerance>(m, "Tolerance")
      .def(py::init<>())
      .def_static("from_membership", &Tolerance::from_membership)
      .def_readwrite("zero_abs", &Tolerance::zero_abs)
      .def_readwrite("star_gap", &Tolerance::star_gap)
      .def_readwrite("membership_rel", &Tolerance::membership_rel);

  py::class_<Automaton>(m, "Automaton")
      .def_property_readonly("symbols", &Automaton::symbols)
      .def_property_readonly("neighborhood", [](const Automaton& a) { return a.neighborhood().offsets; })
      .def_property_readonly("alphabet_size", &Automaton::alphabet_size)
      .def_property_readonly("radius", &Automaton::radius)
      .def_property_readonly("border_dim", &Automaton::border_dim)
      .def_property_readonly("expansion_factor", &Automaton::expansion_factor)
      .def("amplitude",
           [](const Automaton& a, const py::object& word, const std::string& y) {
             return a.amplitude(to_word(a, word), a.state_index(y));
           })
      .def("to_json", [](const Automaton& a) { return serialize(to_document(a)); })
      .def("__repr__", [](const Automaton& a) {
        return "<Automaton k=" + std::to_string(a.alphabet_size()) + " r=" + std::to_string(a.radius()) + ">";
      });

  m.def("parse", [](const std::string& text) { return to_automaton(parse_document(text)); }, py::arg("text"));
  m.def("load", [](const std::filesystem::path& p) { return to_automaton(load_document(p)); }, py::arg("path"));
  m.def("expand_to_simple", &expand_to_simple);
  m.def("normalize_neighborhood", &normalize_neighborhood);
  m.def("mirror", &mirror);

  m.def(
      "validate",
      [](const Automaton& a) {
        const ValidationReport r = validate(a);
        py::list violations;
        for (const auto& v : r.violations) violations.append(py::make_tuple(std::string(to_string(v.kind)), v.message));
        return py::dict(py::arg("ok") = r.ok(), py::arg("violations") = violations, py::arg("notes") = r.notes);
      },
      py::arg("automaton"));

  m.def(
      "check",
      [](const py::object& src, double tolerance, std::optional<std::size_t> window) {
        const CheckOptions o = make_options(tolerance, window);
        if (py::isinstance<Automaton>(src)) return json_to_python(to_json(check(src.cast<const Automaton&>(), o)));
        return json_to_python(to_json(check_file(src.cast<std::filesystem::path>(), o)));
      },
      py::arg("automaton"), py::arg("tolerance") = 1e-8, py::arg("window") = py::none(),
      "Decide unitarity of an Automaton or a JSON file; returns the report as a dict.");

  m.def(
      "border_vectors",
      [](const Automaton& a, double tolerance) {
        const BorderVectors b = border_vectors(a, Tolerance::from_membership(tolerance));
        return py::make_tuple(b.l, b.r);
      },
      py::arg("automaton"), py::arg("tolerance") = 1e-8);

  m.def(
      "transfer_operators",
      [](const Automaton& a) {
        std::vector<Eigen::MatrixXd> out;
        for (auto& op : build_transfer_operators(a)) out.push_back(op.matrix);
        return out;
      },
      py::arg("automaton"));

  m.def(
      "row_norm_squared",
      [](const Automaton& a, const py::object& config) {
        const Automaton n = normalize_neighborhood(expand_to_simple(a));
        const BorderVectors b = border_vectors(n);
        return row_norm_squared(build_transfer_operators(n), b.l, b.r, to_configuration(a, config));
      },
      py::arg("automaton"), py::arg("configuration"));

  m.def(
      "decide_closed",
      [](const Eigen::VectorXd& l, const Eigen::VectorXd& r, const std::vector<Eigen::MatrixXd>& ops,
         double tolerance) {
        std::vector<TransferOperator> t;
        for (std::size_t i = 0; i < ops.size(); ++i) t.push_back({i, ops[i]});
        const ClosureVerdict v = decide_closed(l, r, t, Tolerance::from_membership(tolerance));
        py::object witness = v.witness_word ? py::cast(*v.witness_word) : py::none();
        return py::dict(py::arg("closed") = v.closed, py::arg("witness") = witness,
                        py::arg("dimension") = v.final_dimension, py::arg("basis") = v.basis);
      },
      py::arg("l"), py::arg("r"), py::arg("operators"), py::arg("tolerance") = 1e-8);

  m.def(
      "step",
      [](const Automaton& a, const py::object& config, int steps) {
        Superposition s = Superposition::pure(to_configuration(a, config));
        for (int i = 0; i < steps; ++i) s = step(a, s);
        py::list out;
        for (const auto& [c, amp] : s.terms()) out.append(py::make_tuple(configuration_dict(a, c), amp));
        return out;
      },
      py::arg("automaton"), py::arg("configuration"), py::arg("steps") = 1);

  m.def(
      "truncated_row_norm",
      [](const Automaton& a, const py::object& config, CellIndex lo, CellIndex hi) {
        return truncated_row_norm(a, to_configuration(a, config), Interval{lo, hi});
      },
      py::arg("automaton"), py::arg("configuration"), py::arg("lo"), py::arg("hi"));

  py::class_<DynamicBasis>(m, "DynamicBasis")
      .def(py::init([](std::size_t ambient, double tolerance) {
             return DynamicBasis(ambient, Tolerance::from_membership(tolerance));
           }),
           py::arg("ambient"), py::arg("tolerance") = 1e-8)
      .def_property_readonly("dim", &DynamicBasis::dim)
      .def_property_readonly("multiplications", &DynamicBasis::multiplications)
      .def("member", &DynamicBasis::member)
      .def("add", [](DynamicBasis& b, const Eigen::VectorXd& u) { b.add(u); });
}
