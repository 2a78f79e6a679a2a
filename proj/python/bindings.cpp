// Python bindings. Values cross the boundary as JSON text in the same schemas as the
// CLI files; the qfold package turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qfold/corpus.hpp"
#include "qfold/explorer.hpp"
#include "qfold/json_io.hpp"
#include "qfold/service.hpp"
#include "qfold/special_rules.hpp"
#include "qfold/verify.hpp"

namespace py = pybind11;
using namespace qfold;
using json_io::Json;

namespace {

FoldedMatrix matrix(const std::string& text) { return json_io::folded_from_json(json_io::parse(text)); }
Quiver quiver(const std::string& text) { return json_io::quiver_from_json(json_io::parse(text)); }

int index(int k, int size, const char* what) {
  if (k < 1 || k > size) throw Error("invalid_index", std::string(what) + " out of range", {k});
  return k - 1;
}

}  // namespace

PYBIND11_MODULE(_qfold, m) {
  m.doc() = "folded quivers: folding, mutation rules, exchange graphs";

  // The message is the error JSON, so callers get code, detail and witness.
  static PyObject* error_type = PyErr_NewException("qfold._qfold.QfoldError", PyExc_ValueError, nullptr);
  m.attr("QfoldError") = py::handle(error_type).inc_ref();
  py::register_local_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error_type, json_io::error_json(e).dump().c_str());
    }
  });

  m.def("fold", [](const std::string& q, const std::string& action, std::optional<std::vector<int>> reps) {
    const Quiver qq = quiver(q);
    QuiverAction a = json_io::action_from_json(qq, json_io::parse(action));
    if (reps) {
      for (int& r : *reps) r = index(r, qq.size(), "representative");
      a = a.with_representatives(*reps);
    }
    return json_io::to_json(fold(a)).dump();
  }, py::arg("quiver"), py::arg("action"), py::arg("reps") = py::none());

  m.def("mutate", [](const std::string& b, int k, const std::string& rule) {
    const FoldedMatrix mm = matrix(b);
    const RuleMutation r = mutate_with_rule(mm, index(k, mm.size(), "k"), parse_rule(rule));
    std::vector<std::pair<int, int>> stale;
    for (const auto& [i, j] : r.result.stale) stale.emplace_back(i + 1, j + 1);
    return py::make_tuple(json_io::to_json(r.result.matrix).dump(), std::string(to_string(r.kind)), stale);
  }, py::arg("matrix"), py::arg("k"), py::arg("rule") = "auto");

  m.def("unfold", [](const std::string& b) {
    const QuiverAction a = canonical_unfold(matrix(b));
    return py::make_tuple(json_io::to_json(a.quiver).dump(), json_io::to_json(a).dump());
  });

  m.def("weave", [](const std::string& b, int j, const std::string& element) {
    const FoldedMatrix mm = matrix(b);
    const auto g = mm.group->find(json_io::group_element_from_json(json_io::parse(element)));
    if (!g) throw Error("not_in_group", "element is not in the matrix's group");
    return json_io::to_json(weave(mm, index(j, mm.size(), "j"), *g)).dump();
  });

  m.def("weaving_isomorphic", [](const std::string& a, const std::string& b) {
    return weaving_isomorphic(matrix(a), matrix(b)).has_value();
  });

  m.def("matrix_graph", [](const std::string& b, std::size_t budget) {
    return json_io::to_json(exchange_graph(matrix(b), GraphOptions{budget})).dump();
  }, py::arg("matrix"), py::arg("budget") = default_graph_budget, py::call_guard<py::gil_scoped_release>());

  m.def("quiver_graph", [](const std::string& q, std::size_t budget, bool framed) {
    return json_io::to_json(exchange_graph(quiver(q), GraphOptions{budget}, framed)).dump();
  }, py::arg("quiver"), py::arg("budget") = default_graph_budget, py::arg("framed") = false,
        py::call_guard<py::gil_scoped_release>());

  m.def("reddening_search", [](const std::string& q, int depth) -> std::optional<std::string> {
    const auto s = reddening_search(quiver(q), depth);
    if (!s) return std::nullopt;
    return json_io::to_json(*s).dump();
  }, py::call_guard<py::gil_scoped_release>());

  m.def("quiver_dot", [](const std::string& q, bool framed) {
    const Quiver qq = quiver(q);
    return framed ? export_dot(frame(qq)) : export_dot(qq);
  }, py::arg("quiver"), py::arg("framed") = false);

  m.def("corpus_names", [] {
    std::vector<std::string> out;
    for (const auto& nm : corpus::named_matrices()) out.push_back(nm.name);
    return out;
  });

  m.def("corpus_matrix", [](const std::string& name) {
    for (const auto& nm : corpus::named_matrices())
      if (nm.name == name) return json_io::to_json(nm.matrix).dump();
    throw Error("unknown_matrix", "no built-in matrix '" + name + "'");
  });

  m.def("verify", [](const std::string& suite, std::uint32_t seed) {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& r : verify::run_suite(suite, seed)) out.emplace_back(r.name, r.passed, r.detail);
    return out;
  }, py::arg("suite") = "all", py::arg("seed") = 1);

  py::class_<SessionService>(m, "SessionService")
      .def(py::init<>())
      .def("handle", [](SessionService& s, const std::string& method, const std::string& path, const std::string& body,
                        const std::map<std::string, std::string>& query) {
        const Response r = s.handle({method, path, body, query});
        return std::pair{r.status, r.body};
      }, py::arg("method"), py::arg("path"), py::arg("body") = "", py::arg("query") = std::map<std::string, std::string>{},
           py::call_guard<py::gil_scoped_release>());
}
