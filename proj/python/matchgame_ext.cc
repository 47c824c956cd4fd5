// Copyright 2026 The Matchgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Python bindings. Strategies cross the boundary in their text file format so
// the Python side never has to mirror the C++ table layout.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "matchgame/cli.h"
#include "matchgame/coloring.h"
#include "matchgame/quantum.h"
#include "matchgame/search.h"
#include "matchgame/strategy.h"
#include "matchgame/strategy_io.h"

namespace py = pybind11;
using namespace matchgame;

namespace {

py::tuple ratio(const SuccessRatio& r) { return py::make_tuple(r.wins(), r.total()); }

std::vector<std::vector<int>> edge_list(const PerfectMatching& y) {
  std::vector<std::vector<int>> out;
  for (const Edge& e : y.edges()) out.push_back({e.lo, e.hi});
  return out;
}

}  // namespace

PYBIND11_MODULE(_matchgame, m) {
  m.doc() = "Matching game: strategies, impossibility tools and the entangled strategy";

  // Leaked on purpose: the module keeps its own reference for its lifetime.
  static py::handle parse_error = py::exception<ParseError>(m, "StrategyParseError", PyExc_ValueError).release();
  static py::handle budget_error =
      py::exception<BudgetExceededError>(m, "BudgetExceededError", PyExc_RuntimeError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::object err = parse_error(e.what());
      err.attr("line") = e.line();
      err.attr("column") = e.column();
      PyErr_SetObject(parse_error.ptr(), err.ptr());
    } catch (const BudgetExceededError& e) {
      py::object err = budget_error(e.what());
      err.attr("space") = py::int_(py::module_::import("builtins").attr("int")(e.space()));
      err.attr("budget") = e.budget();
      PyErr_SetObject(budget_error.ptr(), err.ptr());
    }
  });

  m.def("output_width", [](int size) { return GameInstance(size).output_width(); }, py::arg("m"));

  m.def(
      "enumerate_matchings",
      [](int size) {
        std::vector<std::string> out;
        for (const auto& y : enumerate_matchings(GameInstance(size))) out.push_back(y.to_string());
        return out;
      },
      py::arg("m"), "Every perfect matching of 0..m-1 in canonical order, as 'i-j,...' strings.");

  m.def(
      "wins_round",
      [](int size, const std::string& x, const std::string& y, int i, int j, const std::string& a,
         const std::string& b2) {
        GameInstance inst(size);
        return wins_round(inst, Question{BitString::parse(x), parse_matching(y, inst)},
                          Answer{Edge::of(i, j), BitString::parse(a), BitString::parse(b2)});
      },
      py::arg("m"), py::arg("x"), py::arg("y"), py::arg("i"), py::arg("j"), py::arg("a"), py::arg("b2"));

  m.def("figure_strategy", [](int size) { return serialize_strategy(figure_strategy(size)); }, py::arg("m"));
  m.def(
      "lemma1_strategy", [](int size) { return serialize_strategy(lemma1_strategy(GameInstance(size))); },
      py::arg("m"), "The W_m construction; matchings it leaves open are omitted from the text.");
  m.def(
      "complete_lemma1", [](int size) { return serialize_strategy(complete_lemma1(GameInstance(size))); },
      py::arg("m"));

  m.def(
      "evaluate", [](const std::string& text) { return ratio(success(DeterministicStrategy(parse_strategy(text)))); },
      py::arg("strategy"), "Exact (wins, total) of a total strategy.");
  m.def(
      "first_counterexample",
      [](const std::string& text) -> std::optional<std::pair<std::string, std::string>> {
        auto q = first_counterexample(parse_strategy(text));
        if (!q) return std::nullopt;
        return std::make_pair(q->x.to_string(), q->y.to_string());
      },
      py::arg("strategy"), "First lost (x, y) in canonical order, or None if every answered question is won.");
  m.def(
      "normalize_strategy", [](const std::string& text) { return serialize_strategy(parse_strategy(text)); },
      py::arg("strategy"));

  m.def(
      "exact_omega_d",
      [](int size, std::uint64_t budget) {
        OptimumResult r = exact_omega_d(GameInstance(size), budget);
        return py::make_tuple(ratio(r.success), serialize_strategy(r.witness));
      },
      py::arg("m"), py::arg("budget") = kDefaultOmegaBudget);

  m.def(
      "hill_climb",
      [](int size, std::uint64_t seed, std::uint64_t iterations, std::uint64_t restart_patience, bool from_lemma1) {
        GameInstance inst(size);
        HillClimbOptions options;
        options.seed = seed;
        options.iterations = iterations;
        options.restart_patience = restart_patience;
        if (from_lemma1) {
          DeterministicStrategy start = complete_lemma1(inst);
          options.initial_bob.emplace(start.bob_table().begin(), start.bob_table().end());
        }
        HillClimbResult r = hill_climb(inst, options);
        return py::make_tuple(ratio(r.success), serialize_strategy(r.strategy), r.restarts);
      },
      py::arg("m"), py::arg("seed") = 0, py::arg("iterations") = 1000, py::arg("restart_patience") = 0,
      py::arg("from_lemma1") = false, "Local search; the success found is only a lower bound on the optimum.");

  m.def(
      "audit",
      [](const std::string& text) {
        DeterministicStrategy s(parse_strategy(text));
        Lemma2Report r = audit_lemma2(s);
        py::dict out;
        out["alice_output"] = BitString(s.instance().output_width(), r.alice_output).to_string();
        out["class_size"] = r.output_class_size;
        out["required_size"] = r.required_size;
        out["class_size_ok"] = r.class_size_ok;
        out["max_component"] = r.max_component_size;
        out["component_threshold"] = r.component_threshold;
        out["component_ok"] = r.component_ok;
        out["parity_consistent"] = r.parity_consistent;
        return out;
      },
      py::arg("strategy"));

  m.def(
      "certificate",
      [](int size) {
        ImpossibilityCertificate c = theorem2_certificate(size);
        py::dict out;
        out["excluded"] = c.excluded;
        out["needed"] = c.components_needed;
        out["possible"] = c.components_possible;
        return out;
      },
      py::arg("m"));

  m.def(
      "count_colorings",
      [](int vertices, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& parity) {
        std::vector<Edge> es;
        for (auto [u, v] : edges) es.push_back(Edge::of(u, v));
        Graph g(vertices, es);
        // Values are given per input edge; realign them with the graph's sorted edges.
        std::vector<int> aligned(g.edges().size(), -1);
        if (parity.size() != edges.size()) throw std::invalid_argument("one parity value per edge is required");
        for (std::size_t k = 0; k < es.size(); ++k) {
          int& slot = aligned[*g.edge_index(es[k])];
          if (slot != -1 && slot != parity[k]) return std::uint64_t{0};
          slot = parity[k];
        }
        return count_colorings(g, ParityFunction(g, aligned));
      },
      py::arg("vertices"), py::arg("edges"), py::arg("parity"));

  m.def(
      "cross_component_matching",
      [](const std::vector<std::vector<int>>& parts) { return edge_list(cross_component_matching(parts)); },
      py::arg("parts"));

  m.def(
      "quantum_distribution",
      [](int size, const std::string& x, const std::string& y) {
        GameInstance inst(size);
        py::list out;
        for (const auto& [o, p] : joint_distribution(inst, BitString::parse(x), parse_matching(y, inst))) {
          out.append(py::make_tuple(o.a.to_string(), o.edge.to_string(), o.b2.to_string(), p));
        }
        return out;
      },
      py::arg("m"), py::arg("x"), py::arg("y"), "List of (a, edge, b2, probability) sorted by edge, b2, a.");

  m.def(
      "quantum_verify",
      [](int size) {
        QuantumVerification r = verify_always_wins_report(GameInstance(size));
        py::dict out;
        out["verified"] = r.verified;
        out["questions"] = r.questions;
        out["max_normalization_error"] = r.max_normalization_error;
        out["max_order_discrepancy"] = r.max_order_discrepancy;
        return out;
      },
      py::arg("m"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        int code = run_cli(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "", "Runs one CLI command in-process; returns (exit_code, stdout, stderr).");
}
