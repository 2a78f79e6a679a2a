// qfold: command-line front end. Files are the JSON forms from json_io; anything that
// produces JSON writes to -o or, without it, to stdout.

#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "qfold/corpus.hpp"
#include "qfold/explorer.hpp"
#include "qfold/http_server.hpp"
#include "qfold/json_io.hpp"
#include "qfold/special_rules.hpp"
#include "qfold/verify.hpp"

using namespace qfold;
using json_io::Json;

namespace {

void emit(const Json& j, const std::string& path) {
  if (path.empty())
    std::cout << j.dump(2) << "\n";
  else
    json_io::write_file(path, j);
}

std::vector<int> parse_reps(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      out.push_back(v - 1);
    } catch (const std::logic_error&) {
      throw Error("invalid_reps", "--reps expects 1-based vertices like 1,4,7; got '" + item + "'");
    }
  }
  return out;
}

HttpServer* running = nullptr;

void on_signal(int) {
  if (running) running->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Folded quivers: folding, mutation rules, exchange graphs"};
  app.require_subcommand(1);

  std::string quiver_path, action_path, matrix_path, out_path, reps, rule = "auto", element, dot_path, suite = "all",
                                                                      host = "127.0.0.1", action_out;
  int k = 1, j = 1, depth = 8, port = 7070;
  std::size_t max_nodes = default_graph_budget;
  bool framed = false;
  std::uint32_t seed = 1;

  auto* fold_cmd = app.add_subcommand("fold", "fold a quiver along a group action");
  fold_cmd->add_option("-q,--quiver", quiver_path, "quiver JSON")->required();
  fold_cmd->add_option("-a,--action", action_path, "action JSON")->required();
  fold_cmd->add_option("--reps", reps, "orbit representatives, 1-based, comma separated");
  fold_cmd->add_option("-o,--output", out_path);

  auto* mutate_cmd = app.add_subcommand("mutate", "mutate a folded matrix at one index");
  mutate_cmd->add_option("-m,--matrix", matrix_path)->required();
  mutate_cmd->add_option("-k,--index", k, "1-based index")->required();
  mutate_cmd->add_option("--rule", rule, "auto|standard|diag3|diag4|markov");
  mutate_cmd->add_option("-o,--output", out_path);

  auto* unfold_cmd = app.add_subcommand("unfold", "canonical unfolding of a folded matrix");
  unfold_cmd->add_option("-m,--matrix", matrix_path)->required();
  unfold_cmd->add_option("-o,--output", out_path, "quiver JSON");
  unfold_cmd->add_option("--action-output", action_out, "also write the group action");

  auto* weave_cmd = app.add_subcommand("weave", "change the representative of one orbit");
  weave_cmd->add_option("-m,--matrix", matrix_path)->required();
  weave_cmd->add_option("-j,--index", j, "1-based index")->required();
  weave_cmd->add_option("-g,--element", element, "group element JSON")->required();
  weave_cmd->add_option("-o,--output", out_path);

  auto* graph_cmd = app.add_subcommand("graph", "exchange graph up to weaving or quiver isomorphism");
  auto* graph_m = graph_cmd->add_option("-m,--matrix", matrix_path);
  auto* graph_q = graph_cmd->add_option("-q,--quiver", quiver_path);
  graph_m->excludes(graph_q);
  graph_cmd->add_flag("--framed", framed, "explore the framed quiver (with -q)");
  graph_cmd->add_option("--max-nodes", max_nodes, "node budget")->check(CLI::PositiveNumber);
  graph_cmd->add_option("--dot", dot_path, "write Graphviz text here");
  graph_cmd->add_option("-o,--output", out_path);

  auto* redseq_cmd = app.add_subcommand("redseq", "search for a reddening sequence");
  redseq_cmd->add_option("-q,--quiver", quiver_path)->required();
  redseq_cmd->add_option("--depth", depth)->check(CLI::NonNegativeNumber);
  redseq_cmd->add_option("-o,--output", out_path);

  auto* dot_cmd = app.add_subcommand("dot", "Graphviz text for a quiver");
  dot_cmd->add_option("-q,--quiver", quiver_path)->required();
  dot_cmd->add_flag("--framed", framed);

  auto* verify_cmd = app.add_subcommand("verify", "run built-in checks");
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"all", "theorems", "diag3", "diag4", "markov", "corpus"}));
  verify_cmd->add_option("--seed", seed);

  auto* serve_cmd = app.add_subcommand("serve", "HTTP session service for the explorer UI");
  serve_cmd->add_option("--port", port)->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--host", host);

  auto* corpus_cmd = app.add_subcommand("corpus", "built-in example matrices");
  corpus_cmd->require_subcommand(1);
  corpus_cmd->add_subcommand("list", "names of the built-in matrices");
  std::string corpus_name;
  auto* dump_cmd = corpus_cmd->add_subcommand("dump", "write one built-in matrix");
  dump_cmd->add_option("name", corpus_name)->required();
  dump_cmd->add_option("-o,--output", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fold_cmd) {
      const Quiver q = json_io::quiver_from_json(json_io::read_file(quiver_path));
      QuiverAction a = json_io::action_from_json(q, json_io::read_file(action_path));
      if (!reps.empty()) a = a.with_representatives(parse_reps(reps));
      emit(json_io::to_json(fold(a)), out_path);
    } else if (*mutate_cmd) {
      const FoldedMatrix b = json_io::folded_from_json(json_io::read_file(matrix_path));
      if (k < 1 || k > b.size()) throw Error("invalid_index", "-k out of range", {k});
      const RuleMutation r = mutate_with_rule(b, k - 1, parse_rule(rule));
      for (const auto& [s, t] : r.result.stale)
        std::cerr << "warning: entry (" << s + 1 << "," << t + 1 << ") is not determined by the " << to_string(r.kind)
                  << " rule and was left unchanged\n";
      emit(json_io::to_json(r.result.matrix), out_path);
    } else if (*unfold_cmd) {
      const QuiverAction a = canonical_unfold(json_io::folded_from_json(json_io::read_file(matrix_path)));
      emit(json_io::to_json(a.quiver), out_path);
      if (!action_out.empty()) json_io::write_file(action_out, json_io::to_json(a));
    } else if (*weave_cmd) {
      const FoldedMatrix b = json_io::folded_from_json(json_io::read_file(matrix_path));
      if (j < 1 || j > b.size()) throw Error("invalid_index", "-j out of range", {j});
      const GroupElement g = json_io::group_element_from_json(json_io::parse(element));
      const auto x = b.group->find(g);
      if (!x) throw Error("not_in_group", "-g is not an element of the matrix's group");
      emit(json_io::to_json(weave(b, j - 1, *x)), out_path);
    } else if (*graph_cmd) {
      GraphOptions options;
      options.budget = max_nodes;
      ExchangeGraph g;
      if (!matrix_path.empty()) {
        g = exchange_graph(json_io::folded_from_json(json_io::read_file(matrix_path)), options);
      } else if (!quiver_path.empty()) {
        g = exchange_graph(json_io::quiver_from_json(json_io::read_file(quiver_path)), options, framed);
      } else {
        throw Error("missing_input", "graph needs -m or -q");
      }
      std::cerr << g.nodes.size() << " nodes, " << (g.complete ? "complete" : "budget reached") << ", "
                << g.terminal_count() << " terminal\n";
      if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        if (!dot) throw Error("io_error", "cannot write " + dot_path);
        dot << export_dot(g);
      }
      if (dot_path.empty() || !out_path.empty()) emit(json_io::to_json(g), out_path);
    } else if (*redseq_cmd) {
      const auto s = reddening_search(json_io::quiver_from_json(json_io::read_file(quiver_path)), depth);
      if (!s) std::cerr << "no reddening sequence of length <= " << depth << "\n";
      emit(s ? json_io::to_json(*s) : Json(nullptr), out_path);
    } else if (*dot_cmd) {
      const Quiver q = json_io::quiver_from_json(json_io::read_file(quiver_path));
      std::cout << (framed ? export_dot(frame(q)) : export_dot(q));
    } else if (*verify_cmd) {
      bool all = true;
      for (const auto& r : verify::run_suite(suite, seed)) {
        all = all && r.passed;
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.detail.empty()) std::cout << " [" << r.detail << "]";
        std::cout << " (" << std::fixed << std::setprecision(3) << r.seconds << " s)\n";
      }
      return all ? 0 : 1;
    } else if (*serve_cmd) {
      SessionService service;
      HttpServer server(service);
      const int bound = server.bind(host, port);
      std::cerr << "listening on http://" << host << ":" << bound << "\n";
      running = &server;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      server.listen();
      running = nullptr;
    } else if (*corpus_cmd) {
      if (corpus_cmd->got_subcommand("list")) {
        for (const auto& nm : corpus::named_matrices()) std::cout << nm.name << "\n";
      } else {
        for (const auto& nm : corpus::named_matrices())
          if (nm.name == corpus_name) {
            emit(json_io::to_json(nm.matrix), out_path);
            return 0;
          }
        throw Error("unknown_matrix", "no built-in matrix '" + corpus_name + "'; see `qfold corpus list`");
      }
    }
  } catch (const Error& e) {
    std::cerr << json_io::error_json(e).dump() << "\n";
    return 2;
  }
  return 0;
}
