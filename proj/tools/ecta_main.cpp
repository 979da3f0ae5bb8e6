// ecta: command line front end for the automata library.
//
// Exit codes: 0 success, 1 usage error, 2 input or internal error,
// 3 check failure or timeout, 10 satisfiable, 20 unsatisfiable.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ecta/enumerate.hpp"
#include "ecta/nodes.hpp"
#include "ecta/random.hpp"
#include "ecta/reduce.hpp"
#include "ecta/sat.hpp"
#include "ecta/synth.hpp"
#include "ecta/terms.hpp"
#include "ecta/textio.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct StatsSink {
  bool enabled = false;
  std::vector<std::pair<std::string, std::string>> kv;

  void add(const std::string& k, uint64_t v) { kv.emplace_back(k, std::to_string(v)); }
  void add(const std::string& k, long v) { kv.emplace_back(k, std::to_string(v)); }
  void add(const std::string& k, int v) { kv.emplace_back(k, std::to_string(v)); }
  void add(const std::string& k, const std::string& v) { kv.emplace_back(k, v); }

  void flush() {
    if (!enabled) return;
    for (auto& [k, v] : kv) std::cout << k << "=" << v << "\n";
  }
};

ecta::Schedule parse_schedule(const std::string& s) {
  if (s == "lr") return ecta::Schedule::DfsLR;
  if (s == "rl") return ecta::Schedule::DfsRL;
  throw CLI::ValidationError("--schedule", "expected lr or rl");
}

void arm_timeout(double secs) {
  if (secs <= 0) return;
  std::thread([secs] {
    std::this_thread::sleep_for(std::chrono::duration<double>(secs));
    std::cerr << "error: timeout\n";
    std::_Exit(3);
  }).detach();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equality-constrained tree automata toolkit"};
  app.require_subcommand(1);

  uint64_t seed = 0;
  double timeout_secs = 0;
  StatsSink stats;
  app.add_option("--seed", seed, "seed for randomized subcommands");
  app.add_option("--timeout-secs", timeout_secs, "abort after this many seconds");
  app.add_flag("--stats", stats.enabled, "print key=value stats lines on stdout");

  std::string in_path, schedule_name = "lr";

  auto* sat = app.add_subcommand("sat", "solve a DIMACS CNF file");
  bool sat_all = false;
  int sat_reduce = 0;
  sat->add_option("file", in_path, "CNF file, or - for stdin")->required();
  sat->add_flag("--all", sat_all, "enumerate every model");
  sat->add_option("--reduce-rounds", sat_reduce, "static reduction rounds before solving");
  sat->add_option("--schedule", schedule_name, "enumeration order: lr or rl");

  auto* synth = app.add_subcommand("synth", "enumerate well-typed terms for a query type");
  std::string lib_path, query_str;
  std::vector<std::string> input_names;
  uint32_t max_size = 6;
  bool no_relevancy = false, naive = false, first_only = false;
  uint64_t naive_budget = 1000000, max_per_size = 4096;
  int synth_reduce = 30;
  synth->add_option("--library", lib_path, "component signatures, one `name :: type` per line")
      ->required();
  synth->add_option("--query", query_str, "goal type, e.g. \"a -> [Maybe a] -> a\"")->required();
  synth->add_option("--inputs", input_names, "names for the query arguments")
      ->delimiter(',');
  synth->add_option("--max-size", max_size, "largest term size to try");
  synth->add_flag("--no-relevancy", no_relevancy, "allow terms that ignore query arguments");
  synth->add_flag("--naive", naive, "generate-and-filter baseline instead of automata");
  synth->add_option("--naive-budget", naive_budget, "candidate cap for --naive");
  synth->add_option("--reduce-rounds", synth_reduce, "static reduction rounds per size");
  synth->add_option("--max-per-size", max_per_size, "enumeration state cap per term size");
  synth->add_flag("--first", first_only, "stop at the first candidate");
  synth->add_option("--schedule", schedule_name, "enumeration order: lr or rl");

  auto* enumc = app.add_subcommand("enumerate", "enumerate an automaton from its text form");
  uint64_t enum_limit = 0;
  bool do_expand = false;
  uint32_t max_depth = 0;
  enumc->add_option("file", in_path, "automaton text file, or - for stdin")->required();
  enumc->add_option("--limit", enum_limit, "stop after this many compact states (0 = all)");
  enumc->add_flag("--expand", do_expand, "print concrete terms instead of compact states");
  enumc->add_option("--max-depth", max_depth,
                    "with --expand: depth bound for terms (0 = exact language)");
  enumc->add_option("--schedule", schedule_name, "enumeration order: lr or rl");

  auto* reduce = app.add_subcommand("reduce", "statically reduce an automaton");
  int rounds = 30;
  std::string algo = "optimized";
  reduce->add_option("file", in_path, "automaton text file, or - for stdin")->required();
  reduce->add_option("--rounds", rounds, "max reduction rounds");
  reduce->add_option("--algo", algo, "basic or optimized");

  auto* dot = app.add_subcommand("dot", "export an automaton to Graphviz DOT");
  dot->add_option("file", in_path, "automaton text file, or - for stdin")->required();

  auto* oracle = app.add_subcommand("oracle-check",
                                    "diff enumeration against the direct denotation");
  uint32_t depth = 5;
  oracle->add_option("file", in_path, "automaton text file, or - for stdin")->required();
  oracle->add_option("--depth", depth, "term depth bound for the comparison");

  auto* randc = app.add_subcommand("random", "emit a seeded random acyclic automaton");
  ecta::RandomEctaOptions ropts;
  randc->add_option("--max-nodes", ropts.max_nodes, "node count cap");
  randc->add_option("--max-pecs", ropts.max_pecs_per_edge, "constraint cap per edge");

  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; })) {
    sc->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  arm_timeout(timeout_secs);

  try {
    ecta::SymbolTable syms;
    ecta::NodeStore store(syms);

    if (*sat) {
      ecta::Cnf cnf = ecta::parse_dimacs(read_input(in_path));
      ecta::SatOptions opts;
      opts.all = sat_all;
      opts.schedule = parse_schedule(schedule_name);
      opts.reduce_rounds = sat_reduce;
      ecta::SatResult res = ecta::sat_solve(store, cnf, opts);
      std::cout << (res.sat ? "s SATISFIABLE" : "s UNSATISFIABLE") << "\n";
      for (const ecta::SatModel& m : res.models) {
        std::cout << ecta::model_to_string(m) << "\n";
      }
      if (sat_all && cnf.num_vars <= 24) {
        std::cout << "c full-model-count " << res.full_model_count << "\n";
      }
      stats.add("models", static_cast<uint64_t>(res.models.size()));
      stats.add("full_model_count", res.full_model_count);
      stats.add("steps", res.stats.steps);
      stats.add("states_explored", res.stats.states_explored);
      stats.add("dead_branches", res.stats.dead_branches);
      stats.add("edges_removed", res.edges_removed);
      stats.flush();
      return res.sat ? 10 : 20;
    }

    if (*synth) {
      ecta::SynthesisProblem prob;
      prob.library = ecta::parse_library(read_input(lib_path));
      prob.query = ecta::parse_type(query_str);
      prob.input_names = input_names;
      prob.max_size = max_size;
      ecta::SynthOptions opts;
      opts.relevancy = !no_relevancy;
      opts.reduce_rounds = synth_reduce;
      opts.naive = naive;
      opts.naive_budget = naive_budget;
      opts.max_per_size = max_per_size;
      opts.schedule = parse_schedule(schedule_name);
      ecta::SynthResult res =
          ecta::synthesize(store, prob, opts, [&](const ecta::Candidate& c) {
            std::cout << "size " << c.size << ": " << c.term << "\n";
            return !first_only;
          });
      std::cout << "c " << res.candidates.size() << " candidate"
                << (res.candidates.size() == 1 ? "" : "s") << "\n";
      stats.add("candidates", static_cast<uint64_t>(res.candidates.size()));
      stats.add("states_explored", res.stats.states_explored);
      stats.add("dead_branches", res.stats.dead_branches);
      stats.add("enum_steps", res.stats.enum_steps);
      stats.add("edges_removed", res.stats.edges_removed);
      stats.add("budget_exhausted", std::string(res.stats.budget_exhausted ? "1" : "0"));
      stats.flush();
      return 0;
    }

    if (*enumc) {
      ecta::NodeId root = ecta::parse_ecta_text(store, read_input(in_path));
      ecta::EnumOptions opts;
      opts.limit = enum_limit == 0 ? UINT64_MAX : enum_limit;
      opts.schedule = parse_schedule(schedule_name);
      ecta::TermStore terms(syms);
      std::set<std::string> expanded;
      uint64_t state_no = 0;
      ecta::EnumStats es = ecta::enumerate(store, root, opts, [&](const ecta::EnumState& st) {
        if (do_expand) {
          auto ts = max_depth > 0 ? ecta::expand_bounded(store, terms, st, max_depth)
                                  : ecta::expand(store, terms, st, 1u << 20);
          for (ecta::TermId t : ts) expanded.insert(ecta::term_to_string(terms, t));
        } else {
          std::cout << "-- state " << state_no++ << "\n"
                    << ecta::enum_state_to_string(store, st);
        }
        return true;
      });
      for (const std::string& t : expanded) std::cout << t << "\n";
      stats.add("states", es.yielded);
      stats.add("steps", es.steps);
      stats.add("states_explored", es.states_explored);
      stats.add("dead_branches", es.dead_branches);
      if (do_expand) stats.add("terms", static_cast<uint64_t>(expanded.size()));
      stats.flush();
      return 0;
    }

    if (*reduce) {
      if (algo != "basic" && algo != "optimized") {
        std::cerr << "error: --algo expects basic or optimized\n";
        return 1;
      }
      ecta::NodeId root = ecta::parse_ecta_text(store, read_input(in_path));
      ecta::ReduceOptions opts;
      opts.max_rounds = rounds;
      opts.basic = algo == "basic";
      auto [reduced, report] = ecta::reduce_fixpoint(store, root, opts);
      std::cout << ecta::print_ecta_text(store, reduced);
      stats.add("rounds_run", report.rounds_run);
      stats.add("edges_removed", report.edges_removed);
      stats.add("converged", std::string(report.converged ? "1" : "0"));
      stats.flush();
      return 0;
    }

    if (*dot) {
      ecta::NodeId root = ecta::parse_ecta_text(store, read_input(in_path));
      std::cout << ecta::export_dot(store, root);
      return 0;
    }

    if (*oracle) {
      ecta::NodeId root = ecta::parse_ecta_text(store, read_input(in_path));
      if (!ecta::is_finitely_constrained(store, root)) {
        std::cerr << "error: constraints inside recursion, no direct denotation\n";
        return 2;
      }
      ecta::TermStore terms(syms);
      std::vector<ecta::TermId> want = ecta::denote_bounded(store, terms, root, depth);
      std::set<ecta::TermId> got;
      ecta::EnumOptions opts;
      ecta::enumerate(store, root, opts, [&](const ecta::EnumState& st) {
        auto ts = ecta::expand_bounded(store, terms, st, depth);
        got.insert(ts.begin(), ts.end());
        return true;
      });
      std::set<ecta::TermId> want_set(want.begin(), want.end());
      bool ok = want_set == got;
      for (ecta::TermId t : want_set) {
        if (!got.count(t)) {
          std::cout << "only-denote: " << ecta::term_to_string(terms, t) << "\n";
        }
      }
      for (ecta::TermId t : got) {
        if (!want_set.count(t)) {
          std::cout << "only-enumerate: " << ecta::term_to_string(terms, t) << "\n";
        }
      }
      std::cout << (ok ? "ok " : "MISMATCH ") << want_set.size() << " terms at depth "
                << depth << "\n";
      stats.add("terms", static_cast<uint64_t>(want_set.size()));
      stats.add("match", std::string(ok ? "1" : "0"));
      stats.flush();
      return ok ? 0 : 3;
    }

    if (*randc) {
      std::mt19937_64 rng(seed);
      ecta::NodeId root = ecta::random_acyclic_ecta(store, rng, ropts);
      std::cout << ecta::print_ecta_text(store, root);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
