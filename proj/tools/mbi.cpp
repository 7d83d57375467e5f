// mbi: betweenness analysis, improvement runs and the incremental update
// benchmark from the command line.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "mbi/bc_static.hpp"
#include "mbi/errors.hpp"
#include "mbi/graph.hpp"
#include "mbi/harness.hpp"
#include "mbi/improve.hpp"

using json = nlohmann::ordered_json;
using namespace mbi;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

// Bad flag values that CLI11 cannot catch itself (generator strings etc).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requests that are well formed but cannot be served (unknown label, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphFlags {
  std::string path;
  std::string gen;
  bool directed = false;
  bool undirected = false;
  bool weighted = false;
  std::uint64_t seed = 1;
};

struct OutputFlags {
  std::string format = "json";
  std::string out;
};

void add_graph_flags(CLI::App* cmd, GraphFlags& f, bool allow_gen) {
  auto* graph = cmd->add_option("--graph", f.path, "edge-list file");
  if (allow_gen) {
    auto* gen = cmd->add_option("--gen", f.gen, "generate instead: pa:N:D or er:N:P");
    graph->excludes(gen);
  } else {
    graph->required();
  }
  auto* d = cmd->add_flag("--directed", f.directed, "treat arcs as directed (default)");
  cmd->add_flag("--undirected", f.undirected, "treat edges as undirected")->excludes(d);
  cmd->add_flag("--weighted", f.weighted, "read a third column as the weight");
}

void add_output_flags(CLI::App* cmd, OutputFlags& f) {
  cmd->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", f.out, "write to a file instead of stdout");
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError(std::string("bad ") + what + " '" + s + "'");
  return v;
}

double parse_double(const std::string& s, const char* what) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError(std::string("bad ") + what + " '" + s + "'");
  return v;
}

Graph make_undirected(const Graph& g) {
  Graph h(g.size(), false, g.weighted());
  for (const auto& [arc, w] : g.edges())
    if (!h.has_arc(arc.first, arc.second)) h.insert_edge({arc.first, arc.second, w});
  return h;
}

// "pa:N:D" or "er:N:P"
Graph generate(const std::string& recipe, std::uint64_t seed, bool directed) {
  std::vector<std::string> parts;
  std::stringstream ss(recipe);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 3) throw UsageError("generator must be pa:N:D or er:N:P, got '" + recipe + "'");
  const std::size_t n = parse_u64(parts[1], "node count");
  try {
    if (parts[0] == "pa") {
      Graph g = generate_pa(n, parse_u64(parts[2], "out-degree"), seed);
      return directed ? g : make_undirected(g);
    }
    if (parts[0] == "er") return generate_er(n, parse_double(parts[2], "probability"), seed, directed);
  } catch (const ArgumentError& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown generator '" + parts[0] + "' (expected pa or er)");
}

Graph load_graph(const GraphFlags& f) {
  const bool directed = !f.undirected;
  if (!f.gen.empty()) return generate(f.gen, f.seed, directed);
  if (f.path.empty()) throw UsageError("one of --graph or --gen is required");
  LoadResult r = load_edge_list_file(f.path, directed, f.weighted);
  if (r.dropped_duplicates || r.dropped_self_loops)
    std::cerr << "note: dropped " << r.dropped_duplicates << " duplicate edges and " << r.dropped_self_loops
              << " self-loops\n";
  return std::move(r.graph);
}

std::string label_of(const Graph& g, NodeId id) {
  return std::to_string(g.labels().empty() ? static_cast<Label>(id) : g.labels()[id]);
}

NodeId resolve(const Graph& g, const std::string& label) {
  Label l = 0;
  auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), l);
  if (ec == std::errc() && ptr == label.data() + label.size()) {
    if (g.labels().empty()) {
      if (l < g.size()) return static_cast<NodeId>(l);
    } else if (auto id = g.find_label(l)) {
      return *id;
    }
  }
  throw DomainError("unknown node label '" + label + "'");
}

// Output sink: stdout or a file.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw std::ios_base::failure("cannot open output file '" + path + "'");
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

// Shortest text that reads back to the same double.
std::string fmt(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

// ---- bc ----

struct BcFlags {
  GraphFlags graph;
  OutputFlags out;
  std::string node;
  int threads = 0;
};

int run_bc(const BcFlags& f) {
  const Graph g = load_graph(f.graph);
  if (f.threads > 0) omp_set_num_threads(f.threads);
  Sink sink(f.out.out);
  std::ostream& os = sink.os();
  if (!f.node.empty()) {
    const NodeId x = resolve(g, f.node);
    const double b = betweenness_of(g, x);
    if (f.out.format == "csv") {
      os << "node,betweenness\n" << label_of(g, x) << ',' << fmt(b) << '\n';
    } else {
      json j;
      j["schema_version"] = kSchemaVersion;
      j["node"] = label_of(g, x);
      j["betweenness"] = b;
      os << j.dump() << '\n';
    }
    return 0;
  }
  const std::vector<double> b = brandes_all(g);
  if (f.out.format == "csv") {
    os << "node,betweenness\n";
    for (NodeId i = 0; i < g.size(); ++i) os << label_of(g, i) << ',' << fmt(b[i]) << '\n';
  } else {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["nodes"] = json::array();
    for (NodeId i = 0; i < g.size(); ++i) j["nodes"].push_back({{"node", label_of(g, i)}, {"betweenness", b[i]}});
    os << j.dump() << '\n';
  }
  return 0;
}

// ---- improve ----

struct ImproveFlags {
  GraphFlags graph;
  OutputFlags out;
  std::string target;
  std::size_t pivots = 1;
  std::size_t k = 10;
  std::string algo = "greedy";
  int threads = 1;
  bool vs_oracle = false;
  bool no_timing = false;
  std::uint64_t budget = kDefaultSubsetBudget;
};

ImprovementSolution solve(const Graph& g, NodeId v, const ImproveFlags& f) {
  if (f.algo == "greedy") return greedy_mbi(g, v, f.k, {.threads = f.threads});
  if (f.algo == "greedy-pruned") return greedy_mbi_pruned(g, v, f.k);
  if (f.algo == "oracle") return brute_force_optimum(g, v, f.k, f.budget);
  if (f.algo == "top-degree") return baseline(g, v, f.k, BaselineKind::kTopDegree);
  if (f.algo == "top-betweenness") return baseline(g, v, f.k, BaselineKind::kTopBetweenness);
  return baseline(g, v, f.k, BaselineKind::kRandom, f.graph.seed ^ (static_cast<std::uint64_t>(v) << 32));
}

struct StepRecord {
  std::size_t step;
  std::optional<NodeId> tail;
  RankReport rank;
  double ms;
};

int run_improve(const ImproveFlags& f) {
  const Graph g = load_graph(f.graph);
  const std::vector<double> b0 = brandes_all(g);
  std::vector<NodeId> pivots;
  if (!f.target.empty())
    pivots.push_back(resolve(g, f.target));
  else
    pivots = sample_pivots(b0, f.pivots, f.graph.seed);

  Sink sink(f.out.out);
  std::ostream& os = sink.os();
  const bool csv = f.out.format == "csv";
  json doc;
  if (csv) {
    os << "pivot,step,edge_tail,edge_head,b_v,pct_b,rank,pct_rank,rho,ms\n";
  } else {
    doc["schema_version"] = kSchemaVersion;
    doc["algo"] = f.algo;
    doc["k"] = f.k;
    doc["seed"] = f.graph.seed;
    doc["pivots"] = json::array();
  }

  for (NodeId v : pivots) {
    const ImprovementSolution sol = solve(g, v, f);
    std::vector<StepRecord> steps;
    steps.push_back({0, std::nullopt, rank_report(b0, b0, v), 0.0});
    Graph cur = g;
    for (std::size_t i = 0; i < sol.tails.size(); ++i) {
      cur.insert_edge({sol.tails[i], v, 1.0});
      const std::vector<double> b1 = brandes_all(cur);
      RankReport rep = rank_report(b0, b1, v);
      // the solver's own value, which the static pass only cross-checks
      rep.b_after = sol.trace[i];
      rep.pct_b_after = percentage_betweenness(sol.trace[i], g.size());
      steps.push_back({i + 1, sol.tails[i], rep, f.no_timing ? 0.0 : sol.elapsed_ms[i]});
    }

    std::optional<double> ratio;
    if (f.vs_oracle) {
      const double opt = f.algo == "oracle" ? sol.final_value() : brute_force_optimum(g, v, f.k, f.budget).final_value();
      ratio = opt > 0.0 ? sol.final_value() / opt : 1.0;
    }

    const std::string pivot = label_of(g, v);
    if (csv) {
      for (const StepRecord& s : steps) {
        const RankReport& r = s.rank;
        os << pivot << ',' << s.step << ',' << (s.tail ? label_of(g, *s.tail) : "") << ','
           << (s.tail ? pivot : "") << ',' << fmt(r.b_after) << ','
           << (r.pct_b_after ? fmt(*r.pct_b_after) : "") << ',' << r.r_after << ',' << fmt(r.pct_r_after) << ','
           << r.rho << ',' << fmt(s.ms) << '\n';
      }
      continue;
    }
    json p;
    p["pivot"] = pivot;
    p["b_initial"] = sol.initial;
    p["pct_b_initial"] = opt_json(percentage_betweenness(sol.initial, g.size()));
    p["rank_initial"] = steps.front().rank.r_before;
    p["pct_rank_initial"] = steps.front().rank.pct_r_before;
    p["trace"] = json::array();
    for (std::size_t i = 1; i < steps.size(); ++i) {
      const RankReport& r = steps[i].rank;
      p["trace"].push_back({{"step", steps[i].step},
                            {"edge_tail", label_of(g, *steps[i].tail)},
                            {"edge_head", pivot},
                            {"b_v", r.b_after},
                            {"pct_b", opt_json(r.pct_b_after)},
                            {"rank", r.r_after},
                            {"pct_rank", r.pct_r_after},
                            {"rho", r.rho},
                            {"ms", steps[i].ms}});
    }
    p["b_final"] = sol.final_value();
    p["evaluations"] = sol.evaluations;
    if (ratio) p["ratio"] = *ratio;
    doc["pivots"].push_back(std::move(p));
  }
  if (!csv) os << doc.dump() << '\n';
  return 0;
}

// ---- update-bench ----

struct BenchFlags {
  GraphFlags graph;
  OutputFlags out;
  std::string target = "random";
  std::size_t trials = 100;
  std::size_t repeat = 1;
  bool no_timing = false;
};

json summary_json(const Summary& s) {
  return {{"mean", s.mean}, {"stddev", s.stddev}, {"min", s.min}, {"max", s.max}};
}

int run_bench(const BenchFlags& f) {
  Graph g = load_graph(f.graph);
  omp_set_num_threads(1);
  BenchOptions opts;
  opts.trials = f.trials;
  opts.seed = f.graph.seed;
  opts.repeat = std::max<std::size_t>(1, f.repeat);
  if (f.target != "random") opts.target = resolve(g, f.target);
  const Graph original = g;
  const BenchReport rep = run_update_bench(g, opts);
  auto ms = [&](double x) { return f.no_timing ? 0.0 : x; };

  Sink sink(f.out.out);
  std::ostream& os = sink.os();
  if (f.out.format == "csv") {
    os << "trial,tail,head,affected_pairs,si_ms,static_ms,speedup,equiv\n";
    for (std::size_t i = 0; i < rep.trials.size(); ++i) {
      const BenchTrial& t = rep.trials[i];
      os << i + 1 << ',' << label_of(original, t.edge.u) << ',' << label_of(original, t.edge.v) << ','
         << t.stats.affected_pairs << ',' << fmt(ms(t.si_ms)) << ',' << fmt(ms(t.static_ms)) << ','
         << fmt(ms(t.speedup)) << ',' << (t.equivalent ? "ok" : "FAIL") << '\n';
    }
  } else {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["target"] = label_of(original, rep.target);
    j["seed"] = f.graph.seed;
    j["trials"] = json::array();
    for (std::size_t i = 0; i < rep.trials.size(); ++i) {
      const BenchTrial& t = rep.trials[i];
      j["trials"].push_back({{"trial", i + 1},
                             {"tail", label_of(original, t.edge.u)},
                             {"head", label_of(original, t.edge.v)},
                             {"affected_pairs", t.stats.affected_pairs},
                             {"pairs_examined", t.stats.pairs_examined},
                             {"si_ms", ms(t.si_ms)},
                             {"static_ms", ms(t.static_ms)},
                             {"speedup", ms(t.speedup)},
                             {"equiv", t.equivalent ? "ok" : "FAIL"}});
    }
    if (!f.no_timing) {
      j["summary"] = {{"si_ms", summary_json(rep.si_ms)},
                      {"static_ms", summary_json(rep.static_ms)},
                      {"speedup", summary_json(rep.speedup)},
                      {"speedup_geomean", rep.speedup_geomean},
                      {"spearman_time_vs_pairs", rep.spearman_time_vs_pairs}};
    }
    j["all_equivalent"] = rep.all_equivalent;
    os << j.dump() << '\n';
  }
  if (!rep.all_equivalent) {
    std::cerr << "error: incremental state diverged from a fresh initialization\n";
    return kExitDomain;
  }
  return 0;
}

// ---- gen ----

struct GenFlags {
  std::string recipe;
  std::string out;
  std::uint64_t seed = 1;
  bool directed = false;
  bool undirected = false;
};

int run_gen(const GenFlags& f) {
  const Graph g = generate(f.recipe, f.seed, !f.undirected);
  Sink sink(f.out);
  write_edge_list(sink.os(), g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betweenness analysis and improvement"};
  app.require_subcommand(1);

  BcFlags bc;
  auto* bc_cmd = app.add_subcommand("bc", "betweenness of every node, or of one node");
  add_graph_flags(bc_cmd, bc.graph, false);
  add_output_flags(bc_cmd, bc.out);
  bc_cmd->add_option("--node", bc.node, "report only this label");
  bc_cmd->add_option("--threads", bc.threads, "OpenMP threads for the all-nodes pass (0: default)");

  ImproveFlags im;
  auto* im_cmd = app.add_subcommand("improve", "add k in-arcs to pivot nodes and report the effect");
  add_graph_flags(im_cmd, im.graph, true);
  add_output_flags(im_cmd, im.out);
  auto* target = im_cmd->add_option("--target", im.target, "pivot label");
  im_cmd->add_option("--pivots", im.pivots, "number of pivots sampled by rank quartile")->excludes(target);
  im_cmd->add_option("--seed", im.graph.seed, "seed for pivots, generators and the random baseline");
  im_cmd->add_option("--k", im.k, "edges to add per pivot");
  im_cmd->add_option("--algo", im.algo)
      ->check(CLI::IsMember({"greedy", "greedy-pruned", "top-degree", "top-betweenness", "random", "oracle"}));
  im_cmd->add_option("--threads", im.threads, "threads for greedy candidate evaluation (0: default)")
      ->check(CLI::NonNegativeNumber);
  im_cmd->add_flag("--vs-oracle", im.vs_oracle, "also run the exhaustive optimum and report the ratio");
  im_cmd->add_option("--budget", im.budget, "subset budget for the exhaustive optimum");
  im_cmd->add_flag("--no-timing", im.no_timing, "write 0 for wall-clock fields");

  BenchFlags be;
  auto* be_cmd = app.add_subcommand("update-bench", "time incremental updates against static recomputation");
  add_graph_flags(be_cmd, be.graph, true);
  add_output_flags(be_cmd, be.out);
  be_cmd->add_option("--trials", be.trials, "random insertions");
  be_cmd->add_option("--seed", be.graph.seed);
  be_cmd->add_option("--target", be.target, "pivot label or 'random'");
  be_cmd->add_option("--repeat", be.repeat, "incremental timing is the best of this many runs");
  be_cmd->add_flag("--no-timing", be.no_timing, "write 0 for wall-clock fields");

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "write a generated graph as an edge list");
  gen_cmd->add_option("--gen", gen.recipe, "pa:N:D or er:N:P")->required();
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--out", gen.out);
  auto* gd = gen_cmd->add_flag("--directed", gen.directed, "(default)");
  gen_cmd->add_flag("--undirected", gen.undirected)->excludes(gd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*bc_cmd) return run_bc(bc);
    if (*im_cmd) return run_improve(im);
    if (*be_cmd) return run_bench(be);
    return run_gen(gen);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const mbi::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}
