#pragma once

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "sline/sline.hpp"

namespace sline::cli {

/// Environment variable consulted for the default worker count.
inline constexpr const char* workers_env = "SLINE_WORKERS";

enum exit_code : int { ok = 0, failure = 1, usage = 2, mismatch = 3 };

struct RunConfig {
  std::string input;
  std::string orientation = "edge";
  std::size_t s = 1;
  std::string algorithm = "efficient";
  std::string preset;  // empty: individual flags or f0
  bool degree_pruning = false;
  bool skip_visited = false;
  bool short_circuit = false;
  std::string partition = "blocked";
  std::size_t workers = 1;
  std::size_t stride = 0;
  std::size_t chunk = 0;
  std::string relabel = "none";
  std::string output;
  std::string stats;
  std::string squeeze_map;
  bool weights = false;

  HeuristicConfig heuristics() const {
    if (!preset.empty()) return HeuristicConfig::preset(preset);
    if (degree_pruning || skip_visited || short_circuit) return {degree_pruning, skip_visited, short_circuit};
    return HeuristicConfig::all();
  }

  PartitionPlan plan() const { return {parse_strategy(partition), workers, stride, chunk}; }

  LoadOptions load_options() const {
    return {orientation == "vertex" ? Orientation::vertex_major : Orientation::edge_major, IdPolicy::automatic};
  }
};

inline std::size_t default_workers() {
  if (const char* env = std::getenv(workers_env)) {
    try {
      auto n = std::stoul(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace detail {

inline void add_input_options(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--input,-i", cfg.input, "Bipartite pair file (plain or gzip)")->required();
  cmd.add_option("--orientation", cfg.orientation, "Which column names the hyperedge")
      ->check(CLI::IsMember({"edge", "vertex"}))
      ->capture_default_str();
}

inline void add_overlap_options(CLI::App& cmd, RunConfig& cfg, bool with_s = true) {
  if (with_s) {
    cmd.add_option("--s,-s", cfg.s, "Minimum overlap size")->check(CLI::Range(std::size_t{1},
                                                                              std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();
  }
  cmd.add_option("--algorithm,-a", cfg.algorithm, "Overlap kernel")
      ->check(CLI::IsMember({"naive", "wedge", "efficient", "spgemm"}))
      ->capture_default_str();
  auto* preset = cmd.add_option("--heuristics", cfg.preset, "Heuristic preset f0..f4")
                     ->check(CLI::IsMember({"f0", "f1", "f2", "f3", "f4"}));
  auto* f1 = cmd.add_flag("--degree-pruning", cfg.degree_pruning, "Enable degree-based pruning only");
  auto* f2 = cmd.add_flag("--skip-visited", cfg.skip_visited, "Enable visited-hyperedge skipping only");
  auto* f3 = cmd.add_flag("--short-circuit", cfg.short_circuit, "Enable short-circuit intersection only");
  preset->excludes(f1)->excludes(f2)->excludes(f3);
  cmd.add_option("--partition", cfg.partition, "Outer-loop partitioning")
      ->check(CLI::IsMember({"blocked", "cyclic"}))
      ->capture_default_str();
  cmd.add_option("--workers,-w", cfg.workers, "Worker threads (default: $SLINE_WORKERS or hardware)")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--stride", cfg.stride, "Cyclic stride (default: workers)");
  cmd.add_option("--chunk", cfg.chunk, "Fixed blocked chunk size (0: adaptive)")->capture_default_str();
  cmd.add_option("--relabel", cfg.relabel, "Relabel hyperedges by size first")
      ->check(CLI::IsMember({"none", "asc", "desc"}))
      ->capture_default_str();
}

class output_file {
public:
  output_file(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
      return;
    }
    file_.open(path);
    if (!file_) throw std::runtime_error("cannot write " + path);
    stream_ = &file_;
  }
  std::ostream& get() { return *stream_; }
  void finish(const std::string& path) {
    stream_->flush();
    if (!*stream_) throw std::runtime_error("write failed: " + (path.empty() ? std::string("stdout") : path));
  }

private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

inline void write_json(const json& doc, const std::string& path, std::ostream& fallback) {
  output_file f(path, fallback);
  f.get() << doc.dump(2) << '\n';
  f.finish(path);
}

struct Pipeline {
  Hypergraph hypergraph;
  SLineEdgeList edges;  // in loaded (pre-relabel) IDs
  RunStats stats;
};

inline Pipeline load_and_overlap(const RunConfig& cfg) {
  Pipeline p;
  {
    PhaseTimer t(p.stats, "load");
    p.hypergraph = load_bipartite_file(cfg.input, cfg.load_options());
  }
  const auto algorithm = parse_algorithm(cfg.algorithm);
  if (cfg.relabel != "none") {
    std::pair<Hypergraph, RelabelMap> relabeled;
    {
      PhaseTimer t(p.stats, "relabel");
      relabeled = relabel_by_degree(p.hypergraph, cfg.relabel == "asc" ? RelabelOrder::ascending
                                                                       : RelabelOrder::descending);
    }
    auto [edges, stats] =
        compute_s_overlap(algorithm, relabeled.first, cfg.s, cfg.heuristics(), cfg.plan(), cfg.weights);
    p.edges = map_back(edges, relabeled.second);
    stats.phase_times.insert(p.stats.phase_times.begin(), p.stats.phase_times.end());
    p.stats = std::move(stats);
  } else {
    auto [edges, stats] = compute_s_overlap(algorithm, p.hypergraph, cfg.s, cfg.heuristics(), cfg.plan(), cfg.weights);
    p.edges = std::move(edges);
    stats.phase_times.insert(p.stats.phase_times.begin(), p.stats.phase_times.end());
    p.stats = std::move(stats);
  }
  return p;
}

inline json run_header(const RunConfig& cfg) {
  auto h = cfg.heuristics();
  return {{"algorithm", cfg.algorithm},
          {"s", cfg.s},
          {"partition", cfg.partition},
          {"workers", cfg.workers},
          {"relabel", cfg.relabel},
          {"heuristics",
           {{"degree_pruning", h.degree_pruning}, {"skip_visited", h.skip_visited}, {"short_circuit", h.short_circuit}}}};
}

inline int cmd_slinegraph(const RunConfig& cfg, std::ostream& out) {
  auto p = load_and_overlap(cfg);
  std::pair<CompactGraph, IdMap> squeezed;
  {
    PhaseTimer t(p.stats, "squeeze");
    squeezed = squeeze(p.edges);
  }
  std::size_t num_components = 0;
  {
    PhaseTimer t(p.stats, "components");
    num_components = component_sizes(connected_components(squeezed.first)).size();
  }

  output_file edges_out(cfg.output, out);
  write_edge_list(edges_out.get(), p.edges, p.hypergraph);
  edges_out.finish(cfg.output);

  if (!cfg.squeeze_map.empty()) {
    output_file map_out(cfg.squeeze_map, out);
    write_squeeze_map(map_out.get(), squeezed.second, p.hypergraph);
    map_out.finish(cfg.squeeze_map);
  }
  if (!cfg.stats.empty()) {
    json doc = run_header(cfg);
    doc["line_edges"] = p.edges.size();
    doc["line_vertices"] = squeezed.second.size();
    doc["components"] = num_components;
    doc.update(to_json(p.stats));
    write_json(doc, cfg.stats, out);
  }
  return ok;
}

inline int cmd_components(const RunConfig& cfg, std::ostream& out) {
  auto p = load_and_overlap(cfg);
  std::pair<CompactGraph, IdMap> squeezed;
  {
    PhaseTimer t(p.stats, "squeeze");
    squeezed = squeeze(p.edges);
  }
  std::vector<index_t> labels;
  {
    PhaseTimer t(p.stats, "components");
    labels = connected_components(squeezed.first);
  }
  const auto sizes = component_sizes(labels);
  std::size_t largest = 0;
  for (auto [label, size] : sizes) largest = std::max(largest, size);

  if (!cfg.output.empty()) {
    output_file f(cfg.output, out);
    for (index_t c = 0; c < labels.size(); ++c) {
      f.get() << c << '\t' << p.hypergraph.edge_label(squeezed.second.original(c)) << '\t' << labels[c] << '\n';
    }
    f.finish(cfg.output);
  }
  json summary = run_header(cfg);
  summary["line_edges"] = p.edges.size();
  summary["line_vertices"] = labels.size();
  summary["components"] = sizes.size();
  summary["largest_component"] = largest;
  json comp = json::array();
  for (auto [label, size] : sizes) comp.push_back({{"label", label}, {"size", size}});
  summary["component_sizes"] = comp;
  write_json(summary, "", out);
  if (!cfg.stats.empty()) write_json(to_json(p.stats), cfg.stats, out);
  return ok;
}

struct SpectralOptions {
  std::vector<std::size_t> s_values;
  std::size_t s_min = 1;
  std::size_t s_max = 0;  // 0: largest hyperedge size
  std::string component = "largest";
  std::size_t max_order = 2000;
};

inline int cmd_spectral(RunConfig cfg, const SpectralOptions& opt, std::ostream& out, std::ostream& err) {
  Hypergraph h = load_bipartite_file(cfg.input, cfg.load_options());
  std::vector<std::size_t> s_values = opt.s_values;
  if (s_values.empty()) {
    const std::size_t hi = opt.s_max == 0 ? degree_stats(h).max_edge_size : opt.s_max;
    for (std::size_t s = opt.s_min; s <= hi; ++s) s_values.push_back(s);
  }
  const auto algorithm = parse_algorithm(cfg.algorithm);

  json rows = json::array();
  for (auto s : s_values) {
    auto edges = compute_s_overlap(algorithm, h, s, cfg.heuristics(), cfg.plan()).first;
    auto [graph, map] = squeeze(edges);
    auto labels = connected_components(graph);

    std::vector<std::vector<index_t>> targets;
    if (opt.component == "largest") {
      targets.push_back(largest_component(labels));
    } else {
      std::map<index_t, std::vector<index_t>> groups;
      for (index_t v = 0; v < labels.size(); ++v) groups[labels[v]].push_back(v);
      for (auto& [label, members] : groups) targets.push_back(std::move(members));
    }
    for (const auto& members : targets) {
      json row = {{"s", s}, {"component_size", members.size()}};
      if (members.size() < 2) {
        row["lambda2"] = nullptr;
      } else if (members.size() > opt.max_order) {
        err << "s=" << s << ": component of order " << members.size() << " exceeds --max-order; skipped\n";
        row["lambda2"] = nullptr;
      } else {
        row["lambda2"] = normalized_algebraic_connectivity(induced_subgraph(graph, members));
      }
      if (opt.component != "largest" && !members.empty()) row["label"] = h.edge_label(map.original(members.front()));
      rows.push_back(std::move(row));
    }
  }
  write_json(rows, cfg.output, out);
  return ok;
}

struct BenchOptions {
  std::vector<std::string> cells = {"naive", "wedge", "spgemm", "efficient-f0", "efficient-f4"};
  std::size_t repetitions = 1;
  bool dry_count = false;
  std::size_t num_edges = 0;  // dry-count without an input file
};

struct BenchCell {
  std::string name;
  Algorithm algorithm = Algorithm::efficient;
  HeuristicConfig heuristics = HeuristicConfig::all();
  std::optional<Strategy> partition;
};

// "<algorithm>[-f0..f4][-blocked|-cyclic]"
inline BenchCell parse_cell(const std::string& name) {
  BenchCell cell;
  cell.name = name;
  std::stringstream ss(name);
  std::string part;
  bool first = true;
  while (std::getline(ss, part, '-')) {
    if (first) {
      cell.algorithm = parse_algorithm(part);
      first = false;
    } else if (part.size() == 2 && part[0] == 'f') {
      cell.heuristics = HeuristicConfig::preset(part);
    } else {
      cell.partition = parse_strategy(part);
    }
  }
  return cell;
}

inline int cmd_bench(RunConfig cfg, const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<BenchCell> cells;
  for (const auto& name : opt.cells) cells.push_back(parse_cell(name));

  std::optional<Hypergraph> h;
  std::size_t m = opt.num_edges;
  if (!cfg.input.empty()) {
    h = load_bipartite_file(cfg.input, cfg.load_options());
    m = h->num_edges();
  } else if (!opt.dry_count) {
    throw std::invalid_argument("bench needs --input unless --dry-count with --num-edges");
  }

  json report = {{"input", cfg.input}, {"s", cfg.s}, {"m", m}, {"workers", cfg.workers}, {"repetitions", opt.repetitions}};
  json rows = json::array();
  std::optional<SLineEdgeList> reference;
  std::string reference_name;
  bool consistent = true;

  for (const auto& cell : cells) {
    json row = {{"cell", cell.name}, {"algorithm", to_string(cell.algorithm)}};
    if (cell.algorithm == Algorithm::naive && opt.dry_count) {
      row["dry_count"] = true;
      row["candidate_pairs"] = naive_candidate_count(m);
      row["set_intersections"] = naive_candidate_count(m);
      rows.push_back(std::move(row));
      continue;
    }
    if (!h) {
      row["skipped"] = "no input";
      rows.push_back(std::move(row));
      continue;
    }
    PartitionPlan plan = cfg.plan();
    if (cell.partition) plan.strategy = *cell.partition;
    row["partition"] = to_string(plan.strategy);
    row["heuristics"] = {{"degree_pruning", cell.heuristics.degree_pruning},
                         {"skip_visited", cell.heuristics.skip_visited},
                         {"short_circuit", cell.heuristics.short_circuit}};

    json seconds = json::array();
    std::optional<RunStats> first_stats;
    bool stable_counters = true;
    SLineEdgeList result;
    for (std::size_t r = 0; r < std::max<std::size_t>(1, opt.repetitions); ++r) {
      auto [edges, stats] = compute_s_overlap(cell.algorithm, *h, cfg.s, cell.heuristics, plan);
      seconds.push_back(stats.phase_times["overlap"]);
      if (first_stats) {
        stable_counters = stable_counters && stats.candidate_pairs == first_stats->candidate_pairs &&
                          stats.set_intersections == first_stats->set_intersections &&
                          stats.total_visits() == first_stats->total_visits();
      } else {
        first_stats = stats;
      }
      result = std::move(edges);
    }
    row["seconds"] = seconds;
    row["candidate_pairs"] = first_stats->candidate_pairs;
    row["set_intersections"] = first_stats->set_intersections;
    row["per_worker_visits"] = first_stats->per_worker_visits;
    row["balance"] = to_json(workload_profile(*first_stats));
    row["counters_stable"] = stable_counters;
    row["line_edges"] = result.size();

    if (!reference) {
      reference = std::move(result);
      reference_name = cell.name;
      row["matches_reference"] = true;
    } else {
      bool same = same_pairs(*reference, result);
      row["matches_reference"] = same;
      if (!same) {
        consistent = false;
        err << "mismatch: " << cell.name << " differs from " << reference_name << '\n';
      }
    }
    rows.push_back(std::move(row));
  }
  report["cells"] = rows;
  report["consistent"] = consistent;
  write_json(report, cfg.output, out);
  return consistent ? ok : mismatch;
}

inline int cmd_stats(const RunConfig& cfg, std::ostream& out) {
  auto h = load_bipartite_file(cfg.input, cfg.load_options());
  write_json(to_json(degree_stats(h)), cfg.output, out);
  return ok;
}

}  // namespace detail

/// Parses `args` (args[0] is the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"s-line graph construction and analysis for hypergraphs", "sline"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.workers = default_workers();

  auto* slg = app.add_subcommand("slinegraph", "Compute the s-line graph edge list");
  detail::add_input_options(*slg, cfg);
  detail::add_overlap_options(*slg, cfg);
  slg->add_option("--output,-o", cfg.output, "Edge list path (default: stdout)");
  slg->add_option("--stats", cfg.stats, "Run statistics JSON path");
  slg->add_option("--squeeze-map", cfg.squeeze_map, "Sidecar compact-to-original ID map");
  slg->add_flag("--weights", cfg.weights, "Emit intersection sizes as a third column");

  auto* comps = app.add_subcommand("components", "s-connected components of the s-line graph");
  detail::add_input_options(*comps, cfg);
  detail::add_overlap_options(*comps, cfg);
  comps->add_option("--output,-o", cfg.output, "compact_id/original_id/component_label file");
  comps->add_option("--stats", cfg.stats, "Run statistics JSON path");

  detail::SpectralOptions spec_opt;
  auto* spectral = app.add_subcommand("spectral", "Normalized algebraic connectivity per s");
  detail::add_input_options(*spectral, cfg);
  detail::add_overlap_options(*spectral, cfg, false);
  spectral->add_option("--s,-s", spec_opt.s_values, "Explicit s values");
  spectral->add_option("--s-min", spec_opt.s_min, "First s of the sweep")->check(CLI::PositiveNumber);
  spectral->add_option("--s-max", spec_opt.s_max, "Last s of the sweep (default: largest hyperedge)");
  spectral->add_option("--component", spec_opt.component, "Which components to analyse")
      ->check(CLI::IsMember({"largest", "all"}))
      ->capture_default_str();
  spectral->add_option("--max-order", spec_opt.max_order, "Skip components larger than this")->capture_default_str();
  spectral->add_option("--output,-o", cfg.output, "JSON rows path (default: stdout)");

  detail::BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "Run an ablation matrix and cross-check results");
  bench->add_option("--input,-i", cfg.input, "Bipartite pair file");
  bench->add_option("--orientation", cfg.orientation)->check(CLI::IsMember({"edge", "vertex"}));
  bench->add_option("--s,-s", cfg.s, "Minimum overlap size")
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  bench->add_option("--partition", cfg.partition)->check(CLI::IsMember({"blocked", "cyclic"}));
  bench->add_option("--workers,-w", cfg.workers)->check(CLI::PositiveNumber);
  bench->add_option("--stride", cfg.stride);
  bench->add_option("--chunk", cfg.chunk);
  bench->add_option("--cells", bench_opt.cells, "Cells like naive, efficient-f0, efficient-f4-cyclic")->delimiter(',');
  bench->add_option("--repetitions,-r", bench_opt.repetitions)->check(CLI::PositiveNumber);
  bench->add_flag("--dry-count", bench_opt.dry_count, "Report C(m,2) for naive cells without running them");
  bench->add_option("--num-edges", bench_opt.num_edges, "m for --dry-count when no input is given");
  bench->add_option("--output,-o", cfg.output, "Report path (default: stdout)");

  auto* stats = app.add_subcommand("stats", "Hypergraph degree statistics");
  detail::add_input_options(*stats, cfg);
  stats->add_option("--output,-o", cfg.output, "JSON path (default: stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (slg->parsed()) return detail::cmd_slinegraph(cfg, out);
    if (comps->parsed()) return detail::cmd_components(cfg, out);
    if (spectral->parsed()) return detail::cmd_spectral(cfg, spec_opt, out, err);
    if (bench->parsed()) return detail::cmd_bench(cfg, bench_opt, out, err);
    if (stats->parsed()) return detail::cmd_stats(cfg, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return failure;
  }
  return usage;
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args);
}

}  // namespace sline::cli
