#include "scount/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "scount/graph_io.hpp"
#include "scount/recursion.hpp"
#include "scount/rigidity.hpp"

namespace scount {
namespace {

using nlohmann::json;

struct Options {
  std::uint64_t seed = 1;
  int trials = 3;
  std::string cache;
  int jobs = 1;
  bool trace = false;
  bool multihom = false;
  double tol = 1e-6;
  bool no_base_cases = false;
  bool all_splits = false;
  std::vector<int> base;
  int apex = -1;
  std::vector<std::string> files;
};

const char *kind_name(ErrorKind k) {
  switch (k) {
  case ErrorKind::Validation:
    return "validation";
  case ErrorKind::Parse:
    return "parse";
  case ErrorKind::Domain:
    return "domain";
  case ErrorKind::Numerical:
    return "numerical";
  case ErrorKind::Usage:
    return "usage";
  }
  return "unknown";
}

int exit_code(ErrorKind k) {
  switch (k) {
  case ErrorKind::Numerical:
    return kExitNumerical;
  case ErrorKind::Usage:
    return kExitUsage;
  default:
    return kExitDomain;
  }
}

std::string read_input(const std::string &path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::Usage, "cannot read " + path);
  buf << in.rdbuf();
  return buf.str();
}

// A JSON file holds one graph; a graph6 file one graph per non-blank line.
std::vector<ParsedGraph> read_graphs(const std::string &path) {
  const std::string text = read_input(path);
  if (detect_format(text) == GraphFormat::Json)
    return {parse_graph(text, GraphFormat::Json)};
  std::vector<ParsedGraph> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    out.push_back(parse_graph(line, GraphFormat::Graph6));
  }
  if (out.empty())
    throw ParseError("no graph in " + path, 0);
  return out;
}

EngineConfig engine_config(const Options &o) {
  EngineConfig cfg;
  cfg.fallback.seed = o.seed;
  cfg.fallback.trials = o.trials;
  cfg.fallback.solver.dedup_tol = o.tol;
  cfg.fallback.solver.tracker.jobs = o.jobs;
  cfg.fallback.solver.tracker.start =
      o.multihom ? StartSystem::MultiHomogeneous : StartSystem::TotalDegree;
  cfg.use_base_cases = !o.no_base_cases;
  cfg.trace = o.trace;
  return cfg;
}

std::shared_ptr<CacheStore> open_cache(const Options &o) {
  if (o.cache.empty())
    return std::make_shared<CacheStore>();
  return std::make_shared<CacheStore>(o.cache);
}

json edge_list(const std::vector<Edge> &edges) {
  json out = json::array();
  for (const Edge &e : edges)
    out.push_back({e.u, e.v});
  return out;
}

json side_json(const SplitSide &s) {
  return {{"vertices", s.vertices}, {"edges", edge_list(s.edges)}};
}

json cmd_count(const ParsedGraph &p, Engine &engine) {
  CountResult r = engine.count_realizations(p.graph);
  json out = {{"count", r.count}, {"method", r.method}};
  if (engine.config().trace)
    out["tree"] = engine.trace();
  return out;
}

json cmd_class(const ParsedGraph &p, const Options &o, Engine &engine) {
  std::optional<Marks> marks = p.marks;
  if (!o.base.empty() || o.apex >= 0) {
    if (o.base.size() != 2 || o.apex < 0)
      throw Error(ErrorKind::Usage, "--base and --apex must be given together");
    marks = Marks{{o.base[0], o.base[1]}, o.apex};
  }
  if (!marks)
    throw Error(ErrorKind::Usage,
                "class needs marks: JSON \"marks\" or --base U,V --apex W");
  MarkedCalligraph h = validate_calligraph(p.graph, marks->edge, marks->apex);
  ClassResult r = engine.s2_class(h);
  json eqs = json::array();
  for (const ClassEquation &e : r.equations)
    eqs.push_back({{"gadget", gadget_name(e.gadget)},
                   {"minimally_rigid", e.minimally_rigid},
                   {"value", e.value}});
  json out = {{"a", r.cls.a}, {"b", r.cls.b}, {"c", r.cls.c},
              {"method", r.method}, {"equations", std::move(eqs)}};
  if (engine.config().trace)
    out["tree"] = engine.trace();
  return out;
}

json cmd_split(const ParsedGraph &p, const Options &o) {
  SplitSearchConfig cfg;
  std::vector<SplitCandidate> splits =
      o.all_splits ? enumerate_splits(p.graph, cfg) : nontrivial_splits(p.graph, cfg);
  json list = json::array();
  for (const SplitCandidate &s : splits)
    list.push_back({{"base", {s.shared_base.first, s.shared_base.second}},
                    {"apex", s.shared_apex},
                    {"left", side_json(s.left)},
                    {"right", side_json(s.right)}});
  return {{"splits", std::move(list)}, {"count", splits.size()}};
}

json cmd_rigid(const ParsedGraph &p) {
  const Graph &g = p.graph;
  if (g.vertex_count() < 2)
    throw Error(ErrorKind::Domain, "rigidity needs at least two vertices");
  return {{"minimally_rigid", is_minimally_rigid(g)},
          {"rigid", is_rigid_spanning(g)},
          {"vertices", g.vertex_count()},
          {"edges", g.edge_count()},
          {"independent_edges", independent_edge_count(g)}};
}

json cmd_fallback(const ParsedGraph &p, const Options &o) {
  CountCertificate cert = fallback_count(p.graph, engine_config(o).fallback);
  return {{"count", cert.agreed_count}, {"certificate", cert.to_json()}};
}

json cache_stats(const CacheStore &c) {
  CacheStats s = c.stats();
  return {{"path", c.file() ? json(c.file()->string()) : json()},
          {"counts", s.counts},
          {"classes", s.classes},
          {"skipped_lines", s.skipped_lines}};
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"Count realizations of minimally rigid graphs on the sphere"};
  app.name(args.empty() ? "scount" : args.front());
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--seed", o.seed, "base seed for random edge lengths")
      ->envname("SCOUNT_SEED");
  app.add_option("--trials", o.trials, "independent length samples per fallback count")
      ->envname("SCOUNT_TRIALS")
      ->check(CLI::PositiveNumber);
  app.add_option("--cache", o.cache, "JSON-lines cache file")->envname("SCOUNT_CACHE");
  app.add_option("--jobs", o.jobs, "path tracking threads")
      ->envname("SCOUNT_JOBS")
      ->check(CLI::PositiveNumber);
  app.add_flag("--trace", o.trace, "include the recursion tree in the output");
  app.add_flag("--multihom", o.multihom, "multihomogeneous start systems");
  app.add_option("--tol", o.tol, "relative endpoint deduplication tolerance")
      ->envname("SCOUNT_TOL")
      ->check(CLI::PositiveNumber);

  auto file_arg = [&](CLI::App *sub) {
    sub->add_option("files", o.files, "graph files (JSON or graph6, - for stdin)")
        ->required();
  };
  CLI::App *count = app.add_subcommand("count", "realization count of a minimally rigid graph");
  file_arg(count);
  CLI::App *cls = app.add_subcommand("class", "class (a, b, c) of a marked calligraph");
  file_arg(cls);
  cls->add_option("--base", o.base, "base edge U,V")->delimiter(',')->expected(2);
  cls->add_option("--apex", o.apex, "apex vertex");
  cls->add_flag("--no-base-cases", o.no_base_cases,
                "derive L, R and C from their equations too");
  CLI::App *split = app.add_subcommand("split", "non-trivial calligraphic splits");
  file_arg(split);
  split->add_flag("--all", o.all_splits, "list trivial splits as well");
  CLI::App *rigid = app.add_subcommand("rigid", "minimal rigidity check");
  file_arg(rigid);
  CLI::App *fallback = app.add_subcommand("fallback", "numerical count without splitting");
  file_arg(fallback);
  CLI::App *cache = app.add_subcommand("cache", "cache maintenance");
  cache->require_subcommand(1);
  CLI::App *stats = cache->add_subcommand("stats", "entry counts");
  CLI::App *clear = cache->add_subcommand("clear", "remove every entry");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty())
      rev.pop_back();
    app.parse(rev);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cache->parsed()) {
      if (o.cache.empty())
        throw Error(ErrorKind::Usage, "no cache file: pass --cache or set SCOUNT_CACHE");
      CacheStore store{std::filesystem::path(o.cache)};
      if (clear->parsed()) {
        store.clear();
        out << json{{"cleared", true}, {"path", o.cache}}.dump() << '\n';
      } else if (stats->parsed()) {
        out << cache_stats(store).dump() << '\n';
      }
      return kExitOk;
    }

    Engine engine(engine_config(o), open_cache(o));
    for (const std::string &file : o.files) {
      for (const ParsedGraph &p : read_graphs(file)) {
        json result;
        if (count->parsed())
          result = cmd_count(p, engine);
        else if (cls->parsed())
          result = cmd_class(p, o, engine);
        else if (split->parsed())
          result = cmd_split(p, o);
        else if (rigid->parsed())
          result = cmd_rigid(p);
        else
          result = cmd_fallback(p, o);
        out << result.dump() << '\n';
      }
    }
    return kExitOk;
  } catch (const NumericalFailure &e) {
    out << json{{"error", {{"kind", "numerical"}, {"message", e.what()}}},
                {"certificate", e.certificate().to_json()}}
               .dump()
        << '\n';
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const Error &e) {
    out << json{{"error", {{"kind", kind_name(e.kind())}, {"message", e.what()}}}}.dump()
        << '\n';
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
}

} // namespace scount
