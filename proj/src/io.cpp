#include "greedyorder/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace greedyorder::io {

namespace {

using nlohmann::json;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

json parse_json(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

std::string event_kind_token(EventKind kind) {
  return kind == EventKind::init_forward ? "init-forward" : "backtrack";
}

}  // namespace

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << ' '
      << (g.is_directed() ? "directed" : "undirected") << '\n';
  for (const Graph::Edge& e : g.edges()) out << e.first << ' ' << e.second << '\n';
}

Graph read_graph(std::istream& in) {
  std::string header;
  if (!std::getline(in, header))
    throw std::invalid_argument("empty graph input");
  std::istringstream head(header);
  long long n = 0, count = 0;
  std::string mode, extra;
  if (!(head >> n >> count >> mode) || head >> extra)
    throw std::invalid_argument("graph header must be `n count mode`");
  if (mode != "directed" && mode != "undirected")
    throw std::invalid_argument("graph mode must be directed or undirected");
  if (n < 1 || count < 0)
    throw std::invalid_argument("graph header out of range");

  std::vector<Graph::Edge> edges;
  std::string line;
  for (long long i = 0; i < count; ++i) {
    if (!std::getline(in, line))
      throw std::invalid_argument("fewer edge lines than the header promises");
    std::istringstream row(line);
    int u = 0, v = 0;
    if (!(row >> u >> v) || row >> extra)
      throw std::invalid_argument("edge line must be `u v`");
    edges.push_back({u, v});
  }
  while (std::getline(in, line))
    if (!line.empty())
      throw std::invalid_argument("trailing content after the edge list");
  return Graph(static_cast<int>(n), mode == "directed", std::move(edges));
}

void save_graph(const std::string& path, const Graph& g) {
  auto out = open_output(path);
  write_graph(out, g);
}

Graph load_graph(const std::string& path) {
  auto in = open_input(path);
  return read_graph(in);
}

void write_ordering(std::ostream& out, const Ordering& pi) {
  for (int v = 0; v < pi.size(); ++v)
    out << pi.label_of(v) << (v + 1 < pi.size() ? ' ' : '\n');
}

Ordering read_ordering(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("empty ordering input");
  std::istringstream row(line);
  std::vector<int> labels;
  int label = 0;
  while (row >> label) labels.push_back(label);
  if (!row.eof())
    throw std::invalid_argument("ordering line holds a non-integer token");
  return Ordering(std::move(labels));
}

void save_ordering(const std::string& path, const Ordering& pi) {
  auto out = open_output(path);
  write_ordering(out, pi);
}

Ordering load_ordering(const std::string& path) {
  auto in = open_input(path);
  return read_ordering(in);
}

std::string breakdown_csv(const TimeBreakdown& time) {
  std::ostringstream out;
  out << time.total;
  for (int step : time.per_step) out << ',' << step;
  return out.str();
}

void write_trace_csv(std::ostream& out, const RunTrace& trace) {
  out << "time,from,to,kind\n";
  for (const TraceEvent& e : trace.events)
    out << e.time << ',' << e.from << ',' << e.to << ','
        << event_kind_token(e.kind) << '\n';
}

void write_trace_json(std::ostream& out, const RunTrace& trace) {
  json j;
  j["t"] = trace.t;
  j["n"] = trace.ordering.size();
  j["seed"] = trace.seed;
  j["ordering"] = trace.ordering.labels();
  j["variant"] = to_string(trace.variant);
  out << j.dump(2) << '\n';
}

void write_problem_json(std::ostream& out, const SubmodularProblem& problem) {
  problem.validate();
  if (problem.coverage_weights.empty())
    throw std::invalid_argument("only coverage problems have a JSON form");
  json j;
  j["ground_size"] = problem.ground_size;
  j["weights"] = problem.coverage_weights;
  json agents = json::array();
  for (const auto& list : problem.agent_actions) {
    json actions = json::array();
    for (ElementMask a : list) actions.push_back(elements_of_mask(a));
    agents.push_back(std::move(actions));
  }
  j["agents"] = std::move(agents);
  out << j.dump(2) << '\n';
}

SubmodularProblem read_problem_json(std::istream& in) {
  json j = parse_json(in);
  try {
    int ground_size = j.at("ground_size").get<int>();
    std::vector<double> weights = j.at("weights").get<std::vector<double>>();
    if (static_cast<int>(weights.size()) != ground_size)
      throw std::invalid_argument("weight count must equal ground_size");
    std::vector<std::vector<ElementMask>> lists;
    for (const json& agent : j.at("agents")) {
      std::vector<ElementMask> list;
      for (const json& action : agent)
        list.push_back(
            mask_of_elements(action.get<std::vector<int>>(), ground_size));
      lists.push_back(std::move(list));
    }
    return make_coverage_problem(std::move(weights), std::move(lists));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad problem JSON: ") + e.what());
  }
}

void save_problem_json(const std::string& path,
                       const SubmodularProblem& problem) {
  auto out = open_output(path);
  write_problem_json(out, problem);
}

SubmodularProblem load_problem_json(const std::string& path) {
  auto in = open_input(path);
  return read_problem_json(in);
}

void write_experiment_csv(std::ostream& out, const Distribution& dist) {
  out << "sample_index,graph_edges,method,time,seed_vertex\n";
  for (const ExperimentRow& row : dist.rows)
    out << row.sample_index << ',' << row.graph_edges << ','
        << to_string(row.method) << ',' << row.time << ',' << row.seed_vertex
        << '\n';
}

void write_experiment_json(std::ostream& out, const Distribution& dist) {
  json methods_requested = json::array();
  for (ExpMethod m : dist.config.orderings)
    methods_requested.push_back(to_string(m));

  json j;
  j["config"] = {{"n", dist.config.n},
                 {"p", dist.config.p},
                 {"samples", dist.config.samples},
                 {"methods", std::move(methods_requested)},
                 {"rng_seed", dist.config.rng_seed},
                 {"variant", to_string(dist.config.algorithm1_variant)}};
  j["rejected_samples"] = dist.rejected_samples;
  json per_method = json::object();
  for (const MethodDistribution& pm : dist.per_method)
    per_method[to_string(pm.method)] = {{"min", pm.stats.min},
                                        {"max", pm.stats.max},
                                        {"mean", pm.stats.mean},
                                        {"median", pm.stats.median}};
  j["methods"] = std::move(per_method);
  out << j.dump(2) << '\n';
}

}  // namespace greedyorder::io
