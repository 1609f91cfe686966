#pragma once

#include <iostream>
#include <string>

#include "greedyorder/comm_time.hpp"
#include "greedyorder/dfs_ordering.hpp"
#include "greedyorder/experiments.hpp"
#include "greedyorder/graph.hpp"
#include "greedyorder/submodular.hpp"

namespace greedyorder::io {

// Parse failures throw std::invalid_argument; unopenable files throw
// std::runtime_error. All writers emit deterministic bytes.

/// Edge-list text: header `n <count> <directed|undirected>`, one `u v` per line.
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);
void save_graph(const std::string& path, const Graph& g);
Graph load_graph(const std::string& path);

/// One line of space-separated labels, vertex order: `label(v0) ... label(vn-1)`.
void write_ordering(std::ostream& out, const Ordering& pi);
Ordering read_ordering(std::istream& in);
void save_ordering(const std::string& path, const Ordering& pi);
Ordering load_ordering(const std::string& path);

/// `total,s1,s2,...,s_{n-1}`; a single-vertex run is just `0`.
std::string breakdown_csv(const TimeBreakdown& time);

/// Event rows `time,from,to,kind` under a header, kind one of
/// init-forward | backtrack.
void write_trace_csv(std::ostream& out, const RunTrace& trace);
/// Summary object {t, n, seed, ordering, variant}.
void write_trace_json(std::ostream& out, const RunTrace& trace);

/// {ground_size, weights: [...], agents: [[[element ids] ...] ...]}; the
/// opt-out action is the empty list and must be present. Only coverage
/// problems serialize (a generic objective has no JSON form).
void write_problem_json(std::ostream& out, const SubmodularProblem& problem);
SubmodularProblem read_problem_json(std::istream& in);
void save_problem_json(const std::string& path, const SubmodularProblem& problem);
SubmodularProblem load_problem_json(const std::string& path);

/// Rows `sample_index,graph_edges,method,time,seed_vertex` under a header.
void write_experiment_csv(std::ostream& out, const Distribution& dist);
/// Config echo, rejection count, and per-method min/max/mean/median.
void write_experiment_json(std::ostream& out, const Distribution& dist);

}  // namespace greedyorder::io
