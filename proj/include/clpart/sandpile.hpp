#pragma once

#include "clpart/empirical.hpp"
#include "clpart/partition.hpp"
#include "clpart/rational.hpp"
#include "clpart/rng.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clpart {

/// Simple undirected graph on vertices 0..n-1. Edges are stored as (u, v)
/// with u < v, sorted, without duplicates.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;
  // Throws std::invalid_argument on loops, duplicates or out-of-range
  // vertices. Edge orientation is normalized.
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// "n <count>" then one "u v" line per edge.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

/// Erdos-Renyi G(n, q): each pair {i < j}, in lexicographic order, is an
/// edge iff the next 64-bit draw k satisfies k / 2^64 < q.
template <BitSource G>
Graph gen_er_graph(int n, const Rational& q, G& gen) {
  if (n < 2) throw std::invalid_argument("graph needs n >= 2 vertices");
  if (q <= 0 || q >= 1) throw std::invalid_argument("edge probability q must lie in (0, 1)");
  const UnitThreshold accept = unit_threshold(q);
  std::vector<Graph::Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (accept.accepts(static_cast<std::uint64_t>(gen()))) edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges));
}

/// Dense row-major matrix of big integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Integer& operator()(int i, int j) { return data_[index(i, j)]; }
  const Integer& operator()(int i, int j) const { return data_[index(i, j)]; }

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * cols_ + j); }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> data_;
};

// Laplacian (degrees on the diagonal, -1 per edge) with the root's row and
// column removed.
IntMatrix reduced_laplacian(const Graph& g, int root);
inline IntMatrix reduced_laplacian(const Graph& g) { return reduced_laplacian(g, g.vertex_count() - 1); }

// Fraction-free Gaussian elimination (Bareiss).
Integer determinant(IntMatrix m);

/// Smith normal form diagonal of a square matrix: d_1 | d_2 | ... | d_n,
/// all >= 0, by unimodular row and column operations that pivot on the
/// entry of least absolute value.
std::vector<Integer> smith_diagonal(IntMatrix m);

struct SylowPartition {
  Partition partition;
  bool capped = false;
};

/// Type of the p-part of coker(m): the p-adic valuations of the nonzero
/// parts of the Smith diagonal, sorted decreasingly. A valuation reaching
/// `cap` is recorded as cap with capped = true. Throws std::domain_error
/// if m is singular.
SylowPartition p_sylow_partition(const IntMatrix& m, long p, int cap = 12);

struct ExperimentConfig {
  int n = 2;
  Rational q{1, 2};
  long p = 2;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  int cap = 12;
  std::uint64_t first_trial = 0;
  unsigned threads = 1;
};

struct ExperimentResult {
  EmpiricalTable table;  // connected graphs only
  std::uint64_t discarded_disconnected = 0;
  std::uint64_t capped = 0;

  void merge(const ExperimentResult& other);
};

// Supplies the 64-bit stream for a given trial index.
using StreamFactory = std::function<std::function<std::uint64_t()>(std::uint64_t trial)>;

/// For each trial t: draw G(n, q) from the trial's stream, skip it (and
/// count it) if disconnected, otherwise record the p-Sylow partition of its
/// sandpile group. The default stream is trial_engine(seed, t).
ExperimentResult run_experiment(const ExperimentConfig& config);
ExperimentResult run_experiment(const ExperimentConfig& config, const StreamFactory& streams);

}  // namespace clpart
