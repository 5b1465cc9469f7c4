#include "clpart/sandpile.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace clpart {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  for (auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge");
  }
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  std::vector<int> parent(static_cast<std::size_t>(n_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& up = parent[static_cast<std::size_t>(x)];
      up = parent[static_cast<std::size_t>(up)];
      x = up;
    }
    return x;
  };
  int components = n_;
  for (auto [u, v] : edges_) {
    int a = find(u);
    int b = find(v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<Graph::Edge> edges;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    if (n < 0) {
      std::string tag;
      if (!(fields >> tag >> n) || tag != "n" || n < 0) {
        throw std::invalid_argument("edge list must start with 'n <count>'");
      }
      continue;
    }
    int u = 0;
    int v = 0;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) {
      throw std::invalid_argument("malformed edge line '" + line + "'");
    }
    edges.emplace_back(u, v);
  }
  if (n < 0) throw std::invalid_argument("edge list is empty");
  return Graph(n, std::move(edges));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  data_.reserve(static_cast<std::size_t>(rows_ * cols_));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long x : row) data_.emplace_back(x);
  }
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(data_[index(a, j)], data_[index(b, j)]);
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(data_[index(i, a)], data_[index(i, b)]);
}

IntMatrix reduced_laplacian(const Graph& g, int root) {
  const int n = g.vertex_count();
  if (root < 0 || root >= n) throw std::invalid_argument("root vertex out of range");
  // Vertex v maps to row v, or v - 1 past the root.
  auto slot = [root](int v) { return v < root ? v : v - 1; };
  IntMatrix m(n - 1, n - 1);
  for (auto [u, v] : g.edges()) {
    if (u != root) m(slot(u), slot(u)) += 1;
    if (v != root) m(slot(v), slot(v)) += 1;
    if (u != root && v != root) {
      m(slot(u), slot(v)) -= 1;
      m(slot(v), slot(u)) -= 1;
    }
  }
  return m;
}

Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant needs a square matrix");
  const int n = m.rows();
  if (n == 0) return Integer(1);
  Integer sign(1);
  Integer previous(1);
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int swap_with = -1;
      for (int i = k + 1; i < n; ++i) {
        if (m(i, k) != 0) {
          swap_with = i;
          break;
        }
      }
      if (swap_with < 0) return Integer(0);
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        // m_ij = (m_kk m_ij - m_ik m_kj) / previous, exact by Sylvester's identity.
        Integer value = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<Integer> smith_diagonal(IntMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("Smith normal form needs a square matrix");
  const int n = m.rows();
  std::vector<Integer> diag;
  diag.reserve(static_cast<std::size_t>(n));
  Integer quotient;
  for (int t = 0; t < n; ++t) {
    while (true) {
      int pi = -1;
      int pj = -1;
      for (int i = t; i < n; ++i) {
        for (int j = t; j < n; ++j) {
          if (sgn(m(i, j)) == 0) continue;
          if (pi < 0 || mpz_cmpabs(m(i, j).get_mpz_t(), m(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
        if (pi >= 0 && mpz_cmpabs_ui(m(pi, pj).get_mpz_t(), 1) == 0) break;
      }
      if (pi < 0) break;  // remaining block is zero
      m.swap_rows(t, pi);
      m.swap_cols(t, pj);

      bool clean = true;
      const Integer pivot = m(t, t);
      for (int i = t + 1; i < n; ++i) {
        if (sgn(m(i, t)) == 0) continue;
        mpz_tdiv_q(quotient.get_mpz_t(), m(i, t).get_mpz_t(), pivot.get_mpz_t());
        for (int j = t; j < n; ++j) mpz_submul(m(i, j).get_mpz_t(), quotient.get_mpz_t(), m(t, j).get_mpz_t());
        if (sgn(m(i, t)) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (sgn(m(t, j)) == 0) continue;
        mpz_tdiv_q(quotient.get_mpz_t(), m(t, j).get_mpz_t(), pivot.get_mpz_t());
        for (int i = t; i < n; ++i) mpz_submul(m(i, j).get_mpz_t(), quotient.get_mpz_t(), m(i, t).get_mpz_t());
        if (sgn(m(t, j)) != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(abs(m(t, t)));
  }
  // diag(a, b) ~ diag(gcd, lcm) restores the divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      Integer g = gcd(diag[i], diag[j]);
      Integer l = lcm(diag[i], diag[j]);
      diag[i] = g;
      diag[j] = l;
    }
  }
  return diag;
}

SylowPartition p_sylow_partition(const IntMatrix& m, long p, int cap) {
  if (p < 2) throw std::invalid_argument("p must be >= 2");
  if (cap < 1) throw std::invalid_argument("valuation cap must be >= 1");
  auto diag = smith_diagonal(m);
  SylowPartition out;
  std::vector<int> parts;
  const auto base = static_cast<unsigned long>(p);
  for (auto d : diag) {
    if (d == 0) throw std::domain_error("singular reduced Laplacian (disconnected graph)");
    int valuation = 0;
    while (valuation < cap && mpz_divisible_ui_p(d.get_mpz_t(), base)) {
      mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), base);
      ++valuation;
    }
    if (valuation == cap) out.capped = true;
    if (valuation > 0) parts.push_back(valuation);
  }
  std::sort(parts.rbegin(), parts.rend());
  out.partition = Partition(std::move(parts));
  return out;
}

void ExperimentResult::merge(const ExperimentResult& other) {
  table.merge(other.table);
  discarded_disconnected += other.discarded_disconnected;
  capped += other.capped;
}

ExperimentResult run_experiment(const ExperimentConfig& config, const StreamFactory& streams) {
  if (config.n < 2) throw std::invalid_argument("n must be >= 2");
  if (config.q <= 0 || config.q >= 1) throw std::invalid_argument("q must lie strictly inside (0, 1)");
  if (config.p < 2) throw std::invalid_argument("p must be >= 2");
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  return run_trials<ExperimentResult>(
      config.first_trial, config.trials, config.threads, [&](std::uint64_t t, ExperimentResult& acc) {
        auto stream = streams(t);
        Graph g = gen_er_graph(config.n, config.q, stream);
        if (!g.connected()) {
          ++acc.discarded_disconnected;
          return;
        }
        auto sylow = p_sylow_partition(reduced_laplacian(g), config.p, config.cap);
        if (sylow.capped) ++acc.capped;
        acc.table.add(sylow.partition);
      });
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  return run_experiment(config, [seed = config.seed](std::uint64_t t) -> std::function<std::uint64_t()> {
    return [engine = trial_engine(seed, t)]() mutable { return static_cast<std::uint64_t>(engine()); };
  });
}

}  // namespace clpart
