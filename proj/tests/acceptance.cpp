// Acceptance suite: one PASS/FAIL line per criterion. Criterion 9 is a
// finite-n check of a limit statement and is reported without affecting the
// exit status.

#include "clpart/empirical.hpp"
#include "clpart/measures.hpp"
#include "clpart/qseries.hpp"
#include "clpart/sampler.hpp"
#include "clpart/sandpile.hpp"
#include "clpart/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

namespace {

using namespace clpart;

struct Outcome {
  bool passed = true;
  std::string detail;
};

int hard_failures = 0;

void report(int id, const char* name, bool soft, const std::function<Outcome()>& criterion) {
  auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = criterion();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const char* verdict = outcome.passed ? (soft ? "SOFT-PASS" : "PASS") : (soft ? "SOFT-FAIL" : "FAIL");
  std::printf("%-9s [%d] %s: %s (%.1fs)\n", verdict, id, name, outcome.detail.c_str(), seconds);
  std::fflush(stdout);
  if (!outcome.passed && !soft) ++hard_failures;
}

const long kPrimes[] = {2, 3, 5};
const Rational kTol30(1, ipow(Integer(10), 30));

Outcome form_equivalence() {
  long cases = 0;
  for (long p : kPrimes) {
    for (int n = 0; n <= 15; ++n) {
      for (const auto& lambda : enumerate_partitions(n)) {
        ++cases;
        if (pmf_wood_form1(lambda, p) != pmf_wood_form2(lambda, p)) {
          return {false, "mismatch at " + to_string(lambda) + " p=" + std::to_string(p)};
        }
      }
    }
  }
  return {true, std::to_string(cases) + " exact matches"};
}

Outcome normalization() {
  std::ostringstream detail;
  bool ok = true;
  for (long p : kPrimes) {
    auto table = evaluate(tabulate(p, 30, MeasureSpec::wood()), kTol30);
    BoundedReal total = table.total();
    bool encloses = total.contains(Rational(1));
    bool narrow = table.tail.rad() < Rational(1, 1'000'000L);
    ok = ok && encloses && narrow;
    detail << "p=" << p << " total in [" << approx(total.lower()) << ", " << approx(total.upper())
           << "] tail rad " << approx(table.tail.rad()) << "; ";
  }
  return {ok, detail.str()};
}

Outcome size_formula() {
  for (long p : kPrimes) {
    for (int n = 0; n <= 15; ++n) {
      Rational sum(0);
      for (const auto& lambda : enumerate_partitions(n)) sum += pmf_wood_form2(lambda, p).rational_part;
      MassValue closed = pmf_size(n, p);
      if (closed.kind != ConstantKind::kOddConstant || closed.rational_part != sum) {
        return {false, "mismatch at n=" + std::to_string(n) + " p=" + std::to_string(p)};
      }
    }
  }
  return {true, "n <= 15, p in {2,3,5} exact"};
}

Outcome parts_recursions() {
  for (long p : kPrimes) {
    auto rec = solve_parts_recursion(p, 20);
    if (!rec.agree()) return {false, "disagreement at p=" + std::to_string(p)};
    for (long a = 0; a <= 20; ++a) {
      if (rec.masses()[static_cast<std::size_t>(a)] != pmf_parts(a, p)) {
        return {false, "closed form differs at a=" + std::to_string(a)};
      }
    }
  }
  return {true, "closed form and both recursions agree for a <= 20"};
}

Outcome kernel_checks() {
  for (long p : kPrimes) {
    for (long a = 0; a <= 50; ++a) {
      Rational sum(0);
      for (long b = 0; b <= a; ++b) sum += kernel(a, b, p);
      if (sum != 1) return {false, "row sum at a=" + std::to_string(a) + " p=" + std::to_string(p)};
    }
    for (long a = 0; a <= 30; ++a) {
      const Rational pa = pmf_parts(a, p).rational_part;
      for (long b = 0; b <= a; ++b) {
        Rational ratio = pmf_parts(b, p).rational_part /
                         (Rational(ipow(Integer(p), static_cast<unsigned long>(a * (a + 1) / 2))) * pa *
                          qpoch_p2(p, (a - b) / 2));
        if (ratio != kernel(a, b, p)) {
          return {false, "ratio identity at a=" + std::to_string(a) + " b=" + std::to_string(b)};
        }
      }
    }
  }
  return {true, "row sums exact for a <= 50, ratio identity exact for a <= 30"};
}

Outcome sampler_fidelity() {
  const std::uint64_t trials = 1'000'000;
  SamplerConfig config;
  config.p = 2;
  config.seed = 20240101;
  EmpiricalTable sample = empirical_distribution(config, trials);
  ProbabilityTable exact = evaluate(tabulate(2, 30, MeasureSpec::wood()), kTol30);

  int checked = 0;
  double worst_z = 0;
  std::string worst;
  const auto n = static_cast<double>(trials);
  for (const auto& [lambda, mass] : exact.entries) {
    double pr = approx(mass.mid());
    if (pr < 1e-4) continue;
    ++checked;
    double sd = std::sqrt(pr * (1 - pr) / n);
    double z = std::abs(approx(sample.frequency(lambda)) - pr) / sd;
    if (z > worst_z) {
      worst_z = z;
      worst = to_string(lambda);
    }
  }
  BoundedReal tv = tv_distance(exact.restricted(12), sample.to_table().restricted(12));
  bool ok = worst_z <= 4 && tv.upper() < Rational(5, 1000);
  std::ostringstream detail;
  detail << checked << " partitions, max |z| " << worst_z << " at " << worst << ", TV <= " << approx(tv.upper());
  return {ok, detail.str()};
}

Outcome identity_suite() {
  VerifyOptions options;
  options.primes = {2, 3};
  options.r_max = 5;
  int total = 0;
  std::string failed;
  for (const auto& check : verify_identities(options)) {
    ++total;
    if (!check.passed) failed += check.name + " ";
  }
  if (!failed.empty()) return {false, "failed: " + failed};
  return {true, std::to_string(total) + " identity checks within enclosures"};
}

Graph complete_graph(int n) {
  std::vector<Graph::Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, std::move(edges));
}

// Counts acyclic (n-1)-edge subsets by backtracking over the edge list.
long spanning_trees(const Graph& g) {
  const auto& edges = g.edges();
  const int need = g.vertex_count() - 1;
  std::function<long(std::size_t, int, std::vector<int>)> go = [&](std::size_t e, int taken, std::vector<int> comp) {
    if (taken == need) return 1L;
    if (edges.size() - e < static_cast<std::size_t>(need - taken)) return 0L;
    long count = go(e + 1, taken, comp);
    int a = comp[static_cast<std::size_t>(edges[e].first)];
    int b = comp[static_cast<std::size_t>(edges[e].second)];
    if (a != b) {
      for (int& c : comp) {
        if (c == b) c = a;
      }
      count += go(e + 1, taken + 1, std::move(comp));
    }
    return count;
  };
  std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()));
  std::iota(comp.begin(), comp.end(), 0);
  return go(0, 0, comp);
}

Outcome sandpile_oracle() {
  const Graph k3 = complete_graph(3);
  const Graph k4 = complete_graph(4);
  if (p_sylow_partition(reduced_laplacian(k3), 3).partition != Partition{1} ||
      p_sylow_partition(reduced_laplacian(k3), 2).partition != Partition{} ||
      p_sylow_partition(reduced_laplacian(k4), 2).partition != Partition{2, 2}) {
    return {false, "complete-graph cases"};
  }
  long graphs = 0;
  for (int n = 2; n <= 6; ++n) {
    std::vector<Graph::Edge> pairs;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<Graph::Edge> edges;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (mask >> e & 1u) edges.push_back(pairs[e]);
      }
      Graph g(n, std::move(edges));
      ++graphs;
      if (determinant(reduced_laplacian(g)) != spanning_trees(g)) return {false, "determinant at " + to_edge_list(g)};
    }
  }
  return {true, "K3/K4 Sylow types; det = spanning trees on " + std::to_string(graphs) + " graphs"};
}

// Runs trials until `target` connected graphs have been recorded.
ExperimentResult connected_samples(int n, Rational q, std::uint64_t seed, std::uint64_t target) {
  ExperimentConfig config;
  config.n = n;
  config.q = std::move(q);
  config.p = 2;
  config.seed = seed;
  ExperimentResult result;
  while (result.table.total < target) {
    config.trials = target - result.table.total;
    result.merge(run_experiment(config));
    config.first_trial += config.trials;
  }
  return result;
}

Outcome sandpile_asymptotics() {
  ProbabilityTable theory = evaluate(tabulate(2, 30, MeasureSpec::wood()), kTol30).restricted(3);
  ExperimentResult half = connected_samples(40, Rational(1, 2), 7, 2000);
  double c2 = approx(odd_constant(2, kTol30).mid());
  double trivial = approx(half.table.frequency(Partition{}));
  BoundedReal tv_theory = tv_distance(theory, half.table.to_table().restricted(3), TailMode::kBucket);

  ExperimentResult sparse = connected_samples(40, Rational(1, 4), 8, 2000);
  ExperimentResult dense = connected_samples(40, Rational(3, 4), 9, 2000);
  BoundedReal tv_q = tv_distance(sparse.table.to_table().restricted(3), dense.table.to_table().restricted(3),
                                 TailMode::kBucket);

  bool ok = std::abs(trivial - c2) <= 0.03 && tv_theory.upper() < Rational(8, 100) && tv_q.upper() < Rational(8, 100);
  std::ostringstream detail;
  detail << "trivial freq " << trivial << " vs C_2 " << c2 << ", TV to theory " << approx(tv_theory.upper())
         << ", TV q=1/4 vs 3/4 " << approx(tv_q.upper()) << ", discarded " << half.discarded_disconnected << "/"
         << sparse.discarded_disconnected << "/" << dense.discarded_disconnected;
  return {ok, detail.str()};
}

}  // namespace

int main() {
  report(1, "exact form equivalence", false, form_equivalence);
  report(2, "normalization", false, normalization);
  report(3, "size distribution", false, size_formula);
  report(4, "parts formula and recursions", false, parts_recursions);
  report(5, "kernel rows and ratio identity", false, kernel_checks);
  report(6, "sampler fidelity", false, sampler_fidelity);
  report(7, "identity suite", false, identity_suite);
  report(8, "sandpile exact cases", false, sandpile_oracle);
  report(9, "sandpile asymptotics (soft)", true, sandpile_asymptotics);
  std::printf("%s: %d hard failure(s)\n", hard_failures == 0 ? "ACCEPTED" : "REJECTED", hard_failures);
  return hard_failures == 0 ? 0 : 1;
}
