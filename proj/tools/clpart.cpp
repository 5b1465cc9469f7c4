// Command-line front end. Exit status: 0 success, 1 verification failure,
// 2 usage error (one-line diagnostic on stderr).

#include "clpart/io.hpp"
#include "clpart/measures.hpp"
#include "clpart/qseries.hpp"
#include "clpart/sampler.hpp"
#include "clpart/sandpile.hpp"
#include "clpart/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using clpart::Rational;
using nlohmann::json;

constexpr const char* kVersion = "0.1.0";
constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << bytes)) throw std::runtime_error("cannot write '" + path + "'");
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_prime(long p) {
  if (!is_prime(p)) throw UsageError("p must be >= 2 and prime (got " + std::to_string(p) + ")");
}

Rational parse_rational_arg(const std::string& name, const std::string& text) {
  try {
    return clpart::parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(name + ": " + e.what());
  }
}

clpart::Partition parse_partition_arg(const std::string& text) {
  try {
    return clpart::parse_partition(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

/// Output of one command: the bytes, where they go, and what produced them.
class Emitter {
 public:
  Emitter(std::string command, std::vector<std::string> argv) : command_(std::move(command)), argv_(std::move(argv)) {}

  json& params() { return params_; }
  void set_seed(std::uint64_t seed) { seed_ = seed; }
  void set_output(std::string path) { output_ = std::move(path); }

  // Writes to --output (with a manifest) or to stdout.
  void emit(const std::string& bytes) const {
    if (output_.empty()) {
      std::cout << bytes;
      return;
    }
    write_file(output_, bytes);
    json manifest;
    manifest["command"] = command_;
    manifest["argv"] = argv_;
    manifest["params"] = params_;
    manifest["seed"] = seed_ ? json(*seed_) : json(nullptr);
    manifest["version"] = kVersion;
    manifest["outputs"] = json::array({{{"path", output_}, {"sha256", sha256_hex(bytes)}}});
    write_file(output_ + ".manifest.json", manifest.dump(2) + "\n");
  }

 private:
  std::string command_;
  std::vector<std::string> argv_;
  json params_ = json::object();
  std::optional<std::uint64_t> seed_;
  std::string output_;
};

std::string render(const clpart::BoundedReal& x) {
  std::ostringstream out;
  out.precision(17);
  out << x.mid().get_d() << " +/- " << x.rad().get_d();
  return out.str();
}

struct PmfArgs {
  std::string measure = "wood";
  long p = 2;
  std::string partition;
  std::optional<int> max_size;
  std::string u = "1";
  long r = 1;
  std::optional<long> n;
  std::optional<long> a;
  std::string format = "text";
  std::string output;
};

std::string constant_line(clpart::MassEvaluator& eval, clpart::ConstantKind kind, const Rational& u) {
  switch (kind) {
    case clpart::ConstantKind::kNone:
      return "constant: none (exact rational mass)";
    case clpart::ConstantKind::kOddConstant:
      return "constant: C_p in " + render(eval.constant(kind));
    case clpart::ConstantKind::kDeformed:
      return "constant: D(u) in " + render(eval.constant(kind, u));
  }
  return {};
}

int cmd_pmf(const PmfArgs& args, Emitter& emitter) {
  require_prime(args.p);
  const Rational u = parse_rational_arg("--u", args.u);
  json& params = emitter.params();
  params = {{"measure", args.measure}, {"p", args.p}, {"format", args.format}};

  clpart::MeasureSpec spec;
  if (args.measure == "deformed") {
    if (u <= 0 || u >= args.p) throw UsageError("--u must lie strictly inside (0, p)");
    spec = clpart::MeasureSpec::deformed(u);
    params["u"] = clpart::to_string(u);
  } else if (args.measure == "truncated") {
    if (args.r < 1) throw UsageError("--r must be >= 1");
    spec = clpart::MeasureSpec::truncated(args.r);
    params["r"] = args.r;
  }

  clpart::MassEvaluator eval(args.p, clpart::kOutputTolerance);

  if (args.max_size) {
    if (args.measure == "size" || args.measure == "parts") throw UsageError("--max-size needs a partition measure");
    if (!args.partition.empty()) throw UsageError("--partition and --max-size are exclusive");
    if (*args.max_size < 0 || *args.max_size > clpart::kEnumerationCap) {
      throw UsageError("--max-size must lie in [0, " + std::to_string(clpart::kEnumerationCap) + "]");
    }
    params["max_size"] = *args.max_size;
    auto dist = clpart::tabulate(args.p, *args.max_size, spec);
    const auto kind = spec.kind == clpart::MeasureSpec::Kind::kWood       ? clpart::ConstantKind::kOddConstant
                      : spec.kind == clpart::MeasureSpec::Kind::kDeformed ? clpart::ConstantKind::kDeformed
                                                                          : clpart::ConstantKind::kNone;
    std::cerr << constant_line(eval, kind, u) << '\n';
    emitter.emit(args.format == "json" ? clpart::to_json(dist).dump(2) + "\n" : clpart::to_csv(dist));
    return 0;
  }

  clpart::MassValue mass;
  std::string subject;
  if (args.measure == "size") {
    if (!args.n) throw UsageError("--measure size needs --n");
    if (*args.n < 0) throw UsageError("--n must be >= 0");
    mass = clpart::pmf_size(*args.n, args.p);
    subject = "size " + std::to_string(*args.n);
    params["n"] = *args.n;
  } else if (args.measure == "parts") {
    if (!args.a) throw UsageError("--measure parts needs --a");
    if (*args.a < 0) throw UsageError("--a must be >= 0");
    mass = clpart::pmf_parts(*args.a, args.p);
    subject = "parts " + std::to_string(*args.a);
    params["a"] = *args.a;
  } else {
    if (args.partition.empty()) throw UsageError("need --partition or --max-size");
    auto lambda = parse_partition_arg(args.partition);
    if (spec.kind == clpart::MeasureSpec::Kind::kTruncated && static_cast<long>(lambda.length()) > args.r) {
      throw UsageError("partition has more than r parts");
    }
    mass = clpart::pmf(spec, lambda, args.p);
    subject = clpart::to_string(lambda);
    params["partition"] = subject;
  }

  const clpart::BoundedReal value = eval(mass);
  const std::string constant = constant_line(eval, mass.kind, mass.u);
  std::string factor = mass.kind == clpart::ConstantKind::kNone          ? ""
                       : mass.kind == clpart::ConstantKind::kOddConstant ? "C_p * "
                                                                         : "D(u) * ";
  if (args.format == "json") {
    json out{{"measure", args.measure},
             {"p", args.p},
             {"subject", subject},
             {"rational_part", clpart::to_string(mass.rational_part)},
             {"value", clpart::to_json(value.is_exact() ? value : value.snapped(clpart::kOutputTolerance))},
             {"approx", clpart::approx(value.mid())}};
    if (mass.kind != clpart::ConstantKind::kNone) {
      out["constant"] = clpart::to_json(eval.constant(mass.kind, mass.u).snapped(clpart::kOutputTolerance));
    }
    std::cerr << constant << '\n';
    emitter.emit(out.dump(2) + "\n");
  } else if (args.format == "csv") {
    std::cerr << constant << '\n';
    auto shown = value.is_exact() ? value : value.snapped(clpart::kOutputTolerance);
    emitter.emit("partition,midpoint,radius\n\"" + subject + "\"," + clpart::to_string(shown.mid()) + "," +
                 clpart::to_string(shown.rad()) + "\n");
  } else {
    std::ostringstream out;
    out << "mass(" << subject << ") = " << factor << clpart::to_string(mass.rational_part) << '\n'
        << constant << '\n'
        << "value in " << render(value) << '\n';
    emitter.emit(out.str());
  }
  return 0;
}

struct SampleArgs {
  long p = 2;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::string cutoff = "1/1000000000000";
  bool summary = false;
  std::string format = "json";
  unsigned threads = 1;
  std::string output;
};

int cmd_sample(const SampleArgs& args, Emitter& emitter) {
  require_prime(args.p);
  if (args.trials < 1) throw UsageError("--trials must be >= 1");
  clpart::SamplerConfig config{args.p, args.seed, parse_rational_arg("--cutoff", args.cutoff)};
  if (config.initial_tail_cutoff <= 0 || config.initial_tail_cutoff >= 1) {
    throw UsageError("--cutoff must lie strictly inside (0, 1)");
  }
  emitter.set_seed(args.seed);
  emitter.params() = {{"p", args.p},
                      {"trials", args.trials},
                      {"cutoff", clpart::to_string(config.initial_tail_cutoff)},
                      {"summary", args.summary},
                      {"format", args.format}};

  if (args.summary) {
    auto table = clpart::empirical_distribution(config, args.trials, args.threads);
    emitter.emit(args.format == "csv" ? clpart::to_csv(table)
                                      : clpart::to_json(table, args.p, "empirical", json::object()).dump(2) + "\n");
    return 0;
  }
  // One partition per line, trial t drawn from the same stream as in the summary.
  clpart::ColumnSampler sampler(config);
  std::string lines;
  for (std::uint64_t t = 0; t < args.trials; ++t) {
    auto engine = clpart::trial_engine(args.seed, t);
    lines += clpart::to_string(sampler.sample(engine));
    lines += '\n';
  }
  emitter.emit(lines);
  return 0;
}

struct GraphsArgs {
  int n = 2;
  std::string q = "1/2";
  long p = 2;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  int cap = 12;
  std::string format = "json";
  unsigned threads = 1;
  std::string output;
};

int cmd_graphs(const GraphsArgs& args, Emitter& emitter) {
  if (args.n < 2) throw UsageError("--n must be >= 2");
  const Rational q = parse_rational_arg("--q", args.q);
  if (q <= 0 || q >= 1) throw UsageError("--q must lie strictly inside (0, 1)");
  require_prime(args.p);
  if (args.trials < 1) throw UsageError("--trials must be >= 1");
  if (args.cap < 1) throw UsageError("--cap must be >= 1");

  clpart::ExperimentConfig config;
  config.n = args.n;
  config.q = q;
  config.p = args.p;
  config.trials = args.trials;
  config.seed = args.seed;
  config.cap = args.cap;
  config.threads = args.threads;
  auto result = clpart::run_experiment(config);

  json params{{"n", args.n}, {"q", clpart::to_string(q)}, {"trials", args.trials}, {"cap", args.cap}};
  emitter.set_seed(args.seed);
  emitter.params() = params;
  emitter.params()["p"] = args.p;
  emitter.params()["format"] = args.format;
  if (args.format == "csv") {
    emitter.emit(clpart::to_csv(result.table));
    return 0;
  }
  json out = clpart::to_json(result.table, args.p, "sandpile", params);
  out["discarded_disconnected"] = result.discarded_disconnected;
  out["capped"] = result.capped;
  emitter.emit(out.dump(2) + "\n");
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  std::vector<long> primes{2, 3};
  int depth = 40;
  long a_max = 30;
  long r_max = 5;
};

int cmd_verify(const VerifyArgs& args) {
  if (args.depth < 1) throw UsageError("--depth must be >= 1");
  if (args.depth > clpart::kEnumerationCap) {
    throw UsageError("--depth must be <= " + std::to_string(clpart::kEnumerationCap));
  }
  if (args.a_max < 0 || args.r_max < 1) throw UsageError("--a-max must be >= 0 and --r-max >= 1");
  if (args.primes.empty()) throw UsageError("--p needs at least one prime");
  for (long p : args.primes) require_prime(p);

  clpart::VerifyOptions options{args.primes, args.depth, args.a_max, args.r_max};
  std::vector<clpart::CheckResult> checks;
  auto append = [&](std::vector<clpart::CheckResult> more) {
    checks.insert(checks.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  if (args.suite == "identities" || args.suite == "all") append(clpart::verify_identities(options));
  if (args.suite == "recursions" || args.suite == "all") append(clpart::verify_recursions(options));
  if (args.suite == "chain" || args.suite == "all") append(clpart::verify_chain(options));

  bool all = true;
  for (const auto& check : checks) {
    std::cout << (check.passed ? "PASS " : "FAIL ") << check.name << ": " << check.detail << '\n';
    all = all && check.passed;
  }
  std::cout << (all ? "all " : "some checks failed; ") << checks.size() << " checks run\n";
  return all ? 0 : kVerificationFailed;
}

struct GraphGenArgs {
  int n = 2;
  std::string q = "1/2";
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  std::string output;
};

int cmd_graph_gen(const GraphGenArgs& args, Emitter& emitter) {
  if (args.n < 2) throw UsageError("--n must be >= 2");
  const Rational q = parse_rational_arg("--q", args.q);
  if (q <= 0 || q >= 1) throw UsageError("--q must lie strictly inside (0, 1)");
  auto engine = clpart::trial_engine(args.seed, args.trial);
  emitter.set_seed(args.seed);
  emitter.params() = {{"n", args.n}, {"q", clpart::to_string(q)}, {"trial", args.trial}};
  emitter.emit(clpart::to_edge_list(clpart::gen_er_graph(args.n, q, engine)));
  return 0;
}

int cmd_sylow(const std::string& path, long p, int cap) {
  require_prime(p);
  if (cap < 1) throw UsageError("--cap must be >= 1");
  clpart::Graph g;
  try {
    g = clpart::parse_edge_list(read_file(path));
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
  if (g.vertex_count() < 2) throw UsageError("graph needs at least 2 vertices");
  if (!g.connected()) throw UsageError("graph is disconnected; its sandpile group is infinite");
  auto lap = clpart::reduced_laplacian(g);
  auto sylow = clpart::p_sylow_partition(lap, p, cap);
  std::cout << "spanning trees: " << clpart::determinant(lap).get_str() << '\n'
            << p << "-Sylow: " << clpart::to_string(sylow.partition) << (sylow.capped ? " (capped)" : "") << '\n';
  return 0;
}

int run(const std::vector<std::string>& argv);

int cmd_replay(const std::string& path) {
  json manifest;
  try {
    manifest = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
  if (!manifest.contains("argv") || !manifest.contains("outputs")) throw UsageError(path + ": not a run manifest");
  auto argv = manifest["argv"].get<std::vector<std::string>>();
  if (int status = run(argv); status != 0) return status;
  bool identical = true;
  for (const auto& output : manifest["outputs"]) {
    auto file = output["path"].get<std::string>();
    bool same = sha256_hex(read_file(file)) == output["sha256"].get<std::string>();
    std::cout << (same ? "identical " : "DIFFERS ") << file << '\n';
    identical = identical && same;
  }
  return identical ? 0 : kVerificationFailed;
}

int run(const std::vector<std::string>& argv) {
  CLI::App app{"Exact measures on partitions, samplers and sandpile experiments", "clpart"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  PmfArgs pmf;
  auto* pmf_cmd = app.add_subcommand("pmf", "Exact mass of one partition or a table of masses");
  pmf_cmd->add_option("--measure", pmf.measure)
      ->check(CLI::IsMember({"wood", "deformed", "truncated", "size", "parts"}));
  pmf_cmd->add_option("--p", pmf.p, "prime")->required();
  pmf_cmd->add_option("--partition", pmf.partition, "e.g. \"[3,1,1]\"");
  pmf_cmd->add_option("--max-size", pmf.max_size, "tabulate all partitions up to this size");
  pmf_cmd->add_option("--u", pmf.u, "deformation parameter in (0, p), a/b");
  pmf_cmd->add_option("--r", pmf.r, "part bound for the truncated measure");
  pmf_cmd->add_option("--n", pmf.n, "size for --measure size");
  pmf_cmd->add_option("--a", pmf.a, "number of parts for --measure parts");
  pmf_cmd->add_option("--format", pmf.format)->check(CLI::IsMember({"text", "json", "csv"}));
  pmf_cmd->add_option("--output", pmf.output);

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample", "Draw partitions with the column chain");
  sample_cmd->add_option("--p", sample.p)->required();
  sample_cmd->add_option("--trials", sample.trials);
  sample_cmd->add_option("--seed", sample.seed)->required();
  sample_cmd->add_option("--cutoff", sample.cutoff, "first-column tail cutoff, a/b");
  sample_cmd->add_flag("--summary", sample.summary, "write a frequency table instead of samples");
  sample_cmd->add_option("--format", sample.format)->check(CLI::IsMember({"json", "csv"}));
  sample_cmd->add_option("--threads", sample.threads)->check(CLI::Range(1u, 256u));
  sample_cmd->add_option("--output", sample.output);

  GraphsArgs graphs;
  auto* graphs_cmd = app.add_subcommand("graphs", "Sylow types of random graph sandpile groups");
  graphs_cmd->add_option("--n", graphs.n)->required();
  graphs_cmd->add_option("--q", graphs.q, "edge probability, a/b")->required();
  graphs_cmd->add_option("--p", graphs.p)->required();
  graphs_cmd->add_option("--trials", graphs.trials);
  graphs_cmd->add_option("--seed", graphs.seed)->required();
  graphs_cmd->add_option("--cap", graphs.cap, "valuation cap");
  graphs_cmd->add_option("--format", graphs.format)->check(CLI::IsMember({"json", "csv"}));
  graphs_cmd->add_option("--threads", graphs.threads)->check(CLI::Range(1u, 256u));
  graphs_cmd->add_option("--output", graphs.output);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run an identity verification suite");
  verify_cmd->add_option("--suite", verify.suite)->check(CLI::IsMember({"identities", "recursions", "chain", "all"}));
  verify_cmd->add_option("--p", verify.primes, "comma-separated primes")->delimiter(',');
  verify_cmd->add_option("--depth", verify.depth, "enumeration depth");
  verify_cmd->add_option("--a-max", verify.a_max);
  verify_cmd->add_option("--r-max", verify.r_max);

  GraphGenArgs gen;
  auto* gen_cmd = app.add_subcommand("graph-gen", "Write one random graph as an edge list");
  gen_cmd->add_option("--n", gen.n)->required();
  gen_cmd->add_option("--q", gen.q)->required();
  gen_cmd->add_option("--seed", gen.seed)->required();
  gen_cmd->add_option("--trial", gen.trial, "substream index");
  gen_cmd->add_option("--output", gen.output);

  std::string graph_path;
  long sylow_p = 2;
  int sylow_cap = 12;
  auto* sylow_cmd = app.add_subcommand("sylow", "Sylow type of one graph's sandpile group");
  sylow_cmd->add_option("--graph", graph_path, "edge-list file")->required();
  sylow_cmd->add_option("--p", sylow_p)->required();
  sylow_cmd->add_option("--cap", sylow_cap);

  std::string manifest_path;
  auto* replay_cmd = app.add_subcommand("replay", "Re-run a manifest and compare output digests");
  replay_cmd->add_option("--manifest", manifest_path)->required();

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    auto* chosen = app.get_subcommands().front();
    Emitter emitter(chosen->get_name(), argv);
    if (chosen == pmf_cmd) {
      emitter.set_output(pmf.output);
      return cmd_pmf(pmf, emitter);
    }
    if (chosen == sample_cmd) {
      emitter.set_output(sample.output);
      return cmd_sample(sample, emitter);
    }
    if (chosen == graphs_cmd) {
      emitter.set_output(graphs.output);
      return cmd_graphs(graphs, emitter);
    }
    if (chosen == gen_cmd) {
      emitter.set_output(gen.output);
      return cmd_graph_gen(gen, emitter);
    }
    if (chosen == verify_cmd) return cmd_verify(verify);
    if (chosen == sylow_cmd) return cmd_sylow(graph_path, sylow_p, sylow_cap);
    return cmd_replay(manifest_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(std::vector<std::string>(argv + 1, argv + argc));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
