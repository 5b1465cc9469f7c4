#include "clpart/io.hpp"

#include <sstream>

namespace clpart {

using nlohmann::json;

json to_json(const Rational& x) { return to_string(x); }

json to_json(const BoundedReal& x) { return {{"mid", to_string(x.mid())}, {"rad", to_string(x.rad())}}; }

namespace {

json params_json(const MeasureSpec& measure) {
  json params = json::object();
  for (const auto& [key, value] : measure.params()) params[key] = value;
  return params;
}

// Keeps output denominators at the tolerance grid rather than the exact
// products' p-power denominators.
BoundedReal for_output(const BoundedReal& x, const Rational& tolerance) {
  return x.is_exact() ? x : x.snapped(tolerance);
}

}  // namespace

json to_json(const PartitionDistribution& dist, const Rational& tolerance) {
  json out;
  out["p"] = dist.p;
  out["measure"] = dist.measure.name();
  out["params"] = params_json(dist.measure);
  out["max_size"] = dist.max_size;
  json entries = json::array();
  ProbabilityTable table = evaluate(dist, tolerance);
  for (const auto& [lambda, mass] : table.entries) {
    BoundedReal shown = for_output(mass, tolerance);
    entries.push_back({{"partition", to_string(lambda)},
                       {"mid", to_string(shown.mid())},
                       {"rad", to_string(shown.rad())},
                       {"approx", approx(shown.mid())}});
  }
  out["entries"] = std::move(entries);
  out["tail"] = to_json(for_output(dist.tail, tolerance));
  return out;
}

json to_json(const EmpiricalTable& table, long p, const std::string& measure, const json& params) {
  json out;
  out["p"] = p;
  out["measure"] = measure;
  out["params"] = params;
  out["trials"] = table.total;
  json entries = json::array();
  for (const auto& [lambda, count] : table.counts) {
    Rational freq = table.frequency(lambda);
    entries.push_back({{"partition", to_string(lambda)},
                       {"count", count},
                       {"mid", to_string(freq)},
                       {"rad", "0"},
                       {"approx", approx(freq)}});
  }
  out["entries"] = std::move(entries);
  out["tail"] = to_json(BoundedReal(Rational(0)));
  return out;
}

std::string to_csv(const PartitionDistribution& dist, const Rational& tolerance) {
  std::ostringstream out;
  out << "partition,midpoint,radius\n";
  ProbabilityTable table = evaluate(dist, tolerance);
  for (const auto& [lambda, mass] : table.entries) {
    BoundedReal shown = for_output(mass, tolerance);
    out << '"' << to_string(lambda) << "\"," << to_string(shown.mid()) << ',' << to_string(shown.rad()) << '\n';
  }
  return out.str();
}

std::string to_csv(const EmpiricalTable& table) {
  std::ostringstream out;
  out << "partition,midpoint,radius\n";
  for (const auto& [lambda, count] : table.counts) {
    out << '"' << to_string(lambda) << "\"," << to_string(table.frequency(lambda)) << ",0\n";
  }
  return out.str();
}

}  // namespace clpart
