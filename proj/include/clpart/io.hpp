#pragma once

#include "clpart/bounded_real.hpp"
#include "clpart/empirical.hpp"
#include "clpart/measures.hpp"
#include "clpart/rational.hpp"

#include <json.hpp>

#include <string>

namespace clpart {

// Default enclosure width for masses written to disk.
inline const Rational kOutputTolerance{1, Integer("1000000000000000000000000000000")};

nlohmann::json to_json(const Rational& x);
nlohmann::json to_json(const BoundedReal& x);

// {"p", "measure", "params", "entries": [{"partition", "mid", "rad", "approx"}], "tail"}
nlohmann::json to_json(const PartitionDistribution& dist, const Rational& tolerance = kOutputTolerance);

// Same schema for observed frequencies; entries carry "count" and the
// document carries "trials".
nlohmann::json to_json(const EmpiricalTable& table, long p, const std::string& measure,
                       const nlohmann::json& params);

// partition,midpoint,radius
std::string to_csv(const PartitionDistribution& dist, const Rational& tolerance = kOutputTolerance);
std::string to_csv(const EmpiricalTable& table);

}  // namespace clpart
