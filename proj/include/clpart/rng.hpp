#pragma once

#include <cstdint>
#include <random>

namespace clpart {

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of the independent substream for trial `index` under `seed`.
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

// Every randomized trial draws from its own std::mt19937_64, whose output
// sequence is fixed by the standard, keyed by (seed, trial index).
using TrialEngine = std::mt19937_64;

inline TrialEngine trial_engine(std::uint64_t seed, std::uint64_t index) {
  return TrialEngine(substream_seed(seed, index));
}

template <class G>
concept BitSource = requires(G& g) {
  { g() } -> std::convertible_to<std::uint64_t>;
};

}  // namespace clpart
