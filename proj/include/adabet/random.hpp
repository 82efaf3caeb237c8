#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>

#include "adabet/graph.hpp"

namespace adabet {

using Rng = std::mt19937_64;

// Stream tags keep the phases of one run on disjoint generators.
enum class Stream : std::uint64_t {
  vertex_diameter = 1,
  warmup = 2,
  main = 3,
  generator = 4,
  bench = 5,
};

/// Deterministic generator for (seed, stream, worker).
inline Rng make_rng(std::uint64_t seed, Stream stream, std::uint64_t worker = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(worker),
                    static_cast<std::uint32_t>(worker >> 32)};
  return Rng(seq);
}

/// Uniform ordered pair (s, t) with s != t.
inline std::pair<NodeId, NodeId> sample_pair(Rng& rng, std::size_t n) {
  if (n < 2) throw std::invalid_argument("sample_pair needs at least two nodes");
  std::uniform_int_distribution<std::size_t> first(0, n - 1);
  std::uniform_int_distribution<std::size_t> second(0, n - 2);
  const auto s = first(rng);
  auto t = second(rng);
  if (t >= s) ++t;
  return {static_cast<NodeId>(s), static_cast<NodeId>(t)};
}

}  // namespace adabet
