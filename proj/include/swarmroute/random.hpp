#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace swarmroute {

using Seed = std::uint64_t;
using Engine = std::mt19937_64;

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent sub-stream seeds: every consumer of randomness derives its own
// seed from the caller's seed plus a stream tag and indices, so results never
// depend on call order.
enum class Stream : std::uint64_t {
  Topology = 1,
  Bandwidth,
  Perturb,
  Priorities,
  PsoInit,
  PsoStep,
  GaInit,
  GaGeneration,
  Selection,
  Trial,
  Run,
};

constexpr Seed derive_seed(Seed base, Stream stream,
                           std::initializer_list<std::uint64_t> indices = {}) noexcept {
  std::uint64_t h = mix64(base ^ mix64(static_cast<std::uint64_t>(stream)));
  for (std::uint64_t i : indices) h = mix64(h ^ mix64(i + 0x632be59bd9b4e019ULL));
  return h;
}

inline Engine make_engine(Seed seed) { return Engine(seed); }

// The std distributions are implementation-defined; these keep output
// bit-identical across standard libraries.

// Uniform on [0, 1) with 53 random bits.
inline double uniform01(Engine& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_real(Engine& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

// Uniform on [0, n), n > 0. Rejection sampling, no modulo bias.
inline std::size_t uniform_index(Engine& rng, std::size_t n) {
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return static_cast<std::size_t>(r % bound);
}

inline bool bernoulli(Engine& rng, double p) { return uniform01(rng) < p; }

}  // namespace swarmroute
