#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string_view>

namespace urt {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; used to derive independent sub-stream seeds.
std::uint64_t mix64(std::uint64_t x);

/// A master seed expanded into named, indexed sub-streams. The same
/// (seed, name, index) always yields the same stream.
class SeedTree {
 public:
  explicit SeedTree(std::uint64_t master) : master_(master) {}

  std::uint64_t master() const { return master_; }
  std::uint64_t derive(std::string_view name, std::uint64_t index = 0) const;
  Rng stream(std::string_view name, std::uint64_t index = 0) const;

 private:
  std::uint64_t master_;
};

/// Uniform double in [0, 1).
inline double uniform01(Rng& rng) {
  return std::generate_canonical<double, 53>(rng);
}

/// Uniform integer in [0, n).
std::size_t uniform_index(Rng& rng, std::size_t n);

/// Upper bound on worker threads used by the Monte Carlo loops; 0 means
/// hardware concurrency.
void set_max_workers(unsigned workers);
unsigned max_workers();

/// Runs `body(chunk, rng)` for `chunks` independent chunks. Chunk i draws
/// from the stream derived from (base_seed, i), so results are identical for
/// every worker count as long as callers merge per-chunk results in chunk
/// order.
void parallel_chunks(std::size_t chunks, std::uint64_t base_seed,
                     const std::function<void(std::size_t, Rng&)>& body);

/// Splits `n` items into the fixed number of chunks used by parallel loops
/// and returns [begin, end) of chunk i.
std::pair<std::size_t, std::size_t> chunk_range(std::size_t n, std::size_t chunks,
                                                std::size_t i);

inline constexpr std::size_t kDefaultChunks = 64;

}  // namespace urt
