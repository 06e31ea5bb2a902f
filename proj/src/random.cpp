#include "urt/random.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace urt {

namespace {
std::atomic<unsigned> g_max_workers{0};
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t SeedTree::derive(std::string_view name, std::uint64_t index) const {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return mix64(mix64(master_ ^ mix64(h)) + index);
}

Rng SeedTree::stream(std::string_view name, std::uint64_t index) const {
  std::uint64_t s = derive(name, index);
  std::seed_seq seq{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32)};
  return Rng(seq);
}

std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

void set_max_workers(unsigned workers) { g_max_workers = workers; }

unsigned max_workers() {
  unsigned w = g_max_workers.load();
  if (w == 0) w = std::max(1u, std::thread::hardware_concurrency());
  return w;
}

std::pair<std::size_t, std::size_t> chunk_range(std::size_t n, std::size_t chunks,
                                                std::size_t i) {
  std::size_t base = n / chunks, extra = n % chunks;
  std::size_t begin = i * base + std::min(i, extra);
  return {begin, begin + base + (i < extra ? 1 : 0)};
}

void parallel_chunks(std::size_t chunks, std::uint64_t base_seed,
                     const std::function<void(std::size_t, Rng&)>& body) {
  SeedTree seeds(base_seed);
  auto run_one = [&](std::size_t i) {
    Rng rng = seeds.stream("chunk", i);
    body(i, rng);
  };
  unsigned workers = std::min<std::size_t>(max_workers(), chunks);
  if (workers <= 1) {
    for (std::size_t i = 0; i < chunks; ++i) run_one(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < chunks; i = next++) {
        try {
          run_one(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace urt
