#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "urt/network.hpp"
#include "urt/random.hpp"

namespace urt {

/// Probability of each root degree.
using DegreeLaw = std::map<int, double>;

/// A law on rooted networks, accessed through exact finite samples: sample(r)
/// returns a network whose radius-r ball has exactly the law's r-ball
/// distribution. Implementations are immutable and safe to share between
/// threads.
class RootedLawSampler {
 public:
  virtual ~RootedLawSampler() = default;

  /// A sample with radius of validity >= r.
  virtual RootedNetwork sample(int r, Rng& rng) const = 0;

  virtual std::string name() const = 0;

  /// Largest degree any vertex can have, when known.
  virtual std::optional<int> degree_bound() const { return std::nullopt; }

  /// Exact root-degree law for point masses and other fully known laws.
  virtual std::optional<DegreeLaw> known_root_degree_law() const {
    return std::nullopt;
  }
};

using SamplerPtr = std::shared_ptr<const RootedLawSampler>;

/// Draws one sample at radius r and cuts it down to its radius-r ball.
RootedNetwork sample_ball(const RootedLawSampler& sampler, int r, Rng& rng);

}  // namespace urt
