#include "urt/sampler.hpp"

#include "urt/errors.hpp"

namespace urt {

RootedNetwork sample_ball(const RootedLawSampler& sampler, int r, Rng& rng) {
  RootedNetwork net = sampler.sample(r, rng);
  if (net.radius() < r) {
    throw ContractViolation(sampler.name() + " returned a sample of radius " +
                            std::to_string(net.radius()) + " < " +
                            std::to_string(r));
  }
  return ball(net, net.root(), r);
}

}  // namespace urt
