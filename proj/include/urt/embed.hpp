#pragma once

#include <functional>

#include "urt/network.hpp"
#include "urt/random.hpp"
#include "urt/sampler.hpp"

namespace urt {

/// Root-degree law of a measure relative to a degree bound d, with
/// alpha = sum_k p_k (d - k).
struct DegreeProfile {
  int d = 0;
  DegreeLaw p;
  double alpha = 0.0;
  /// Number of samples behind p; 0 when p is exact.
  long samples = 0;
};

/// Exact when the sampler knows its root-degree law, otherwise estimated from
/// `samples` radius-1 draws.
DegreeProfile degree_profile(const RootedLawSampler& mu, int d, long samples, Rng& rng);

/// The measure with density (d - deg o)/alpha with respect to mu, realized by
/// rejection. Every sample has root degree <= d - 1.
SamplerPtr biased_sampler(SamplerPtr mu, int d);

/// Radius-r ball of nu, the fixed point of nu = Q(mu', nu): a mu'-tree of open
/// edges whose root gets d - 1 - deg closed edges and whose other vertices get
/// d - deg, each closed edge leading to an independent nu-sample.
RootedNetwork nu_sample(const RootedLawSampler& mu_biased, int d, int r, Rng& rng);

/// Invariant labeled percolation on the d-regular tree whose root cluster has
/// law mu. Edge colors live in values[0] of both endpoint marks.
SamplerPtr rho_sampler(SamplerPtr mu, int d);

/// Gives every closed edge, at each endpoint x, a mark j in 1..k where k is
/// the number of closed edges at x; the marks at x form a uniform permutation.
/// Boundary vertices have unknown closed degree, so validity drops by one.
RootedNetwork direction_marks(const RootedNetwork& ball, Rng& rng);

/// rho followed by direction marks.
SamplerPtr rho_prime_sampler(SamplerPtr mu, int d);

/// Root component of the open edges, with edge colors removed.
RootedNetwork strip_closed(const RootedNetwork& ball);

/// Deletes every edge with an endpoint of degree > d and keeps the root
/// component. Validity drops by one since boundary degrees are unknown.
RootedNetwork truncate_degree(const RootedNetwork& net, int d);

SamplerPtr truncated_sampler(SamplerPtr mu, int d);

/// Vertex mark function; must depend only on the rooted class of (net, x)
/// restricted to the ball of radius `locality` around x.
using MarkMap = std::function<Mark(const RootedNetwork& net, VertexId x)>;

/// Replaces every vertex mark by phi(net, x). Validity drops by `locality`.
RootedNetwork map_marks(const RootedNetwork& net, const MarkMap& phi, int locality);

using RealLaw = std::function<double(Rng&)>;

/// Appends an independent draw from `law` to every vertex mark.
RootedNetwork add_iid_marks(const RootedNetwork& net, const RealLaw& law, Rng& rng);

SamplerPtr iid_marked_sampler(SamplerPtr mu, RealLaw law, std::string law_name = "iid");

/// Consecutive rejections after which biased sampling gives up.
inline constexpr long kMaxRejections = 1'000'000;

}  // namespace urt
