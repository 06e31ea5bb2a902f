#pragma once

#include <vector>

#include "urt/network.hpp"
#include "urt/random.hpp"
#include "urt/sampler.hpp"

namespace urt {

/// Finite-support law on {0, ..., K}.
class OffspringLaw {
 public:
  /// probabilities[k] is the mass at k. Must be nonnegative, finite, and sum
  /// to 1 within 1e-9.
  explicit OffspringLaw(std::vector<double> probabilities);

  /// Uniform law on {lo, ..., hi}.
  static OffspringLaw uniform(int lo, int hi);
  static OffspringLaw point_mass(int k);

  int max_value() const { return static_cast<int>(p_.size()) - 1; }
  int min_support() const;
  double probability(int k) const;
  double mean() const;
  int sample(Rng& rng) const;

 private:
  std::vector<double> p_;
  std::vector<double> cumulative_;
};

/// The canopy tree rooted at x_n with probability 2^{-n-2}, n >= -1.
SamplerPtr canopy_sampler();

enum class PointMass { single_vertex, line, regular };

/// Deterministic laws: the one-vertex tree, the two-ended line, the k-regular
/// tree (k = `degree`, only for PointMass::regular).
SamplerPtr point_mass_sampler(PointMass kind, int degree = 0);

/// The one-ended path rooted at its endpoint. Not unimodular; kept as a
/// negative control for the unimodularity tests.
SamplerPtr ray_from_endpoint_sampler();

/// Universal cover, rooted at a lift of 0, of the multigraph on Z that joins k
/// to k+1 by N_k parallel edges, N_k i.i.d. with law `multiplicity`.
SamplerPtr chain_cover_sampler(OffspringLaw multiplicity);

/// Radius-n ball of the d-regular tree, rooted at its center.
RootedNetwork regular_tree_ball(int d, int n);

/// n-th stage Sierpinski gasket graph (n = 0 is a triangle), rooted at a
/// corner.
RootedNetwork sierpinski_graph(int n);

/// Same graph rooted at a uniform random vertex.
RootedNetwork sierpinski_graph(int n, Rng& rng);

/// K_{1,n} rooted at the hub.
RootedNetwork star_graph(int n);

/// Finite path with n vertices rooted at one end.
RootedNetwork path_graph(int n);

}  // namespace urt
