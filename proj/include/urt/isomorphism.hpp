#pragma once

#include "urt/network.hpp"

namespace urt {

/// True iff a root-preserving isomorphism of the two finite networks exists
/// under which every pair of corresponding marks (vertex marks and both
/// endpoint marks of every edge) is within `mark_tol` in the max metric.
/// Tags must match exactly.
bool rooted_isomorphic(const RootedNetwork& a, const RootedNetwork& b,
                       double mark_tol);

/// Smallest tolerance t for which rooted_isomorphic(a, b, t) holds, or +inf
/// if the underlying rooted graphs (with tags) are not isomorphic.
double bottleneck_mark_distance(const RootedNetwork& a, const RootedNetwork& b);

struct LocalDistance {
  double value;
  /// True when a disagreement was found within the horizon; otherwise `value`
  /// is only an upper bound 1/(1 + r_max).
  bool exact;
};

/// The local metric 1/(1 + alpha), where alpha is the supremum of r in
/// (0, r_max] such that the radius-floor(r) balls admit a rooted isomorphism
/// with all corresponding marks closer than 1/r.
LocalDistance local_distance(const RootedNetwork& a, const RootedNetwork& b,
                             int r_max);

}  // namespace urt
