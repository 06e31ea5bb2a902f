#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "urt/network.hpp"

namespace urt {

/// Canonical form of a rooted depth-ball: two codes compare equal exactly
/// when the balls are rooted-isomorphic after rounding every mark value to
/// the nearest multiple of `quantization` (quantization 0 keeps values
/// bit-exact).
struct CanonicalCode {
  std::string bytes;
  int depth = 0;
  double quantization = 0.0;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;

  /// Short stable identifier (64-bit FNV-1a of the bytes, hex).
  std::string digest() const;
};

/// Canonical code of ball(net, root, depth).
CanonicalCode canonical_code(const RootedNetwork& net, int depth,
                             double quantization = 0.0);

/// Canonical code of the depth-ball around the first root with the second
/// root distinguished. The second root must lie inside the ball.
CanonicalCode canonical_code(const DoublyRootedNetwork& net, int depth,
                             double quantization = 0.0);

/// Canonical bytes of an entire finite network (no ball extraction). The
/// optional vertex is distinguished.
std::string canonical_bytes(const RootedNetwork& net, double quantization,
                            std::optional<VertexId> distinguished = {});

}  // namespace urt
