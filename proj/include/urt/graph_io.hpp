#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "urt/network.hpp"

namespace urt {

/// Text format (one block per network, see docs/graph_format.md):
///
///   network <label>
///   root <id>
///   radius <n | inf>
///   vertex <id> <tag> <vals>
///   <u> <v> <tag_u> <vals_u> <tag_v> <vals_v>
///   end
///
/// <vals> is a comma-separated list of reals or "-" when empty. Lines starting
/// with '#' are comments.
void write_network(std::ostream& out, const RootedNetwork& net,
                   const std::string& label = "0");

std::vector<RootedNetwork> read_networks(std::istream& in);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_real(double v);

}  // namespace urt
