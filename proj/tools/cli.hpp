#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "urt/network.hpp"
#include "urt/sampler.hpp"

namespace urtlab {

/// Exit codes: 0 pass/success, 1 test failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// canopy, single_vertex, line, regular:<k>, ray_from_endpoint,
/// chain_cover:uniform:<lo>:<hi>, chain_cover:<p0>,<p1>,...
urt::SamplerPtr parse_fixture(const std::string& spec);

/// star:<n>, regular_tree_ball:<d>:<n>, sierpinski:<n>.
urt::RootedNetwork parse_graph(const std::string& spec);

/// A family name (star, regular_tree_ball:<d>, sierpinski) instantiated at
/// each size.
std::vector<urt::RootedNetwork> parse_family(const std::string& family,
                                             const std::vector<int>& sizes);

}  // namespace urtlab
