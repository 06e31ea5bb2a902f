#include "urt/graph_io.hpp"

#include <charconv>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "urt/errors.hpp"

namespace urt {

namespace {

std::string format_values(const Mark& m) {
  if (m.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += format_real(m[i]);
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw FormatError("graph file line " + std::to_string(line) + ": " + what);
}

template <class T>
T parse_number(std::string_view text, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(line, "bad number '" + std::string(text) + "'");
  }
  return value;
}

Mark parse_mark(const std::string& tag, const std::string& vals, std::size_t line) {
  auto t = parse_number<std::uint32_t>(tag, line);
  std::vector<double> values;
  if (vals != "-") {
    std::size_t start = 0;
    while (start <= vals.size()) {
      std::size_t comma = vals.find(',', start);
      if (comma == std::string::npos) comma = vals.size();
      values.push_back(parse_number<double>(
          std::string_view(vals).substr(start, comma - start), line));
      start = comma + 1;
    }
  }
  try {
    return Mark(t, values);
  } catch (const MarkError& e) {
    fail(line, e.what());
  }
}

struct Pending {
  std::map<std::uint64_t, VertexId> ids;
  std::vector<Mark> marks;
  std::vector<Edge> edges;
  std::optional<std::uint64_t> root;
  int radius = RootedNetwork::kUnbounded;

  VertexId intern(std::uint64_t id) {
    auto [it, fresh] = ids.emplace(id, static_cast<VertexId>(marks.size()));
    if (fresh) marks.emplace_back();
    return it->second;
  }
};

}  // namespace

std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_network(std::ostream& out, const RootedNetwork& net,
                   const std::string& label) {
  out << "network " << label << '\n';
  out << "root " << net.root() << '\n';
  out << "radius ";
  if (net.is_finite()) {
    out << "inf\n";
  } else {
    out << net.radius() << '\n';
  }
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    const Mark& m = net.vertex_mark(v);
    out << "vertex " << v << ' ' << m.tag() << ' ' << format_values(m) << '\n';
  }
  for (const Edge& e : net.edges()) {
    out << e.u << ' ' << e.v << ' ' << e.at_u.tag() << ' ' << format_values(e.at_u)
        << ' ' << e.at_v.tag() << ' ' << format_values(e.at_v) << '\n';
  }
  out << "end\n";
}

std::vector<RootedNetwork> read_networks(std::istream& in) {
  std::vector<RootedNetwork> out;
  std::optional<Pending> cur;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    const std::string& head = tok[0];
    if (head == "network") {
      if (cur) fail(line, "nested network block");
      cur.emplace();
      continue;
    }
    if (!cur) fail(line, "content outside a network block");
    if (head == "end") {
      if (!cur->root) fail(line, "network has no root declaration");
      auto it = cur->ids.find(*cur->root);
      if (it == cur->ids.end()) fail(line, "root is not a vertex");
      try {
        out.emplace_back(std::move(cur->marks), std::move(cur->edges), it->second,
                         cur->radius);
      } catch (const DomainError& e) {
        fail(line, e.what());
      }
      cur.reset();
    } else if (head == "root") {
      if (tok.size() != 2) fail(line, "expected 'root <id>'");
      cur->root = parse_number<std::uint64_t>(tok[1], line);
      cur->intern(*cur->root);
    } else if (head == "radius") {
      if (tok.size() != 2) fail(line, "expected 'radius <n|inf>'");
      cur->radius = tok[1] == "inf" ? RootedNetwork::kUnbounded
                                    : parse_number<int>(tok[1], line);
    } else if (head == "vertex") {
      if (tok.size() != 4) fail(line, "expected 'vertex <id> <tag> <vals>'");
      VertexId v = cur->intern(parse_number<std::uint64_t>(tok[1], line));
      cur->marks[v] = parse_mark(tok[2], tok[3], line);
    } else {
      if (tok.size() != 6) fail(line, "expected 'u v tag_u vals_u tag_v vals_v'");
      VertexId u = cur->intern(parse_number<std::uint64_t>(tok[0], line));
      VertexId v = cur->intern(parse_number<std::uint64_t>(tok[1], line));
      cur->edges.push_back(
          Edge{u, v, parse_mark(tok[2], tok[3], line), parse_mark(tok[4], tok[5], line)});
    }
  }
  if (cur) fail(line, "unterminated network block");
  return out;
}

}  // namespace urt
