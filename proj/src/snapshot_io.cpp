#include "netdyn/snapshot_io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "netdyn/error.hpp"

namespace netdyn {

void write_snapshot(std::ostream& out, const GraphSnapshot& graph) {
  out << "# nodes: " << graph.nodes().size()
      << " edges: " << graph.edges().size() << '\n';
  for (const auto& n : graph.nodes()) out << "N " << n.str() << '\n';
  char buf[32];
  for (const auto& e : graph.edges()) {
    std::snprintf(buf, sizeof buf, "%.9f", e.weight);
    out << "E " << e.from.str() << ' ' << e.to.str() << ' ' << buf << '\n';
  }
}

namespace {

NodeId parse_node(const std::string& token, std::size_t line) {
  if (!NodeId::is_valid_label(token)) {
    throw ParseError(line, "invalid node label '" + token + "'");
  }
  return NodeId(token);
}

std::size_t parse_count(const std::string& token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "bad count '" + token + "'");
  }
  return value;
}

}  // namespace

GraphSnapshot read_snapshot(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t expected_nodes = 0;
  std::size_t expected_edges = 0;

  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  ++lineno;
  {
    std::istringstream header(line);
    std::string hash, nodes_kw, n, edges_kw, m, extra;
    if (!(header >> hash >> nodes_kw >> n >> edges_kw >> m) || (header >> extra) ||
        hash != "#" || nodes_kw != "nodes:" || edges_kw != "edges:") {
      throw ParseError(lineno, "expected '# nodes: <n> edges: <m>'");
    }
    expected_nodes = parse_count(n, lineno);
    expected_edges = parse_count(m, lineno);
  }

  std::vector<NodeId> nodes;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string kind;
    if (!(fields >> kind)) continue;
    std::string extra;
    if (kind == "N") {
      std::string id;
      if (!(fields >> id) || (fields >> extra)) {
        throw ParseError(lineno, "expected 'N <id>'");
      }
      nodes.push_back(parse_node(id, lineno));
    } else if (kind == "E") {
      std::string from, to, weight;
      if (!(fields >> from >> to >> weight) || (fields >> extra)) {
        throw ParseError(lineno, "expected 'E <from> <to> <weight>'");
      }
      double w = 0;
      auto [ptr, ec] = std::from_chars(weight.data(), weight.data() + weight.size(), w);
      if (ec != std::errc{} || ptr != weight.data() + weight.size()) {
        throw ParseError(lineno, "bad weight '" + weight + "'");
      }
      edges.push_back({parse_node(from, lineno), parse_node(to, lineno), w});
    } else {
      throw ParseError(lineno, "unknown record '" + kind + "'");
    }
  }

  if (nodes.size() != expected_nodes || edges.size() != expected_edges) {
    throw ParseError(1, "header counts do not match body");
  }
  try {
    return GraphSnapshot(std::move(nodes), std::move(edges));
  } catch (const GraphError& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace netdyn
