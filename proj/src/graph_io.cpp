#include "maxekpp/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace maxekpp {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

std::string format_weight(double w) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, w);
  return std::string(buf, end);
}

}  // namespace

WeightedGraph parse_dimacs(std::istream& in, ParseDiagnostics* diag) {
  int n = -1;
  long declared_edges = -1;
  std::vector<WeightedEdge> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    std::istringstream fields(line);
    std::string kind;
    fields >> kind;
    if (kind == "c") continue;
    if (kind == "p") {
      if (n >= 0) fail(line_no, "second problem line");
      std::string format;
      if (!(fields >> format >> n >> declared_edges) ||
          (format != "edge" && format != "col"))
        fail(line_no, "malformed problem line, expected 'p edge <n> <m>'");
      if (n < 1) fail(line_no, "node count must be positive");
    } else if (kind == "e") {
      if (n < 0) fail(line_no, "edge line before problem line");
      int u = 0, v = 0;
      if (!(fields >> u >> v)) fail(line_no, "malformed edge line");
      if (u == v) fail(line_no, "self-loop on node " + std::to_string(u));
      if (u < 1 || u > n || v < 1 || v > n)
        fail(line_no, "edge endpoint outside 1.." + std::to_string(n));
      if (u > v) std::swap(u, v);
      edges.push_back({u, v, 1.0});
    } else {
      fail(line_no, "unknown line type '" + kind + "'");
    }
  }
  if (n < 0) throw std::runtime_error("missing problem line");

  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return std::pair(a.first, a.second) < std::pair(b.first, b.second);
  });
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](const auto& a, const auto& b) {
                            return a.first == b.first && a.second == b.second;
                          }),
              edges.end());
  if (diag && declared_edges != static_cast<long>(edges.size()))
    diag->warnings.push_back("header declares " + std::to_string(declared_edges) +
                             " edges, found " + std::to_string(edges.size()) +
                             " distinct");
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph parse_weighted_edge_list(std::istream& in) {
  int n = -1;
  std::map<std::pair<int, int>, double> edges;
  std::vector<double> node_weights;
  bool any_node_weight = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    if (blank(line)) continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n) || n < 1) fail(line_no, "expected a positive node count");
      node_weights.assign(static_cast<std::size_t>(n), 1.0);
      continue;
    }
    std::string first;
    fields >> first;
    if (first == "q") {
      int node = 0;
      double q = 0.0;
      if (!(fields >> node >> q)) fail(line_no, "malformed node-weight line");
      if (node < 1 || node > n)
        fail(line_no, "node " + std::to_string(node) + " outside 1.." +
                          std::to_string(n));
      if (q < 0.0) fail(line_no, "negative node weight");
      node_weights[node - 1] = q;
      any_node_weight = true;
      continue;
    }
    int u = 0, v = 0;
    double w = 0.0;
    auto [uptr, uec] = std::from_chars(first.data(), first.data() + first.size(), u);
    if (uec != std::errc{} || uptr != first.data() + first.size())
      fail(line_no, "malformed edge line");
    if (!(fields >> v >> w)) fail(line_no, "malformed edge line");
    if (u == v) fail(line_no, "self-loop on node " + std::to_string(u));
    if (u < 1 || u > n || v < 1 || v > n)
      fail(line_no, "edge endpoint outside 1.." + std::to_string(n));
    if (u > v) std::swap(u, v);
    auto [it, inserted] = edges.emplace(std::pair(u, v), w);
    if (!inserted && it->second != w)
      fail(line_no, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") repeated with a different weight");
  }
  if (n < 0) throw std::runtime_error("empty graph file");

  std::vector<WeightedEdge> edge_list;
  edge_list.reserve(edges.size());
  for (const auto& [pair, w] : edges)
    edge_list.push_back({pair.first, pair.second, w});
  std::optional<std::vector<double>> q;
  if (any_node_weight) q = std::move(node_weights);
  return WeightedGraph(n, std::move(edge_list), std::move(q));
}

void write_weighted_edge_list(std::ostream& out, const WeightedGraph& g) {
  out << g.node_count() << '\n';
  if (g.has_node_weights())
    for (int v = 1; v <= g.node_count(); ++v)
      out << "q " << v << ' ' << format_weight(g.node_weight(v)) << '\n';
  for (const auto& e : g.edges())
    out << e.first << ' ' << e.second << ' ' << format_weight(e.weight) << '\n';
}

WeightedGraph load_graph_file(const std::string& path, ParseDiagnostics* diag) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  bool dimacs = false;
  while (std::getline(in, line)) {
    if (blank(line)) continue;
    std::istringstream fields(line);
    std::string kind;
    fields >> kind;
    if (kind == "c") continue;
    dimacs = (kind == "p");
    break;
  }
  in.clear();
  in.seekg(0);
  return dimacs ? parse_dimacs(in, diag) : parse_weighted_edge_list(in);
}

}  // namespace maxekpp
