#include "vantage/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vantage {

int WeightedGraph::edge_between(int u, int v) const {
  if (!valid_vertex(u) || !valid_vertex(v)) return -1;
  for (int e : adj_[static_cast<std::size_t>(u)]) {
    if (edges_[static_cast<std::size_t>(e)].touches(v)) return e;
  }
  return -1;
}

WeightedGraph build_graph(int vertex_count, const std::vector<EdgeSpec>& edge_list) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  WeightedGraph g;
  g.n_ = vertex_count;
  g.adj_.assign(static_cast<std::size_t>(vertex_count), {});
  std::map<std::pair<int, int>, int> seen;
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    const EdgeSpec& spec = edge_list[i];
    const std::string where = "edge " + std::to_string(i);
    if (spec.u < 0 || spec.u >= vertex_count || spec.v < 0 || spec.v >= vertex_count) {
      throw std::invalid_argument(where + ": vertex id out of range");
    }
    if (spec.u == spec.v) throw std::invalid_argument(where + ": self-loop");
    if (spec.weight <= 0) throw std::invalid_argument(where + ": nonpositive weight");
    auto key = std::minmax(spec.u, spec.v);
    if (!seen.emplace(key, static_cast<int>(i)).second) {
      throw std::invalid_argument(where + ": duplicate edge");
    }
    g.edges_.push_back(Edge{spec.u, spec.v, spec.weight});
    g.adj_[static_cast<std::size_t>(spec.u)].push_back(static_cast<int>(i));
    g.adj_[static_cast<std::size_t>(spec.v)].push_back(static_cast<int>(i));
  }
  return g;
}

namespace {

bool content_line(const std::string& line, std::string& out) {
  std::string trimmed = line;
  auto hash = trimmed.find('#');
  if (hash != std::string::npos) trimmed.resize(hash);
  auto not_space = trimmed.find_first_not_of(" \t\r\n");
  if (not_space == std::string::npos) return false;
  out = trimmed;
  return true;
}

}  // namespace

WeightedGraph read_graph(std::istream& in) {
  std::string raw, line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, raw)) {
      ++line_no;
      if (content_line(raw, line)) return true;
    }
    return false;
  };

  if (!next_line()) throw std::invalid_argument("graph file: missing header line");
  int n = 0, m = 0;
  {
    std::istringstream hdr(line);
    if (!(hdr >> n >> m) || n < 0 || m < 0) {
      throw std::invalid_argument("graph file line " + std::to_string(line_no) +
                                  ": expected 'n m' header");
    }
  }
  std::vector<EdgeSpec> specs;
  specs.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (!next_line()) {
      throw std::invalid_argument("graph file: expected " + std::to_string(m) +
                                  " edges, got " + std::to_string(i));
    }
    std::istringstream row(line);
    int u, v;
    std::string w;
    if (!(row >> u >> v >> w)) {
      throw std::invalid_argument("graph file line " + std::to_string(line_no) +
                                  ": expected 'u v w'");
    }
    try {
      specs.push_back(EdgeSpec{u, v, parse_rational(w)});
    } catch (const std::invalid_argument& err) {
      throw std::invalid_argument("graph file line " + std::to_string(line_no) + ": " +
                                  err.what());
    }
  }
  try {
    return build_graph(n, specs);
  } catch (const std::invalid_argument& err) {
    throw std::invalid_argument(std::string("graph file: ") + err.what());
  }
}

WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  return read_graph(in);
}

void write_graph(const WeightedGraph& g, std::ostream& out) {
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const Edge& e : g.edges()) {
    out << e.u << " " << e.v << " " << fraction_string(e.weight) << "\n";
  }
}

void write_graph_file(const WeightedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open for writing: " + path);
  write_graph(g, out);
}

}  // namespace vantage
