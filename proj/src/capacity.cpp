#include "vantage/capacity.hpp"

#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vantage {

CapacityAssignment make_capacity(std::vector<int> ranks) {
  const int m = static_cast<int>(ranks.size());
  std::vector<bool> used(static_cast<std::size_t>(m) + 1, false);
  for (int r : ranks) {
    if (r < 1 || r > m || used[static_cast<std::size_t>(r)]) {
      throw std::invalid_argument("capacity ranks must be a bijection onto 1.." +
                                  std::to_string(m));
    }
    used[static_cast<std::size_t>(r)] = true;
  }
  return CapacityAssignment{std::move(ranks)};
}

CapacityAssignment random_capacity(int edge_count, Prng& rng) {
  std::vector<int> ranks(static_cast<std::size_t>(edge_count));
  std::iota(ranks.begin(), ranks.end(), 1);
  rng.shuffle(ranks);
  return CapacityAssignment{std::move(ranks)};
}

CapacityAssignment read_capacity(std::istream& in, int edge_count) {
  std::vector<int> ranks(static_cast<std::size_t>(edge_count), 0);
  std::vector<bool> seen(static_cast<std::size_t>(edge_count), false);
  std::string line;
  int line_no = 0;
  int rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream row(line);
    int e, r;
    if (!(row >> e)) continue;  // blank/comment
    if (!(row >> r)) {
      throw std::invalid_argument("capacity file line " + std::to_string(line_no) +
                                  ": expected 'edge_index rank'");
    }
    if (e < 0 || e >= edge_count || seen[static_cast<std::size_t>(e)]) {
      throw std::invalid_argument("capacity file line " + std::to_string(line_no) +
                                  ": bad or repeated edge index");
    }
    seen[static_cast<std::size_t>(e)] = true;
    ranks[static_cast<std::size_t>(e)] = r;
    ++rows;
  }
  if (rows != edge_count) {
    throw std::invalid_argument("capacity file: expected " + std::to_string(edge_count) +
                                " rows, got " + std::to_string(rows));
  }
  return make_capacity(std::move(ranks));
}

CapacityAssignment read_capacity_file(const std::string& path, int edge_count) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open capacity file: " + path);
  return read_capacity(in, edge_count);
}

void write_capacity(const CapacityAssignment& c, std::ostream& out) {
  for (std::size_t e = 0; e < c.rank.size(); ++e) {
    out << e << " " << c.rank[e] << "\n";
  }
}

void write_capacity_file(const CapacityAssignment& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open for writing: " + path);
  write_capacity(c, out);
}

}  // namespace vantage
