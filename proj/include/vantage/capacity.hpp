#pragma once
// Capacities modeled by their relative order: a bijection from edge ids
// onto ranks 1..m, rank 1 being the smallest capacity.

#include <iosfwd>
#include <string>
#include <vector>

#include "vantage/prng.hpp"

namespace vantage {

struct CapacityAssignment {
  std::vector<int> rank;  // rank[edge_id] in 1..m

  int edge_count() const { return static_cast<int>(rank.size()); }
};

// Validates the bijection onto {1..m}.
CapacityAssignment make_capacity(std::vector<int> ranks);

CapacityAssignment random_capacity(int edge_count, Prng& rng);

// File format: m lines "edge_index rank"; '#' comments allowed.
CapacityAssignment read_capacity(std::istream& in, int edge_count);
CapacityAssignment read_capacity_file(const std::string& path, int edge_count);
void write_capacity(const CapacityAssignment& c, std::ostream& out);
void write_capacity_file(const CapacityAssignment& c, const std::string& path);

}  // namespace vantage
