#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fibcube/bitstring.hpp"

namespace fibcube {

// Explicit materialization of Q_n, the fibonacci cube or the lucas cube:
// vertices in canonical order, edges between strings at Hamming distance 1.
// Immutable after build; concurrent reads are safe.
class CubeGraph {
 public:
  // Materialization cap, enforced with ResourceLimitError.
  static constexpr int kMaxBuildLength = 24;

  static CubeGraph build(int n, Family family);

  int n() const { return n_; }
  Family family() const { return family_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<BitString>& vertices() const { return vertices_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }

  std::optional<int> find_vertex(const BitString& s) const;

  // Distance from src to every vertex (-1 if unreachable), breadth first.
  std::vector<int> bfs_from(int src) const;

 private:
  CubeGraph() = default;

  int n_ = 0;
  Family family_ = Family::hypercube;
  std::vector<BitString> vertices_;
  std::vector<std::vector<int>> adjacency_;
  std::unordered_map<std::uint64_t, int> index_;
  std::size_t edge_count_ = 0;
};

// Graph distance between two vertices of g. Throws std::invalid_argument if
// either string is not a vertex, and std::runtime_error if they are in
// different components (never happens for these families; asserted, not
// assumed).
int bfs_distance(const CubeGraph& g, const BitString& u, const BitString& v);

// True iff every vertex pair of the family graph is at graph distance equal
// to its Hamming distance, i.e. the graph sits isometrically inside Q_n.
bool verify_isometric(int n, Family family);

// DOT rendering for visual inspection, vertex label = bitstring. Vertices
// listed in emphasize are drawn with a doubled border.
std::string to_dot(const CubeGraph& g, const std::vector<int>& emphasize = {});

}  // namespace fibcube
