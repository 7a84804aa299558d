#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hgw {

using Vertex = int;

/// d(x, y) for every ordered pair, filled by BFS from every vertex.
using AllPairsDistances = std::vector<std::vector<int>>;

/// Finite simple undirected graph over dense vertex indices 0..n-1.
/// Construction enforces simplicity: no self-loops, no duplicate edges,
/// neighbor lists sorted, adjacency symmetric.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return edge_count_; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, lexicographically sorted. Canonical order
  /// for the on-disk format.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
};

struct PointedGraph {
  Graph graph;
  Vertex base = 0;

  PointedGraph() = default;
  PointedGraph(Graph g, Vertex v0);
};

/// Distances, spheres and sphere sizes relative to the base point, plus
/// the full all-pairs distance matrix.
///
/// spheres[k] = S_k(v0) for k = 0..diameter; trailing spheres are empty
/// when the base point's eccentricity is smaller than the diameter (a
/// non-self-centered situation). index_count = |I(Gamma, v0)| is the
/// number of non-empty spheres, i.e. ecc(v0) + 1.
struct DistanceProfile {
  std::vector<int> dist_from_base;
  std::vector<std::vector<Vertex>> spheres;
  std::vector<int> sphere_sizes;  // mu_k = |S_k(v0)|
  int index_count = 0;
  int diameter = 0;
  AllPairsDistances all_pairs;
};

struct ValidationResult {
  bool ok = false;
  std::vector<Vertex> unreached;  // vertices BFS from 0 never visits
  std::string message;
};

/// Simplicity is structural (Graph construction rejects loops/duplicates);
/// this checks connectivity by BFS from vertex 0.
ValidationResult validate_graph(const Graph& g);

/// BFS from a single source.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Throws std::invalid_argument if the graph is disconnected.
DistanceProfile compute_distance_profile(const PointedGraph& pg);

struct SelfCenteredResult {
  bool self_centered = false;
  // Witness pair with unequal eccentricities, valid when !self_centered.
  Vertex v = -1;
  Vertex w = -1;
  int ecc_v = 0;
  int ecc_w = 0;
};

SelfCenteredResult check_self_centered(const Graph& g, const AllPairsDistances& all_pairs);
SelfCenteredResult check_self_centered(const Graph& g);

/// Per-vertex spheres: lists[v][j] = S_j(v), sizes[v][j] = |S_j(v)|,
/// for j = 0..diameter. Jump sampling and the nested-sum enumeration both
/// draw from these lists.
struct SphereTable {
  std::vector<std::vector<std::vector<Vertex>>> lists;
  std::vector<std::vector<int>> sizes;
};

SphereTable build_sphere_table(const Graph& g, const AllPairsDistances& all_pairs);

/// Thrown when a walk or structure-constant computation needs S_j(v) and
/// finds it empty; on a connected graph this signals a non-self-centered
/// input.
class SphereEmptyError : public std::runtime_error {
 public:
  SphereEmptyError(Vertex v, int index);
  Vertex vertex;
  int index;
};

// ---- edge-list text format ----
//
// First line "n m", then m lines "u v" with 0 <= u, v < n. Blank lines and
// lines starting with '#' are ignored. This is the canonical on-disk graph
// format for the whole toolkit.

Graph read_edge_list(std::istream& in, const std::string& source_name = "<stream>");
Graph load_graph(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out, const std::string& comment = "");
void save_graph(const Graph& g, const std::string& path, const std::string& comment = "");

}  // namespace hgw
