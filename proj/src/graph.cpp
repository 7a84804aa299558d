#include "hgw/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hgw {

Graph::Graph(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  adjacency_.assign(static_cast<std::size_t>(vertex_count), {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw std::invalid_argument("duplicate edge in input");
  }
  edge_count_ = static_cast<int>(edges.size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

PointedGraph::PointedGraph(Graph g, Vertex v0) : graph(std::move(g)), base(v0) {
  if (v0 < 0 || v0 >= graph.vertex_count())
    throw std::invalid_argument("base point " + std::to_string(v0) + " out of range");
}

ValidationResult validate_graph(const Graph& g) {
  ValidationResult result;
  if (g.vertex_count() == 0) {
    result.message = "graph has no vertices";
    return result;
  }
  auto dist = bfs_distances(g, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (dist[v] < 0) result.unreached.push_back(v);
  result.ok = result.unreached.empty();
  if (!result.ok) {
    result.message = "graph is disconnected: " + std::to_string(result.unreached.size()) +
                     " vertices unreachable from vertex 0";
  }
  return result;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  dist[source] = 0;
  std::deque<Vertex> queue{source};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceProfile compute_distance_profile(const PointedGraph& pg) {
  const Graph& g = pg.graph;
  const int n = g.vertex_count();
  DistanceProfile profile;
  profile.all_pairs.reserve(static_cast<std::size_t>(n));
  int diameter = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto dist = bfs_distances(g, v);
    for (int d : dist) {
      if (d < 0) throw std::invalid_argument("graph is disconnected");
      diameter = std::max(diameter, d);
    }
    profile.all_pairs.push_back(std::move(dist));
  }
  profile.diameter = diameter;
  profile.dist_from_base = profile.all_pairs[static_cast<std::size_t>(pg.base)];

  profile.spheres.assign(static_cast<std::size_t>(diameter) + 1, {});
  for (Vertex v = 0; v < n; ++v)
    profile.spheres[static_cast<std::size_t>(profile.dist_from_base[v])].push_back(v);
  profile.sphere_sizes.resize(profile.spheres.size());
  for (std::size_t k = 0; k < profile.spheres.size(); ++k)
    profile.sphere_sizes[k] = static_cast<int>(profile.spheres[k].size());

  int ecc = 0;
  for (int d : profile.dist_from_base) ecc = std::max(ecc, d);
  profile.index_count = ecc + 1;
  return profile;
}

SelfCenteredResult check_self_centered(const Graph& g, const AllPairsDistances& all_pairs) {
  SelfCenteredResult result;
  const int n = g.vertex_count();
  std::vector<int> ecc(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (int d : all_pairs[static_cast<std::size_t>(v)]) ecc[v] = std::max(ecc[v], d);
  for (Vertex v = 1; v < n; ++v) {
    if (ecc[v] != ecc[0]) {
      result.self_centered = false;
      result.v = 0;
      result.w = v;
      result.ecc_v = ecc[0];
      result.ecc_w = ecc[v];
      return result;
    }
  }
  result.self_centered = true;
  return result;
}

SelfCenteredResult check_self_centered(const Graph& g) {
  AllPairsDistances ap;
  ap.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) ap.push_back(bfs_distances(g, v));
  return check_self_centered(g, ap);
}

SphereTable build_sphere_table(const Graph& g, const AllPairsDistances& all_pairs) {
  const int n = g.vertex_count();
  int diameter = 0;
  for (const auto& row : all_pairs)
    for (int d : row) diameter = std::max(diameter, d);
  SphereTable table;
  table.lists.assign(static_cast<std::size_t>(n),
                     std::vector<std::vector<Vertex>>(static_cast<std::size_t>(diameter) + 1));
  table.sizes.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(diameter) + 1, 0));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = 0; w < n; ++w) {
      int d = all_pairs[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
      table.lists[v][static_cast<std::size_t>(d)].push_back(w);
    }
    for (std::size_t k = 0; k < table.lists[v].size(); ++k)
      table.sizes[v][k] = static_cast<int>(table.lists[v][k].size());
  }
  return table;
}

SphereEmptyError::SphereEmptyError(Vertex v, int idx)
    : std::runtime_error("sphere S_" + std::to_string(idx) + "(" + std::to_string(v) +
                         ") is empty; graph is not self-centered"),
      vertex(v),
      index(idx) {}

namespace {

[[noreturn]] void parse_fail(const std::string& source, int line, const std::string& what) {
  throw std::runtime_error(source + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in, const std::string& source_name) {
  std::string line;
  int line_no = 0;
  int n = -1;
  long m = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n >> m) || n < 0 || m < 0)
        parse_fail(source_name, line_no, "expected header line \"n m\"");
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    Vertex u, v;
    if (!(fields >> u >> v)) parse_fail(source_name, line_no, "expected edge line \"u v\"");
    edges.emplace_back(u, v);
  }
  if (n < 0) parse_fail(source_name, line_no, "missing header line \"n m\"");
  if (static_cast<long>(edges.size()) != m)
    parse_fail(source_name, line_no,
               "edge count mismatch: header says " + std::to_string(m) + ", found " +
                   std::to_string(edges.size()));
  try {
    return Graph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(source_name + ": " + e.what());
  }
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_edge_list(in, path);
}

void write_edge_list(const Graph& g, std::ostream& out, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << "\n";
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void save_graph(const Graph& g, const std::string& path, const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  write_edge_list(g, out, comment);
}

}  // namespace hgw
