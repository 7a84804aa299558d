#include "hgw/generators.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace hgw {

namespace {

// Multiplication in the group described by the spec.
int group_mul(const CayleySpec& spec, int g, int h) {
  if (spec.table.empty()) return (g + h) % spec.order;
  return spec.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
}

int group_order(const CayleySpec& spec) {
  return spec.table.empty() ? spec.order : static_cast<int>(spec.table.size());
}

int group_identity(const CayleySpec& spec) {
  if (spec.table.empty()) return 0;
  const int n = group_order(spec);
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g)
      ok = group_mul(spec, e, g) == g && group_mul(spec, g, e) == g;
    if (ok) return e;
  }
  throw std::invalid_argument("multiplication table has no identity element");
}

void validate_table(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("empty multiplication table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("multiplication table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw std::invalid_argument("multiplication table entry out of range");
  }
  // Rows and columns must be permutations (cancellation laws).
  for (int g = 0; g < n; ++g) {
    std::vector<bool> row_seen(static_cast<std::size_t>(n), false);
    std::vector<bool> col_seen(static_cast<std::size_t>(n), false);
    for (int h = 0; h < n; ++h) {
      int r = table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
      int c = table[static_cast<std::size_t>(h)][static_cast<std::size_t>(g)];
      if (row_seen[static_cast<std::size_t>(r)] || col_seen[static_cast<std::size_t>(c)])
        throw std::invalid_argument("multiplication table row/column is not a permutation");
      row_seen[static_cast<std::size_t>(r)] = col_seen[static_cast<std::size_t>(c)] = true;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int ab_c = table[static_cast<std::size_t>(
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])][static_cast<std::size_t>(c)];
        int a_bc = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(
            table[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)])];
        if (ab_c != a_bc) throw std::invalid_argument("multiplication table is not associative");
      }
}

int group_inverse(const CayleySpec& spec, int identity, int g) {
  const int n = group_order(spec);
  for (int h = 0; h < n; ++h)
    if (group_mul(spec, g, h) == identity) return h;
  throw std::invalid_argument("element " + std::to_string(g) + " has no inverse");
}

}  // namespace

CayleySpec CayleySpec::cyclic(int n, std::vector<int> gens) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  CayleySpec spec;
  spec.order = n;
  spec.generators = std::move(gens);
  return spec;
}

CayleySpec CayleySpec::from_table(std::vector<std::vector<int>> table, std::vector<int> gens) {
  validate_table(table);
  CayleySpec spec;
  spec.order = static_cast<int>(table.size());
  spec.table = std::move(table);
  spec.generators = std::move(gens);
  return spec;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph cayley(const CayleySpec& spec) {
  const int n = group_order(spec);
  if (n < 1) throw std::invalid_argument("group must be non-empty");
  const int e = group_identity(spec);
  if (spec.generators.empty()) throw std::invalid_argument("generating set is empty");
  for (int s : spec.generators) {
    if (s < 0 || s >= n) throw std::invalid_argument("generator out of range");
    if (s == e) throw std::invalid_argument("generating set contains the identity");
  }
  std::set<int> gens(spec.generators.begin(), spec.generators.end());
  for (int s : gens) {
    int inv = group_inverse(spec, e, s);
    if (!gens.count(inv))
      throw std::invalid_argument("generating set is not closed under inverses (missing inverse of " +
                                  std::to_string(s) + ")");
  }
  std::set<std::pair<Vertex, Vertex>> edge_set;
  for (int g = 0; g < n; ++g)
    for (int s : gens) {
      int h = group_mul(spec, g, s);
      edge_set.insert({std::min(g, h), std::max(g, h)});
    }
  Graph graph(n, {edge_set.begin(), edge_set.end()});
  auto validation = validate_graph(graph);
  if (!validation.ok)
    throw std::invalid_argument("generating set does not generate the group (Cayley graph disconnected)");
  return graph;
}

Graph petersen() {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph(10, edges);
}

Graph hypercube(int dim) {
  if (dim < 1) throw std::invalid_argument("hypercube dimension must be positive");
  if (dim > 20) throw std::invalid_argument("hypercube dimension too large");
  const int n = 1 << dim;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b) {
      int w = v ^ (1 << b);
      if (v < w) edges.emplace_back(v, w);
    }
  return Graph(n, edges);
}

Graph platonic(const std::string& name) {
  if (name == "tetrahedron") return complete(4);
  if (name == "cube") return hypercube(3);
  if (name == "octahedron") {
    // K_6 minus the perfect matching {i, i+3}
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (j != i + 3) edges.emplace_back(i, j);
    return Graph(6, edges);
  }
  if (name == "dodecahedron") {
    // generalized Petersen construction GP(10, 2)
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < 10; ++i) {
      edges.emplace_back(i, (i + 1) % 10);
      edges.emplace_back(10 + i, 10 + (i + 2) % 10);
      edges.emplace_back(i, 10 + i);
    }
    return Graph(20, edges);
  }
  if (name == "icosahedron") {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < 5; ++i) {
      edges.emplace_back(0, 1 + i);                    // top apex
      edges.emplace_back(11, 6 + i);                   // bottom apex
      edges.emplace_back(1 + i, 1 + (i + 1) % 5);      // upper band
      edges.emplace_back(6 + i, 6 + (i + 1) % 5);      // lower band
    }
    for (auto [u, v] : {std::pair{1, 6}, {1, 7}, {2, 7}, {2, 8}, {3, 8},
                        {3, 9}, {4, 9}, {4, 10}, {5, 10}, {5, 6}})
      edges.emplace_back(u, v);
    return Graph(12, edges);
  }
  throw std::invalid_argument("unknown platonic solid: " + name);
}

PointedGraph figure2_graph() {
  // 0 = top hub, 1..6 = top rim (6-cycle 1-2-4-6-5-3-1),
  // 7..12 = mirror rim, 13 = bottom hub.
  enum { A = 0, B = 1, C = 2, D = 3, E = 4, F = 5, G = 6,
         Bp = 7, Cp = 8, Dp = 9, Ep = 10, Fp = 11, Gp = 12, Ap = 13 };
  std::vector<std::pair<Vertex, Vertex>> edges = {
      {A, B},   {A, C},   {A, D},   {A, E},   {A, F},   {A, G},
      {B, C},   {B, D},   {C, E},   {E, G},   {D, F},   {F, G},
      {Ap, Bp}, {Ap, Cp}, {Ap, Dp}, {Ap, Ep}, {Ap, Fp}, {Ap, Gp},
      {Bp, Cp}, {Bp, Dp}, {Cp, Ep}, {Ep, Gp}, {Dp, Fp}, {Fp, Gp},
      {B, Bp},  {C, Cp},  {D, Dp},  {E, Ep},  {F, Fp},  {G, Gp},
      {B, Cp},  {C, Bp},  {D, Bp},  {B, Dp},  {C, Ep},  {E, Cp},
      {D, Fp},  {F, Dp},  {F, Gp},  {G, Fp},  {G, Ep},  {E, Gp},
  };
  return PointedGraph(Graph(14, edges), A);
}

}  // namespace hgw
