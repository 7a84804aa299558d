#pragma once

#include <string>
#include <vector>

#include "hgw/graph.hpp"

namespace hgw {

/// Cayley graph specification. Either a cyclic group Z/nZ (order > 0,
/// empty table) or an arbitrary finite group given by its full
/// multiplication table (table[g][h] = g*h over elements 0..n-1).
///
/// The generating set must exclude the identity, be closed under inverses
/// and generate the group; violations raise std::invalid_argument.
struct CayleySpec {
  int order = 0;
  std::vector<std::vector<int>> table;
  std::vector<int> generators;

  static CayleySpec cyclic(int n, std::vector<int> gens);
  static CayleySpec from_table(std::vector<std::vector<int>> table, std::vector<int> gens);
};

Graph cycle(int n);     // n >= 3
Graph complete(int n);  // n >= 1
Graph cayley(const CayleySpec& spec);
Graph petersen();
Graph hypercube(int dim);  // dim >= 1

/// name in {tetrahedron, cube, octahedron, dodecahedron, icosahedron}
Graph platonic(const std::string& name);

/// The 14-vertex 6-regular graph with spheres (1, 6, 6, 1) around the hub:
/// two wheels on six rim vertices, each rim vertex also joined to the
/// mirror copies of itself and of its two rim neighbours. Base point is
/// the top hub, vertex 0.
PointedGraph figure2_graph();

}  // namespace hgw
