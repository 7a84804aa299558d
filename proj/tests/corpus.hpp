#pragma once

#include <string>
#include <vector>

#include "hgw/generators.hpp"
#include "hgw/graph.hpp"
#include "hgw/hypergroup.hpp"

namespace hgw::testing {

struct CorpusEntry {
  std::string name;
  PointedGraph pg;
};

/// Pointed graphs satisfying (S1) and (S2): cycles, complete graphs,
/// Petersen, hypercubes, the platonic solids and the 14-vertex wheel-pair
/// graph. 27 entries.
inline std::vector<CorpusEntry> s1s2_corpus() {
  std::vector<CorpusEntry> corpus;
  for (int n = 3; n <= 12; ++n)
    corpus.push_back({"cycle(" + std::to_string(n) + ")", PointedGraph(cycle(n), 0)});
  for (int n = 2; n <= 8; ++n)
    corpus.push_back({"complete(" + std::to_string(n) + ")", PointedGraph(complete(n), 0)});
  corpus.push_back({"petersen", PointedGraph(petersen(), 0)});
  for (int d = 2; d <= 4; ++d)
    corpus.push_back({"hypercube(" + std::to_string(d) + ")", PointedGraph(hypercube(d), 0)});
  for (const char* name :
       {"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"})
    corpus.push_back({std::string("platonic(") + name + ")", PointedGraph(platonic(name), 0)});
  corpus.push_back({"fig2", figure2_graph()});
  return corpus;
}

/// Self-centered (diameter 2 everywhere) but neither commutative nor
/// associative; fails (S1). Found by randomized search, frozen here.
inline PointedGraph non_productive7() {
  return PointedGraph(Graph(7, {{0, 1}, {0, 3}, {0, 4}, {0, 6}, {1, 2}, {1, 5}, {1, 6},
                                {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}}),
                      0);
}

/// Circulant on 7 vertices with connection set {1, 2}: vertex-transitive,
/// so (S1) holds, but (S2) fails.
inline PointedGraph circulant7_12() {
  return PointedGraph(cayley(CayleySpec::cyclic(7, {1, 2, 5, 6})), 0);
}

inline PointedGraph path3(Vertex base) {
  return PointedGraph(Graph(3, {{0, 1}, {1, 2}}), base);
}

/// Order-3 commutative pre-hypergroup violating the Wildberger relations
/// (beta1 * omega1 = 1 but gamma1 * omega2 = 1/2).
inline WildbergerParams wild_violating_params() {
  WildbergerParams params;
  params.omega1 = Rat(2);
  params.omega2 = Rat(2);
  params.alpha1 = Rat(0);
  params.beta1 = make_rat(1, 2);
  params.beta2 = make_rat(1, 4);
  params.alpha2 = make_rat(1, 4);
  params.gamma1 = make_rat(1, 4);
  params.gamma2 = make_rat(3, 4);
  return params;
}

}  // namespace hgw::testing
