#pragma once

#include <optional>
#include <vector>

#include "hgw/graph.hpp"
#include "hgw/matrix.hpp"
#include "hgw/rational.hpp"
#include "hgw/structure_constants.hpp"

namespace hgw {

/// The k-adjacency matrices A^(k) (entry 1 iff d(x, y) = k) together with
/// their normalizations A_k = A^(k) / mu_k.
///
/// raw has one matrix per k = 0..diameter; normalized covers k in
/// I(Gamma, v0) only, since mu_k = |S_k(v0)| vanishes beyond the base
/// point's eccentricity. When sphere sizes vary across vertices (condition
/// S1 fails) the normalization is still formed from the base point's
/// mu_k and base_point_relative is set.
struct AdjacencyFamily {
  std::vector<Mat<int>> raw;
  std::vector<Mat<Rat>> normalized;
  std::vector<int> mu;
  bool base_point_relative = false;
};

/// The aggregation map D as an index_count x n zero-one matrix:
/// D[i][v] = 1 iff d(v0, v) = i. Summing a coordinate vector over each
/// sphere is exactly left multiplication by this matrix.
struct AggregationMap {
  Mat<Rat> matrix;
};

/// k-transition matrices P_k with P_k[i][j] = p_{k,i}^j.
struct TransitionFamily {
  std::vector<Mat<Rat>> matrices;
};

AdjacencyFamily build_adjacency_family(const DistanceProfile& profile);
AggregationMap build_aggregation_map(const DistanceProfile& profile);
TransitionFamily build_transition_family(const StructureConstants& constants);

/// First failing entry of a matrix identity, in lexicographic scan order.
struct EntryWitness {
  int k = -1;
  int l = -1;  // unused (-1) for the single-index P_h D = D A_h check
  int row = -1;
  int col = -1;
  Rat lhs;
  Rat rhs;

  friend bool operator==(const EntryWitness&, const EntryWitness&) = default;
};

struct PdDaResult {
  std::vector<bool> per_index;  // P_h D == D A_h, indexed by h
  std::optional<EntryWitness> witness;

  bool all_hold() const {
    for (bool b : per_index)
      if (!b) return false;
    return true;
  }
};

/// P_h D = D A_h for every h in I(Gamma, v0), exact rational equality.
PdDaResult check_pd_equals_da(const AdjacencyFamily& family, const TransitionFamily& transitions,
                              const AggregationMap& aggregation);

struct CommutationResult {
  bool ok = true;
  std::optional<EntryWitness> witness;
};

/// D A_k A_l = D A_l A_k for all pairs k <= l.
CommutationResult check_daa_commutation(const AdjacencyFamily& family,
                                        const AggregationMap& aggregation);

/// A^(k) A^(l) = A^(l) A^(k) for all pairs k <= l (integer products).
CommutationResult check_adjacency_commutation(const AdjacencyFamily& family);

}  // namespace hgw
