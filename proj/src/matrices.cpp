#include "hgw/matrices.hpp"

namespace hgw {

AdjacencyFamily build_adjacency_family(const DistanceProfile& profile) {
  const int n = static_cast<int>(profile.all_pairs.size());
  AdjacencyFamily family;
  family.raw.reserve(static_cast<std::size_t>(profile.diameter) + 1);
  for (int k = 0; k <= profile.diameter; ++k) {
    Mat<int> a(n, n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (profile.all_pairs[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] == k)
          a(x, y) = 1;
    family.raw.push_back(std::move(a));
  }

  family.mu.assign(profile.sphere_sizes.begin(),
                   profile.sphere_sizes.begin() + profile.index_count);

  // |S_k(v)| must equal mu_k for every v for the normalization to be
  // vertex-independent; flag when that fails.
  for (int k = 0; k < profile.index_count && !family.base_point_relative; ++k) {
    const Mat<int>& a = family.raw[static_cast<std::size_t>(k)];
    for (int x = 0; x < n && !family.base_point_relative; ++x) {
      int row_sum = 0;
      for (int y = 0; y < n; ++y) row_sum += a(x, y);
      if (row_sum != family.mu[static_cast<std::size_t>(k)]) family.base_point_relative = true;
    }
  }

  family.normalized.reserve(static_cast<std::size_t>(profile.index_count));
  for (int k = 0; k < profile.index_count; ++k) {
    const Mat<int>& a = family.raw[static_cast<std::size_t>(k)];
    Rat inv_mu = make_rat(1, family.mu[static_cast<std::size_t>(k)]);
    Mat<Rat> norm(n, n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (a(x, y) != 0) norm(x, y) = inv_mu;
    family.normalized.push_back(std::move(norm));
  }
  return family;
}

AggregationMap build_aggregation_map(const DistanceProfile& profile) {
  const int n = static_cast<int>(profile.all_pairs.size());
  Mat<Rat> d(profile.index_count, n);
  for (int v = 0; v < n; ++v) d(profile.dist_from_base[static_cast<std::size_t>(v)], v) = Rat(1);
  return AggregationMap{std::move(d)};
}

TransitionFamily build_transition_family(const StructureConstants& constants) {
  const int size = constants.size();
  TransitionFamily family;
  family.matrices.reserve(static_cast<std::size_t>(size));
  for (int k = 0; k < size; ++k) {
    Mat<Rat> p(size, size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) p(i, j) = constants.at(k, i, j);
    family.matrices.push_back(std::move(p));
  }
  return family;
}

namespace {

// P_h acts on sequences over I(Gamma, v0) as xi |-> t(t(xi) P_h), so its
// matrix on column vectors is the transpose of P_h = (p_{h,i}^j).
Mat<Rat> transition_operator(const Mat<Rat>& p) {
  Mat<Rat> t(p.cols(), p.rows());
  for (int r = 0; r < p.rows(); ++r)
    for (int c = 0; c < p.cols(); ++c) t(c, r) = p(r, c);
  return t;
}

}  // namespace

PdDaResult check_pd_equals_da(const AdjacencyFamily& family, const TransitionFamily& transitions,
                              const AggregationMap& aggregation) {
  PdDaResult result;
  const int count = static_cast<int>(transitions.matrices.size());
  result.per_index.assign(static_cast<std::size_t>(count), true);
  for (int h = 0; h < count; ++h) {
    Mat<Rat> lhs =
        transition_operator(transitions.matrices[static_cast<std::size_t>(h)]) * aggregation.matrix;
    Mat<Rat> rhs = aggregation.matrix * family.normalized[static_cast<std::size_t>(h)];
    if (lhs == rhs) continue;
    result.per_index[static_cast<std::size_t>(h)] = false;
    if (!result.witness) {
      for (int r = 0; r < lhs.rows() && !result.witness; ++r)
        for (int c = 0; c < lhs.cols(); ++c)
          if (lhs(r, c) != rhs(r, c)) {
            result.witness = EntryWitness{h, -1, r, c, lhs(r, c), rhs(r, c)};
            break;
          }
    }
  }
  return result;
}

CommutationResult check_daa_commutation(const AdjacencyFamily& family,
                                        const AggregationMap& aggregation) {
  CommutationResult result;
  const int count = static_cast<int>(family.normalized.size());
  for (int k = 0; k < count; ++k)
    for (int l = k + 1; l < count; ++l) {
      Mat<Rat> lhs = (aggregation.matrix * family.normalized[static_cast<std::size_t>(k)]) *
                     family.normalized[static_cast<std::size_t>(l)];
      Mat<Rat> rhs = (aggregation.matrix * family.normalized[static_cast<std::size_t>(l)]) *
                     family.normalized[static_cast<std::size_t>(k)];
      if (lhs == rhs) continue;
      for (int r = 0; r < lhs.rows(); ++r)
        for (int c = 0; c < lhs.cols(); ++c)
          if (lhs(r, c) != rhs(r, c))
            return {false, EntryWitness{k, l, r, c, lhs(r, c), rhs(r, c)}};
    }
  return result;
}

CommutationResult check_adjacency_commutation(const AdjacencyFamily& family) {
  CommutationResult result;
  const int count = static_cast<int>(family.raw.size());
  for (int k = 0; k < count; ++k)
    for (int l = k + 1; l < count; ++l) {
      Mat<int> lhs = family.raw[static_cast<std::size_t>(k)] * family.raw[static_cast<std::size_t>(l)];
      Mat<int> rhs = family.raw[static_cast<std::size_t>(l)] * family.raw[static_cast<std::size_t>(k)];
      if (lhs == rhs) continue;
      for (int r = 0; r < lhs.rows(); ++r)
        for (int c = 0; c < lhs.cols(); ++c)
          if (lhs(r, c) != rhs(r, c))
            return {false, EntryWitness{k, l, r, c, Rat(lhs(r, c)), Rat(rhs(r, c))}};
    }
  return result;
}

}  // namespace hgw
