#include "hgw/hypergroup.hpp"

#include <algorithm>

namespace hgw {

namespace {

// cnt[v][i][j] = |S_i(v) cap S_j(v0)|, for i, j = 0..range-1.
std::vector<std::vector<std::vector<long>>> intersection_counts(const DistanceProfile& profile,
                                                                Vertex base, int range) {
  const int n = static_cast<int>(profile.all_pairs.size());
  std::vector<std::vector<std::vector<long>>> cnt(
      static_cast<std::size_t>(n),
      std::vector<std::vector<long>>(static_cast<std::size_t>(range),
                                     std::vector<long>(static_cast<std::size_t>(range), 0)));
  const auto& from_base = profile.all_pairs[static_cast<std::size_t>(base)];
  for (Vertex v = 0; v < n; ++v) {
    const auto& from_v = profile.all_pairs[static_cast<std::size_t>(v)];
    for (Vertex w = 0; w < n; ++w) {
      int i = from_v[static_cast<std::size_t>(w)];
      int j = from_base[static_cast<std::size_t>(w)];
      if (i < range && j < range) ++cnt[v][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return cnt;
}

}  // namespace

S1Result check_s1(const PointedGraph& pg, const DistanceProfile& profile) {
  const int n = pg.graph.vertex_count();
  const int range = profile.index_count;
  // |S_i(v)| for every vertex and every i in I(Gamma, v0).
  std::vector<std::vector<int>> sizes(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(range), 0));
  for (Vertex v = 0; v < n; ++v)
    for (int d : profile.all_pairs[static_cast<std::size_t>(v)])
      if (d < range) ++sizes[v][static_cast<std::size_t>(d)];
  for (int i = 0; i < range; ++i)
    for (Vertex v = 1; v < n; ++v)
      if (sizes[v][static_cast<std::size_t>(i)] != sizes[0][static_cast<std::size_t>(i)])
        return {false, S1Witness{i, 0, v, sizes[0][static_cast<std::size_t>(i)],
                                 sizes[v][static_cast<std::size_t>(i)]}};
  return {true, std::nullopt};
}

S2Result check_s2(const PointedGraph& pg, const DistanceProfile& profile) {
  const int range = profile.index_count;
  auto cnt = intersection_counts(profile, pg.base, range);

  S2Result result;
  for (int i = 0; i < range; ++i)
    for (int j = 0; j < range; ++j)
      for (int k = 0; k < range; ++k) {
        const auto& sphere = profile.spheres[static_cast<std::size_t>(k)];
        Vertex rep = sphere.front();
        long expected = cnt[static_cast<std::size_t>(rep)][static_cast<std::size_t>(i)]
                           [static_cast<std::size_t>(j)];
        for (Vertex v : sphere) {
          long got = cnt[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)]
                        [static_cast<std::size_t>(j)];
          if (got != expected) {
            result.holds = false;
            result.witness = S2Witness{i, j, k, rep, v, expected, got};
            return result;
          }
        }
      }

  result.holds = true;
  result.tables = IntersectionTables(range);
  for (int i = 0; i < range; ++i) {
    Vertex rep = profile.spheres[static_cast<std::size_t>(i)].front();
    for (int j = 0; j < range; ++j)
      for (int k = 0; k < range; ++k)
        result.tables.at(i, j, k) = cnt[static_cast<std::size_t>(rep)][static_cast<std::size_t>(j)]
                                       [static_cast<std::size_t>(k)];
  }
  return result;
}

DistanceRegularResult check_distance_regular(const Graph& g, const AllPairsDistances& all_pairs) {
  const int n = g.vertex_count();
  int diameter = 0;
  for (const auto& row : all_pairs)
    for (int d : row) diameter = std::max(diameter, d);
  const int range = diameter + 1;

  // signature(v, w)[i][j] = |S_i(v) cap S_j(w)|; distance-regularity means
  // the signature depends on d(v, w) only.
  std::vector<std::vector<std::vector<long>>> seen(static_cast<std::size_t>(range));
  std::vector<std::pair<Vertex, Vertex>> first_pair(static_cast<std::size_t>(range), {-1, -1});

  std::vector<std::vector<long>> sig(static_cast<std::size_t>(range),
                                     std::vector<long>(static_cast<std::size_t>(range)));
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w = 0; w < n; ++w) {
      int k = all_pairs[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
      for (auto& row : sig) std::fill(row.begin(), row.end(), 0);
      for (Vertex u = 0; u < n; ++u)
        ++sig[static_cast<std::size_t>(all_pairs[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])]
             [static_cast<std::size_t>(all_pairs[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)])];
      auto& stored = seen[static_cast<std::size_t>(k)];
      if (stored.empty()) {
        stored = sig;
        first_pair[static_cast<std::size_t>(k)] = {v, w};
        continue;
      }
      if (stored == sig) continue;
      for (int i = 0; i < range; ++i)
        for (int j = 0; j < range; ++j)
          if (stored[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
              sig[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
            auto [v1, w1] = first_pair[static_cast<std::size_t>(k)];
            return {false,
                    DistanceRegularWitness{
                        i, j, k, v1, w1, v, w,
                        stored[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                        sig[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]}};
          }
    }
  return {true, std::nullopt};
}

StructureConstants build_structure_constants(const PointedGraph& pg,
                                             const DistanceProfile& profile) {
  const int n = pg.graph.vertex_count();
  const int range = profile.index_count;
  auto cnt = intersection_counts(profile, pg.base, range);

  // |S_j(v)| over the full distance range of each vertex.
  std::vector<std::vector<int>> sizes(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(range), 0));
  for (Vertex v = 0; v < n; ++v)
    for (int d : profile.all_pairs[static_cast<std::size_t>(v)])
      if (d < range) ++sizes[v][static_cast<std::size_t>(d)];

  StructureConstants constants(range);
  for (int i = 0; i < range; ++i) {
    const auto& sphere = profile.spheres[static_cast<std::size_t>(i)];
    Rat inv_mu_i = make_rat(1, static_cast<long>(sphere.size()));
    for (int j = 0; j < range; ++j) {
      for (Vertex v : sphere) {
        int sphere_size = sizes[v][static_cast<std::size_t>(j)];
        if (sphere_size == 0) throw SphereEmptyError(v, j);
        Rat inv_size = make_rat(1, sphere_size);
        for (int k = 0; k < range; ++k) {
          long c = cnt[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)]
                      [static_cast<std::size_t>(k)];
          if (c != 0) constants.at(i, j, k) += Rat(static_cast<long>(c)) * inv_size;
        }
      }
      for (int k = 0; k < range; ++k) constants.at(i, j, k) *= inv_mu_i;
    }
  }
  return constants;
}

StructureConstants shortcut_constants(const DistanceProfile& profile,
                                      const IntersectionTables& tables) {
  const int range = profile.index_count;
  if (tables.size() != range)
    throw std::invalid_argument("intersection tables do not match the index set");
  StructureConstants constants(range);
  for (int i = 0; i < range; ++i)
    for (int j = 0; j < range; ++j)
      for (int k = 0; k < range; ++k) {
        // p_{i,j}^k = mu_k |S_j(z) cap S_i(v0)| / (mu_i mu_j), z in S_k(v0)
        long numerator = profile.sphere_sizes[static_cast<std::size_t>(k)] * tables.at(k, j, i);
        long denominator = static_cast<long>(profile.sphere_sizes[static_cast<std::size_t>(i)]) *
                           profile.sphere_sizes[static_cast<std::size_t>(j)];
        constants.at(i, j, k) = make_rat(numerator, denominator);
      }
  return constants;
}

CommutativityResult check_commutative(const StructureConstants& constants) {
  const int size = constants.size();
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      for (int k = 0; k < size; ++k)
        if (constants.at(i, j, k) != constants.at(j, i, k))
          return {false, CommutativityWitness{i, j, k, constants.at(i, j, k), constants.at(j, i, k)}};
  return {true, std::nullopt};
}

AssociativityResult check_associative(const StructureConstants& constants) {
  const int size = constants.size();
  for (int i = 0; i < size; ++i)
    for (int l = 0; l < size; ++l)
      for (int j = 0; j < size; ++j)
        for (int m = 0; m < size; ++m) {
          Rat lhs, rhs;
          for (int h = 0; h < size; ++h) {
            lhs += constants.at(i, l, h) * constants.at(h, j, m);
            rhs += constants.at(l, j, h) * constants.at(i, h, m);
          }
          if (lhs != rhs) return {false, AssociativityWitness{i, l, j, m, lhs, rhs}};
        }
  return {true, std::nullopt};
}

AxiomResult check_hypergroup_axioms(const StructureConstants& constants) {
  const int size = constants.size();
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      for (int k = 0; k < size; ++k)
        if (constants.at(i, j, k) < 0)
          return {false, AxiomWitness{AxiomViolation::NegativeCoefficient, i, j, k,
                                      constants.at(i, j, k)}};
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      Rat sum;
      for (int k = 0; k < size; ++k) sum += constants.at(i, j, k);
      if (sum != 1) return {false, AxiomWitness{AxiomViolation::RowNotNormalized, i, j, -1, sum}};
    }
  for (int j = 0; j < size; ++j)
    for (int k = 0; k < size; ++k) {
      Rat expected = (j == k) ? Rat(1) : Rat(0);
      if (constants.at(0, j, k) != expected)
        return {false, AxiomWitness{AxiomViolation::UnitLaw, 0, j, k, constants.at(0, j, k)}};
      if (constants.at(j, 0, k) != expected)
        return {false, AxiomWitness{AxiomViolation::UnitLaw, j, 0, k, constants.at(j, 0, k)}};
    }
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      bool nonzero = constants.at(i, j, 0) != 0;
      if (nonzero != (i == j))
        return {false, AxiomWitness{AxiomViolation::SupportAtZero, i, j, 0, constants.at(i, j, 0)}};
    }
  return {true, std::nullopt};
}

std::string classification_name(Classification c) {
  switch (c) {
    case Classification::NotSelfCentered: return "not-self-centered";
    case Classification::SelfCenteredOnly: return "self-centered-only";
    case Classification::S1S2: return "s1s2";
    case Classification::DistanceRegular: return "distance-regular";
  }
  return "unknown";
}

NotSelfCenteredError::NotSelfCenteredError(Vertex v_, Vertex w_, int ev, int ew)
    : std::runtime_error("graph is not self-centered: ecc(" + std::to_string(v_) + ") = " +
                         std::to_string(ev) + " but ecc(" + std::to_string(w_) + ") = " +
                         std::to_string(ew)),
      v(v_),
      w(w_),
      ecc_v(ev),
      ecc_w(ew) {}

Verdict decide_productive(const PointedGraph& pg) {
  DistanceProfile profile = compute_distance_profile(pg);
  auto centered = check_self_centered(pg.graph, profile.all_pairs);
  if (!centered.self_centered)
    throw NotSelfCenteredError(centered.v, centered.w, centered.ecc_v, centered.ecc_w);

  Verdict verdict;
  verdict.base = pg.base;
  verdict.vertex_count = pg.graph.vertex_count();
  verdict.edge_count = pg.graph.edge_count();
  verdict.diameter = profile.diameter;
  verdict.mu.assign(profile.sphere_sizes.begin(),
                    profile.sphere_sizes.begin() + profile.index_count);

  verdict.symmetry.s1 = check_s1(pg, profile);
  verdict.symmetry.s2 = check_s2(pg, profile);
  verdict.symmetry.distance_regular = check_distance_regular(pg.graph, profile.all_pairs);
  const bool s1s2 = verdict.symmetry.s1.holds && verdict.symmetry.s2.holds;
  if (verdict.symmetry.distance_regular.holds && !s1s2)
    throw std::logic_error("distance-regular graph failing (S1)+(S2): implementation bug");

  verdict.constants = build_structure_constants(pg, profile);
  auto commutativity = check_commutative(verdict.constants);
  auto associativity = check_associative(verdict.constants);
  auto axioms = check_hypergroup_axioms(verdict.constants);
  if (!axioms.holds)
    throw std::logic_error("graph-derived table violates the pre-hypergroup axioms: implementation bug");

  verdict.methods.brute_force = commutativity.holds && associativity.holds;
  verdict.commutativity_witness = commutativity.witness;
  verdict.associativity_witness = associativity.witness;

  auto family = build_adjacency_family(profile);
  auto aggregation = build_aggregation_map(profile);
  verdict.methods.adjacency_commutation = check_adjacency_commutation(family).ok;

  if (s1s2) {
    bool daa = check_daa_commutation(family, aggregation).ok;
    verdict.methods.daa_criterion = daa;
    // The brute-force verdict is ground truth; both matrix statements are
    // theorems under test and may not disagree with it.
    if (daa != verdict.methods.brute_force)
      throw std::logic_error("D A_k A_l criterion disagrees with brute force under (S1)+(S2)");
    if (verdict.methods.adjacency_commutation && !verdict.methods.brute_force)
      throw std::logic_error("A^(k) commutation without productivity under (S1)+(S2)");
  }

  verdict.productive = verdict.methods.brute_force;
  verdict.classification = verdict.symmetry.distance_regular.holds ? Classification::DistanceRegular
                           : s1s2                                  ? Classification::S1S2
                                                                   : Classification::SelfCenteredOnly;
  return verdict;
}

Diam2Structure diam2_structure(long mu1, long mu2, long m) {
  if (mu1 < 1 || mu2 < 1) throw std::invalid_argument("mu1 and mu2 must be positive");
  if (m < 0 || m > mu1 - 1) throw std::invalid_argument("m must satisfy 0 <= m <= mu1 - 1");

  Rat r_mu1(static_cast<long>(mu1)), r_mu2(static_cast<long>(mu2)), r_m(static_cast<long>(m));
  Rat rest = r_mu1 - 1 - r_m;  // mu1 - 1 - m

  StructureConstants q(3);
  for (int k = 0; k < 3; ++k) {
    q.at(0, k, k) = 1;
    q.at(k, 0, k) = 1;
  }
  q.at(1, 1, 0) = make_rat(1, mu1);
  q.at(1, 1, 1) = r_m / r_mu1;
  q.at(1, 1, 2) = rest / r_mu1;
  q.at(1, 2, 1) = rest / r_mu2;
  q.at(1, 2, 2) = (r_mu2 - rest) / r_mu2;
  q.at(2, 1, 1) = q.at(1, 2, 1);
  q.at(2, 1, 2) = q.at(1, 2, 2);
  q.at(2, 2, 0) = make_rat(1, mu2);
  q.at(2, 2, 1) = r_mu1 / r_mu2 - r_mu1 * rest / (r_mu2 * r_mu2);
  q.at(2, 2, 2) = 1 - q.at(2, 2, 0) - q.at(2, 2, 1);

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rat sum;
      for (int k = 0; k < 3; ++k) {
        const Rat& value = q.at(i, j, k);
        if (value < 0 || value > 1)
          throw std::invalid_argument("(mu1, mu2, m) = (" + std::to_string(mu1) + ", " +
                                      std::to_string(mu2) + ", " + std::to_string(m) +
                                      ") yields a coefficient outside [0, 1]");
        sum += value;
      }
      if (sum != 1) throw std::logic_error("diameter-2 row does not sum to 1: implementation bug");
    }

  return Diam2Structure{mu1, mu2, m, std::move(q)};
}

WildbergerParams WildbergerParams::from_diam2(const Diam2Structure& d2) {
  WildbergerParams params;
  params.omega1 = Rat(static_cast<long>(d2.mu1));
  params.omega2 = Rat(static_cast<long>(d2.mu2));
  params.alpha1 = d2.constants.at(1, 1, 1);
  params.beta1 = d2.constants.at(1, 1, 2);
  params.beta2 = d2.constants.at(2, 2, 1);
  params.alpha2 = d2.constants.at(2, 2, 2);
  params.gamma1 = d2.constants.at(1, 2, 1);
  params.gamma2 = d2.constants.at(1, 2, 2);
  return params;
}

StructureConstants WildbergerParams::to_constants() const {
  if (omega1 < 1 || omega2 < 1)
    throw std::invalid_argument("omega weights must be at least 1");
  for (const Rat* coeff : {&alpha1, &alpha2, &beta1, &beta2, &gamma1, &gamma2})
    if (*coeff < 0) throw std::invalid_argument("order-3 coefficients must be non-negative");
  if (1 / omega1 + alpha1 + beta1 != 1 || 1 / omega2 + beta2 + alpha2 != 1 || gamma1 + gamma2 != 1)
    throw std::invalid_argument("order-3 rows must sum to 1");

  StructureConstants q(3);
  for (int k = 0; k < 3; ++k) {
    q.at(0, k, k) = 1;
    q.at(k, 0, k) = 1;
  }
  q.at(1, 1, 0) = 1 / omega1;
  q.at(1, 1, 1) = alpha1;
  q.at(1, 1, 2) = beta1;
  q.at(2, 2, 0) = 1 / omega2;
  q.at(2, 2, 1) = beta2;
  q.at(2, 2, 2) = alpha2;
  q.at(1, 2, 1) = q.at(2, 1, 1) = gamma1;
  q.at(1, 2, 2) = q.at(2, 1, 2) = gamma2;
  return q;
}

bool check_wildberger_relations(const WildbergerParams& params) {
  return params.beta1 * params.omega1 == params.gamma1 * params.omega2 &&
         params.beta2 * params.omega2 == params.gamma2 * params.omega1;
}

namespace {

void validate_sequence(std::span<const int> seq, int range) {
  if (seq.empty()) throw std::invalid_argument("jump sequence is empty");
  for (int i : seq)
    if (i < 0 || i >= range)
      throw std::invalid_argument("jump index " + std::to_string(i) +
                                  " outside I(Gamma, v0) = {0.." + std::to_string(range - 1) + "}");
}

void enumerate_tuples(const SphereTable& spheres, const std::vector<int>& dist_from_base,
                      std::span<const int> seq, std::size_t depth, Vertex v, const Rat& weight,
                      std::vector<Rat>& acc) {
  if (depth == seq.size()) {
    acc[static_cast<std::size_t>(dist_from_base[static_cast<std::size_t>(v)])] += weight;
    return;
  }
  int jump = seq[depth];
  const auto& sphere = spheres.lists[static_cast<std::size_t>(v)][static_cast<std::size_t>(jump)];
  if (sphere.empty()) throw SphereEmptyError(v, jump);
  Rat share = weight / Rat(static_cast<long>(sphere.size()));
  for (Vertex w : sphere) enumerate_tuples(spheres, dist_from_base, seq, depth + 1, w, share, acc);
}

}  // namespace

std::vector<Rat> convolve_sequence(const StructureConstants& constants, std::span<const int> seq) {
  validate_sequence(seq, constants.size());
  const int size = constants.size();
  std::vector<Rat> coeff(static_cast<std::size_t>(size));
  coeff[static_cast<std::size_t>(seq[0])] = 1;
  for (std::size_t step = 1; step < seq.size(); ++step) {
    int j = seq[step];
    std::vector<Rat> next(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
      if (coeff[static_cast<std::size_t>(i)] == 0) continue;
      for (int k = 0; k < size; ++k)
        next[static_cast<std::size_t>(k)] += coeff[static_cast<std::size_t>(i)] * constants.at(i, j, k);
    }
    coeff = std::move(next);
  }
  return coeff;
}

std::vector<Rat> enumerate_walk_distribution(const PointedGraph& pg,
                                             const DistanceProfile& profile,
                                             std::span<const int> seq,
                                             const EnumerationCaps& caps) {
  validate_sequence(seq, profile.index_count);
  if (static_cast<int>(seq.size()) > caps.max_steps)
    throw EnumerationLimitError("sequence length " + std::to_string(seq.size()) +
                                " exceeds the enumeration cap of " +
                                std::to_string(caps.max_steps) + " steps");

  auto spheres = build_sphere_table(pg.graph, profile.all_pairs);
  long long budget_estimate = 1;
  for (int jump : seq) {
    long widest = 0;
    for (const auto& sizes : spheres.sizes)
      widest = std::max(widest, static_cast<long>(sizes[static_cast<std::size_t>(jump)]));
    if (widest == 0) widest = 1;
    if (budget_estimate > caps.tuple_budget / widest)
      throw EnumerationLimitError("tuple enumeration would exceed the budget of " +
                                  std::to_string(caps.tuple_budget));
    budget_estimate *= widest;
  }

  std::vector<Rat> acc(static_cast<std::size_t>(profile.index_count));
  enumerate_tuples(spheres, profile.dist_from_base, seq, 0, pg.base, Rat(1), acc);
  return acc;
}

std::vector<Rat> transition_distribution(const TransitionFamily& transitions,
                                         std::span<const int> seq) {
  const int size = static_cast<int>(transitions.matrices.size());
  validate_sequence(seq, size);
  std::vector<Rat> row(static_cast<std::size_t>(size));
  row[0] = 1;
  for (int jump : seq) {
    const Mat<Rat>& p = transitions.matrices[static_cast<std::size_t>(jump)];
    std::vector<Rat> next(static_cast<std::size_t>(size));
    for (int r = 0; r < size; ++r) {
      if (row[static_cast<std::size_t>(r)] == 0) continue;
      for (int c = 0; c < size; ++c)
        next[static_cast<std::size_t>(c)] += row[static_cast<std::size_t>(r)] * p(r, c);
    }
    row = std::move(next);
  }
  return row;
}

MultiStepResult multi_step_coefficients(const PointedGraph& pg, const DistanceProfile& profile,
                                        const StructureConstants& constants,
                                        std::span<const int> seq, const EnumerationCaps& caps) {
  MultiStepResult result;
  result.convolution = convolve_sequence(constants, seq);
  result.enumeration = enumerate_walk_distribution(pg, profile, seq, caps);
  bool s1s2 = check_s1(pg, profile).holds && check_s2(pg, profile).holds;
  if (s1s2 && result.convolution != result.enumeration)
    throw std::logic_error("convolution and nested-sum enumeration disagree under (S1)+(S2)");
  return result;
}

}  // namespace hgw
