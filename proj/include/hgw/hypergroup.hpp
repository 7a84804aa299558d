#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgw/graph.hpp"
#include "hgw/matrices.hpp"
#include "hgw/rational.hpp"
#include "hgw/structure_constants.hpp"

namespace hgw {

// ---- symmetry conditions ----

struct S1Witness {
  int i = -1;
  Vertex v = -1;
  Vertex w = -1;
  int size_v = 0;
  int size_w = 0;

  friend bool operator==(const S1Witness&, const S1Witness&) = default;
};

struct S1Result {
  bool holds = false;
  std::optional<S1Witness> witness;
};

/// m_{i,j}^k = |S_j(rep_i) cap S_k(v0)| where rep_i is the smallest-index
/// vertex of S_i(v0). Under condition (S2) the representative choice does
/// not matter; a property test asserts exactly that.
class IntersectionTables {
 public:
  IntersectionTables() = default;
  explicit IntersectionTables(int size)
      : size_(size),
        m_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size) *
           static_cast<std::size_t>(size)) {}

  int size() const { return size_; }
  long& at(int i, int j, int k) { return m_[idx(i, j, k)]; }
  long at(int i, int j, int k) const { return m_[idx(i, j, k)]; }

  friend bool operator==(const IntersectionTables&, const IntersectionTables&) = default;

 private:
  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * static_cast<std::size_t>(size_) +
            static_cast<std::size_t>(j)) *
               static_cast<std::size_t>(size_) +
           static_cast<std::size_t>(k);
  }

  int size_ = 0;
  std::vector<long> m_;
};

struct S2Witness {
  int i = -1;
  int j = -1;
  int k = -1;
  Vertex v = -1;
  Vertex w = -1;
  long count_v = 0;
  long count_w = 0;

  friend bool operator==(const S2Witness&, const S2Witness&) = default;
};

struct S2Result {
  bool holds = false;
  std::optional<S2Witness> witness;
  IntersectionTables tables;  // filled when holds
};

struct DistanceRegularWitness {
  int i = -1;
  int j = -1;
  int k = -1;
  Vertex v1 = -1, w1 = -1;  // first pair at distance k
  Vertex v2 = -1, w2 = -1;  // pair disagreeing with it
  long count1 = 0;
  long count2 = 0;

  friend bool operator==(const DistanceRegularWitness&, const DistanceRegularWitness&) = default;
};

struct DistanceRegularResult {
  bool holds = false;
  std::optional<DistanceRegularWitness> witness;
};

/// (S1): |S_i(v)| is independent of v for every i in I(Gamma, v0).
S1Result check_s1(const PointedGraph& pg, const DistanceProfile& profile);

/// (S2): |S_i(v) cap S_j(v0)| is constant over v in S_k(v0) for all i, j, k.
S2Result check_s2(const PointedGraph& pg, const DistanceProfile& profile);

/// Distance-regularity: |S_i(v) cap S_j(w)| depends only on (i, j, d(v, w)).
DistanceRegularResult check_distance_regular(const Graph& g, const AllPairsDistances& all_pairs);

struct SymmetryReport {
  S1Result s1;
  S2Result s2;
  DistanceRegularResult distance_regular;
};

// ---- structure constants ----

/// p_{i,j}^k computed literally from the defining average over S_i(v0),
/// with no (S1)/(S2) shortcut. Throws SphereEmptyError when some needed
/// S_j(v) is empty (non-self-centered input).
StructureConstants build_structure_constants(const PointedGraph& pg,
                                             const DistanceProfile& profile);

/// p_{i,j}^k = mu_k |S_j(z) cap S_i(v0)| / (mu_i mu_j) for any z in
/// S_k(v0). Valid only under (S1) + (S2).
StructureConstants shortcut_constants(const DistanceProfile& profile,
                                      const IntersectionTables& tables);

struct CommutativityWitness {
  int i = -1, j = -1, k = -1;
  Rat p_ij, p_ji;

  friend bool operator==(const CommutativityWitness&, const CommutativityWitness&) = default;
};

struct CommutativityResult {
  bool holds = false;
  std::optional<CommutativityWitness> witness;
};

CommutativityResult check_commutative(const StructureConstants& constants);

struct AssociativityWitness {
  int i = -1, l = -1, j = -1, m = -1;
  Rat lhs;  // coefficient of x_m in (x_i x_l) x_j
  Rat rhs;  // coefficient of x_m in x_i (x_l x_j)

  friend bool operator==(const AssociativityWitness&, const AssociativityWitness&) = default;
};

struct AssociativityResult {
  bool holds = false;
  std::optional<AssociativityWitness> witness;
};

/// Brute force: expands both parenthesizations of every triple.
AssociativityResult check_associative(const StructureConstants& constants);

enum class AxiomViolation {
  NegativeCoefficient,
  RowNotNormalized,
  UnitLaw,
  SupportAtZero,  // q_{i,j}^0 != 0 must hold exactly when i == j
};

struct AxiomWitness {
  AxiomViolation kind{};
  int i = -1, j = -1, k = -1;
  Rat value;

  friend bool operator==(const AxiomWitness&, const AxiomWitness&) = default;
};

struct AxiomResult {
  bool holds = false;
  std::optional<AxiomWitness> witness;
};

/// Non-negativity, row normalization, the unit laws for x_0, and the
/// hermitian support condition q_{i,j}^0 != 0 iff i = j.
AxiomResult check_hypergroup_axioms(const StructureConstants& constants);

// ---- productivity decision ----

enum class Classification { NotSelfCentered, SelfCenteredOnly, S1S2, DistanceRegular };

std::string classification_name(Classification c);

struct MethodResults {
  bool brute_force = false;
  std::optional<bool> daa_criterion;  // unset when (S1)+(S2) fail
  bool adjacency_commutation = false;

  friend bool operator==(const MethodResults&, const MethodResults&) = default;
};

struct Verdict {
  Classification classification = Classification::SelfCenteredOnly;
  bool productive = false;
  MethodResults methods;
  std::optional<CommutativityWitness> commutativity_witness;
  std::optional<AssociativityWitness> associativity_witness;
  SymmetryReport symmetry;
  StructureConstants constants;
  // report context
  std::vector<int> mu;
  Vertex base = 0;
  int vertex_count = 0;
  int edge_count = 0;
  int diameter = 0;
};

class NotSelfCenteredError : public std::runtime_error {
 public:
  NotSelfCenteredError(Vertex v, Vertex w, int ecc_v, int ecc_w);
  Vertex v;
  Vertex w;
  int ecc_v;
  int ecc_w;
};

/// Full pipeline: self-centeredness, (S1), (S2), distance-regularity,
/// structure constants, brute-force commutativity/associativity/axioms,
/// and, under (S1)+(S2), the D A_k A_l criterion plus the A^(k)
/// commutation check. The brute-force verdict is ground truth; a matrix
/// criterion disagreeing with it under (S1)+(S2) raises std::logic_error,
/// since that would falsify the implementation.
Verdict decide_productive(const PointedGraph& pg);

// ---- diameter-2 closed form and order-3 structures ----

/// The nine two-jump constants of a diameter-2 instance with parameters
/// (mu_1, mu_2, m), m = |S_1(v_1) cap S_1(v_0)|, as a full order-3 table.
struct Diam2Structure {
  long mu1 = 0;
  long mu2 = 0;
  long m = 0;
  StructureConstants constants;
};

/// Requires mu1, mu2 >= 1 and 0 <= m <= mu1 - 1, and rejects parameter
/// triples whose derived constants leave [0, 1] (not graph-realizable).
Diam2Structure diam2_structure(long mu1, long mu2, long m);

/// Order-3 commutative structure
///   c1 c1 = (1/omega1) c0 + alpha1 c1 + beta1 c2
///   c2 c2 = (1/omega2) c0 + beta2 c1 + alpha2 c2
///   c1 c2 = c2 c1 = gamma1 c1 + gamma2 c2
struct WildbergerParams {
  Rat omega1, omega2;
  Rat alpha1, alpha2;
  Rat beta1, beta2;
  Rat gamma1, gamma2;

  static WildbergerParams from_diam2(const Diam2Structure& d2);

  /// Materializes the order-3 table; throws std::invalid_argument unless
  /// the parameters encode a valid commutative pre-hypergroup.
  StructureConstants to_constants() const;
};

/// beta1 * omega1 == gamma1 * omega2 and beta2 * omega2 == gamma2 * omega1.
bool check_wildberger_relations(const WildbergerParams& params);

// ---- multi-step coefficients ----

struct EnumerationCaps {
  int max_steps = 5;
  long long tuple_budget = 100'000'000;
};

class EnumerationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Left-nested convolution ((x_{i1} x_{i2}) ... ) x_{im} as a coefficient
/// vector over I.
std::vector<Rat> convolve_sequence(const StructureConstants& constants, std::span<const int> seq);

/// Exact nested-sum enumeration over vertex tuples: walk distribution
/// after jumps of sizes seq, each step uniform on the sphere around the
/// current vertex. Refuses sequences beyond the caps.
std::vector<Rat> enumerate_walk_distribution(const PointedGraph& pg,
                                             const DistanceProfile& profile,
                                             std::span<const int> seq,
                                             const EnumerationCaps& caps = {});

/// Row v0 of P_{i1} P_{i2} ... P_{im}: the distance distribution the
/// transition matrices assign to the jump sequence.
std::vector<Rat> transition_distribution(const TransitionFamily& transitions,
                                         std::span<const int> seq);

struct MultiStepResult {
  std::vector<Rat> convolution;
  std::vector<Rat> enumeration;
};

/// Computes both routes; when (S1) and (S2) hold they must agree and a
/// mismatch raises std::logic_error.
MultiStepResult multi_step_coefficients(const PointedGraph& pg, const DistanceProfile& profile,
                                        const StructureConstants& constants,
                                        std::span<const int> seq,
                                        const EnumerationCaps& caps = {});

}  // namespace hgw
