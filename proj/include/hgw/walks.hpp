#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hgw/graph.hpp"
#include "hgw/rational.hpp"

namespace hgw {

/// Monte Carlo run description. Samples are split across workers
/// (worker w gets the w-th seed of a splitmix64 stream started at the
/// master seed), so counts are deterministic given (seed, workers).
struct WalkSpec {
  std::vector<int> sequence;
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  int workers = 1;
};

struct EmpiricalDistribution {
  std::vector<std::uint64_t> counts;  // per k in I(Gamma, v0)
  std::uint64_t samples = 0;
  std::vector<double> estimates;
  std::vector<Rat> exact_reference;  // empty until attach_reference
  std::vector<double> std_error;     // binomial, from the exact reference
  std::string rng_name = "mt19937_64";
  std::string seed_rule = "splitmix64 stream from master seed";
  int workers = 1;
};

/// Runs spec.samples walks: start at the base point, at step j jump to a
/// uniformly random vertex of S_{i_j}(current), tally d(v0, final).
/// Throws SphereEmptyError when a needed sphere is empty.
EmpiricalDistribution simulate(const PointedGraph& pg, const DistanceProfile& profile,
                               const WalkSpec& spec);

/// Stores the exact probability vector and fills per-component binomial
/// standard errors.
void attach_reference(EmpiricalDistribution& emp, std::vector<Rat> exact);

struct AgreementReport {
  std::vector<double> z_scores;
  double max_abs_z = 0.0;
  int worst_index = -1;
  double threshold = 4.0;
  bool pass = false;
};

/// Per-component z-score of the counts against the exact reference.
/// Components with exact probability 0 or 1 score 0 on exact agreement
/// and fail outright otherwise.
AgreementReport compare(const EmpiricalDistribution& emp, double z_threshold = 4.0);

/// Total variation distance between the empirical estimate and the exact
/// reference.
double total_variation(const EmpiricalDistribution& emp);

}  // namespace hgw
