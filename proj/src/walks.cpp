#include "hgw/walks.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

namespace hgw {

namespace {

std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Rejection-free bounded sampling: high 64 bits of x * bound.
std::size_t bounded_index(std::uint64_t x, std::size_t bound) {
  return static_cast<std::size_t>((static_cast<unsigned __int128>(x) * bound) >> 64);
}

std::vector<std::uint64_t> run_worker(const SphereTable& spheres,
                                      const std::vector<int>& dist_from_base, Vertex base,
                                      const std::vector<int>& sequence, std::uint64_t samples,
                                      std::uint64_t seed, int index_count) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(index_count), 0);
  for (std::uint64_t s = 0; s < samples; ++s) {
    Vertex v = base;
    for (int jump : sequence) {
      const auto& sphere = spheres.lists[static_cast<std::size_t>(v)][static_cast<std::size_t>(jump)];
      if (sphere.empty()) throw SphereEmptyError(v, jump);
      v = sphere[bounded_index(rng(), sphere.size())];
    }
    ++counts[static_cast<std::size_t>(dist_from_base[static_cast<std::size_t>(v)])];
  }
  return counts;
}

}  // namespace

EmpiricalDistribution simulate(const PointedGraph& pg, const DistanceProfile& profile,
                               const WalkSpec& spec) {
  if (spec.samples < 1) throw std::invalid_argument("sample count must be at least 1");
  if (spec.workers < 1) throw std::invalid_argument("worker count must be at least 1");
  if (spec.sequence.empty()) throw std::invalid_argument("jump sequence is empty");
  for (int jump : spec.sequence)
    if (jump < 0 || jump >= profile.index_count)
      throw std::invalid_argument("jump index " + std::to_string(jump) +
                                  " outside I(Gamma, v0)");

  auto spheres = build_sphere_table(pg.graph, profile.all_pairs);

  std::uint64_t seed_state = spec.seed;
  std::vector<std::uint64_t> worker_seeds(static_cast<std::size_t>(spec.workers));
  for (auto& s : worker_seeds) s = splitmix64_next(seed_state);

  std::vector<std::uint64_t> worker_samples(static_cast<std::size_t>(spec.workers),
                                            spec.samples / static_cast<std::uint64_t>(spec.workers));
  for (std::uint64_t w = 0; w < spec.samples % static_cast<std::uint64_t>(spec.workers); ++w)
    ++worker_samples[static_cast<std::size_t>(w)];

  std::vector<std::vector<std::uint64_t>> partials(static_cast<std::size_t>(spec.workers));
  if (spec.workers == 1) {
    partials[0] = run_worker(spheres, profile.dist_from_base, pg.base, spec.sequence,
                             worker_samples[0], worker_seeds[0], profile.index_count);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(spec.workers));
    pool.reserve(static_cast<std::size_t>(spec.workers));
    for (int w = 0; w < spec.workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          partials[static_cast<std::size_t>(w)] =
              run_worker(spheres, profile.dist_from_base, pg.base, spec.sequence,
                         worker_samples[static_cast<std::size_t>(w)],
                         worker_seeds[static_cast<std::size_t>(w)], profile.index_count);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  EmpiricalDistribution emp;
  emp.samples = spec.samples;
  emp.workers = spec.workers;
  emp.counts.assign(static_cast<std::size_t>(profile.index_count), 0);
  for (const auto& partial : partials)
    for (std::size_t k = 0; k < partial.size(); ++k) emp.counts[k] += partial[k];
  emp.estimates.resize(emp.counts.size());
  for (std::size_t k = 0; k < emp.counts.size(); ++k)
    emp.estimates[k] = static_cast<double>(emp.counts[k]) / static_cast<double>(spec.samples);
  return emp;
}

void attach_reference(EmpiricalDistribution& emp, std::vector<Rat> exact) {
  if (exact.size() != emp.counts.size())
    throw std::invalid_argument("reference vector has wrong length");
  emp.exact_reference = std::move(exact);
  emp.std_error.resize(emp.counts.size());
  for (std::size_t k = 0; k < emp.counts.size(); ++k) {
    double p = emp.exact_reference[k].get_d();
    emp.std_error[k] = std::sqrt(static_cast<double>(emp.samples) * p * (1.0 - p));
  }
}

AgreementReport compare(const EmpiricalDistribution& emp, double z_threshold) {
  if (emp.exact_reference.empty())
    throw std::invalid_argument("no exact reference attached to the distribution");
  AgreementReport report;
  report.threshold = z_threshold;
  report.z_scores.resize(emp.counts.size());
  for (std::size_t k = 0; k < emp.counts.size(); ++k) {
    const Rat& p = emp.exact_reference[k];
    double expected = p.get_d() * static_cast<double>(emp.samples);
    double z;
    if (p == 0 || p == 1) {
      // degenerate binomial: any deviation is impossible under the model
      z = (static_cast<double>(emp.counts[k]) == expected)
              ? 0.0
              : std::numeric_limits<double>::infinity();
    } else {
      z = (static_cast<double>(emp.counts[k]) - expected) / emp.std_error[k];
    }
    report.z_scores[k] = z;
    if (std::abs(z) > report.max_abs_z || report.worst_index < 0) {
      report.max_abs_z = std::abs(z);
      report.worst_index = static_cast<int>(k);
    }
  }
  report.pass = report.max_abs_z <= z_threshold;
  return report;
}

double total_variation(const EmpiricalDistribution& emp) {
  if (emp.exact_reference.empty())
    throw std::invalid_argument("no exact reference attached to the distribution");
  double tv = 0.0;
  for (std::size_t k = 0; k < emp.counts.size(); ++k)
    tv += std::abs(emp.estimates[k] - emp.exact_reference[k].get_d());
  return tv / 2.0;
}

}  // namespace hgw
