#include <doctest.h>

#include "corpus.hpp"
#include "hgw/generators.hpp"
#include "hgw/hypergroup.hpp"
#include "hgw/walks.hpp"

using namespace hgw;

namespace {

EmpiricalDistribution run(const PointedGraph& pg, std::vector<int> seq, std::uint64_t samples,
                          std::uint64_t seed, int workers = 1) {
  auto profile = compute_distance_profile(pg);
  WalkSpec spec;
  spec.sequence = std::move(seq);
  spec.samples = samples;
  spec.seed = seed;
  spec.workers = workers;
  auto emp = simulate(pg, profile, spec);
  auto constants = build_structure_constants(pg, profile);
  attach_reference(emp, convolve_sequence(constants, spec.sequence));
  return emp;
}

}  // namespace

TEST_CASE("simulation is deterministic given the seed") {
  auto pg = PointedGraph(petersen(), 0);
  auto first = run(pg, {1, 2, 1}, 20000, 99);
  auto second = run(pg, {1, 2, 1}, 20000, 99);
  CHECK(first.counts == second.counts);

  auto other_seed = run(pg, {1, 2, 1}, 20000, 100);
  CHECK(first.counts != other_seed.counts);
}

TEST_CASE("sequence (0) stays at the base point") {
  auto emp = run(PointedGraph(cycle(6), 0), {0}, 500, 7);
  CHECK(emp.counts[0] == 500);
  for (std::size_t k = 1; k < emp.counts.size(); ++k) CHECK(emp.counts[k] == 0);
}

TEST_CASE("frozen regression: 4-cycle, sequence (1,1), seed 42") {
  auto emp = run(PointedGraph(cycle(4), 0), {1, 1}, 100000, 42);
  CHECK(emp.counts == std::vector<std::uint64_t>{50169, 0, 49831});
  CHECK(emp.exact_reference == std::vector<Rat>{make_rat(1, 2), Rat(0), make_rat(1, 2)});
  auto report = compare(emp);
  CHECK(report.pass);
  CHECK(report.z_scores[1] == 0.0);  // exact probability 0, count 0
}

TEST_CASE("fig2 sequence (1,2) agrees with the exact coefficients") {
  auto emp = run(figure2_graph(), {1, 2}, 100000, 7);
  CHECK(emp.exact_reference ==
        std::vector<Rat>{Rat(0), make_rat(1, 2), make_rat(1, 3), make_rat(1, 6)});
  CHECK(compare(emp).pass);
}

TEST_CASE("a wrong reference is detected") {
  auto emp = run(PointedGraph(cycle(4), 0), {1, 1}, 100000, 42);
  // swap two components of the reference
  std::vector<Rat> wrong{Rat(0), make_rat(1, 2), make_rat(1, 2)};
  attach_reference(emp, wrong);
  auto report = compare(emp);
  CHECK_FALSE(report.pass);
  CHECK(report.worst_index == 0);  // 50169 counts where probability is claimed 0
}

TEST_CASE("total variation shrinks from 1e3 to 1e5 samples") {
  struct Fixture {
    PointedGraph pg;
    std::vector<int> seq;
    std::uint64_t seed;
  };
  std::vector<Fixture> fixtures = {
      {figure2_graph(), {1, 2}, 5},
      {PointedGraph(petersen(), 0), {1, 1}, 12},
      {PointedGraph(cycle(7), 0), {1, 1, 1}, 13},
      {PointedGraph(platonic("dodecahedron"), 0), {1, 2}, 14},
  };
  for (std::size_t f = 0; f < fixtures.size(); ++f) {
    CAPTURE(f);
    auto small = run(fixtures[f].pg, fixtures[f].seq, 1000, fixtures[f].seed);
    auto large = run(fixtures[f].pg, fixtures[f].seq, 100000, fixtures[f].seed);
    CHECK(total_variation(large) < total_variation(small));
  }
}

TEST_CASE("worker splitting is deterministic and sums to the sample count") {
  auto pg = PointedGraph(cycle(4), 0);
  auto two_a = run(pg, {1, 1}, 100000, 42, 2);
  auto two_b = run(pg, {1, 1}, 100000, 42, 2);
  CHECK(two_a.counts == two_b.counts);
  CHECK(two_a.counts == std::vector<std::uint64_t>{50132, 0, 49868});

  std::uint64_t total = 0;
  for (auto c : two_a.counts) total += c;
  CHECK(total == 100000);
  CHECK(compare(two_a).pass);

  auto three = run(pg, {1, 1}, 99991, 42, 3);  // samples not divisible by workers
  total = 0;
  for (auto c : three.counts) total += c;
  CHECK(total == 99991);
}

TEST_CASE("walks on a non-self-centered graph hit an empty sphere") {
  auto pg = hgw::testing::path3(0);
  auto profile = compute_distance_profile(pg);
  WalkSpec spec;
  spec.sequence = {1, 2};  // second jump is impossible from the middle vertex
  spec.samples = 50;
  spec.seed = 3;
  CHECK_THROWS_AS(simulate(pg, profile, spec), SphereEmptyError);
}

TEST_CASE("walk spec validation") {
  auto pg = PointedGraph(cycle(4), 0);
  auto profile = compute_distance_profile(pg);
  WalkSpec spec;
  spec.sequence = {9};
  spec.samples = 10;
  CHECK_THROWS_AS(simulate(pg, profile, spec), std::invalid_argument);
  spec.sequence = {};
  CHECK_THROWS_AS(simulate(pg, profile, spec), std::invalid_argument);
  spec.sequence = {1};
  spec.samples = 0;
  CHECK_THROWS_AS(simulate(pg, profile, spec), std::invalid_argument);
  spec.samples = 10;
  spec.workers = 0;
  CHECK_THROWS_AS(simulate(pg, profile, spec), std::invalid_argument);
}
