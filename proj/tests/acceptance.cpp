// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. Expects the path of the hgw CLI binary as argv[1]
// (criterion 1 drives `gen` end to end).

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "hgw/generators.hpp"
#include "hgw/graph.hpp"
#include "hgw/hypergroup.hpp"
#include "hgw/matrices.hpp"
#include "hgw/walks.hpp"

using namespace hgw;
using hgw::testing::s1s2_corpus;

namespace {

std::string g_cli_path;
int g_failures = 0;

struct Criterion {
  int number;
  std::string description;
  double limit_seconds;
  std::function<void(std::ostringstream&)> body;  // writes failure details
};

void run_criterion(const Criterion& criterion) {
  std::ostringstream details;
  bool ok = true;
  auto start = std::chrono::steady_clock::now();
  try {
    criterion.body(details);
  } catch (const std::exception& e) {
    details << "exception: " << e.what() << "\n";
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!details.str().empty()) ok = false;
  if (elapsed > criterion.limit_seconds) {
    ok = false;
    details << "runtime " << elapsed << " s exceeds the " << criterion.limit_seconds
            << " s limit\n";
  }
  std::printf("%s criterion %2d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", criterion.number,
              criterion.description.c_str(), elapsed);
  if (!ok) {
    ++g_failures;
    std::istringstream lines(details.str());
    std::string line;
    while (std::getline(lines, line)) std::printf("       %s\n", line.c_str());
  }
}

template <class T>
void expect(std::ostringstream& details, bool condition, const T& message) {
  if (!condition) details << message << "\n";
}

Mat<int> int_matrix(const std::vector<std::vector<int>>& rows) {
  Mat<int> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return m;
}

Mat<Rat> rat_matrix(const std::vector<std::vector<Rat>>& rows) {
  Mat<Rat> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return m;
}

// --- criterion 1 -----------------------------------------------------------
//
// `gen cycle 4` through the CLI, then the full pipeline. The printed
// matrices index vertices in breadth-first sphere order from the base
// point (0; 1, 3; 2), so the comparison permutes rows and columns into
// that order.
void criterion1(std::ostringstream& out) {
  std::string path = "/tmp/hgw_acceptance_c4.graph";
  std::string command = g_cli_path + " gen cycle 4 --out " + path;
  expect(out, std::system(command.c_str()) == 0, "gen cycle 4 failed");
  Graph g = load_graph(path);
  std::remove(path.c_str());

  PointedGraph pg(g, 0);
  auto profile = compute_distance_profile(pg);
  auto family = build_adjacency_family(profile);

  // vertices sorted by (distance from base, index)
  std::vector<Vertex> order(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t v = 0; v < order.size(); ++v) order[v] = static_cast<Vertex>(v);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return profile.dist_from_base[static_cast<std::size_t>(a)] <
           profile.dist_from_base[static_cast<std::size_t>(b)];
  });
  expect(out, order == std::vector<Vertex>{0, 1, 3, 2}, "unexpected sphere order");

  auto permuted = [&](const Mat<int>& a) {
    Mat<int> p(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
      for (int c = 0; c < a.cols(); ++c)
        p(r, c) = a(order[static_cast<std::size_t>(r)], order[static_cast<std::size_t>(c)]);
    return p;
  };

  std::vector<Mat<int>> printed_a = {
      int_matrix({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
      int_matrix({{0, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}}),
      int_matrix({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}),
  };
  expect(out, family.raw.size() == 3, "expected three adjacency matrices");
  for (int k = 0; k <= 2; ++k)
    expect(out, permuted(family.raw[static_cast<std::size_t>(k)]) == printed_a[static_cast<std::size_t>(k)],
           "A^(" + std::to_string(k) + ") differs from the printed matrix");

  Rat half = make_rat(1, 2);
  std::vector<Mat<Rat>> printed_p = {
      Mat<Rat>::identity(3),
      rat_matrix({{0, 1, 0}, {half, 0, half}, {0, 1, 0}}),
      rat_matrix({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}),
  };
  auto constants = build_structure_constants(pg, profile);
  auto transitions = build_transition_family(constants);
  for (int k = 0; k <= 2; ++k)
    expect(out, transitions.matrices[static_cast<std::size_t>(k)] == printed_p[static_cast<std::size_t>(k)],
           "P_" + std::to_string(k) + " differs from the printed matrix");

  auto aggregation = build_aggregation_map(profile);
  auto pd_da = check_pd_equals_da(family, transitions, aggregation);
  expect(out, pd_da.all_hold(), "P_k D = D A_k fails for some k");
}

// --- criterion 2 -----------------------------------------------------------
void criterion2(std::ostringstream& out) {
  Verdict verdict = decide_productive(figure2_graph());

  StructureConstants expected(4);
  auto set_row = [&](int i, int j, std::vector<Rat> coeff) {
    for (int k = 0; k < 4; ++k) {
      expected.at(i, j, k) = coeff[static_cast<std::size_t>(k)];
      expected.at(j, i, k) = coeff[static_cast<std::size_t>(k)];
    }
  };
  for (int k = 0; k < 4; ++k) {
    expected.at(0, k, k) = 1;
    expected.at(k, 0, k) = 1;
  }
  Rat sixth = make_rat(1, 6), third = make_rat(1, 3), half = make_rat(1, 2);
  set_row(1, 1, {sixth, third, half, Rat(0)});
  set_row(2, 2, {sixth, third, half, Rat(0)});
  set_row(1, 2, {Rat(0), half, third, sixth});
  set_row(1, 3, {Rat(0), Rat(0), Rat(1), Rat(0)});
  set_row(2, 3, {Rat(0), Rat(1), Rat(0), Rat(0)});
  set_row(3, 3, {Rat(1), Rat(0), Rat(0), Rat(0)});

  expect(out, verdict.constants == expected, "convolution table differs from the worked example");
  expect(out, verdict.productive, "fig2 must be productive");
  expect(out, verdict.symmetry.s1.holds && verdict.symmetry.s2.holds,
         "fig2 must satisfy (S1) and (S2)");
  expect(out, !verdict.symmetry.distance_regular.holds, "fig2 must not be distance-regular");
}

// --- criteria 3-5 ----------------------------------------------------------
void criterion3(std::ostringstream& out) {
  auto corpus = s1s2_corpus();
  expect(out, corpus.size() >= 25, "corpus must have at least 25 entries");
  for (const auto& [name, pg] : corpus) {
    auto profile = compute_distance_profile(pg);
    expect(out, check_s1(pg, profile).holds && check_s2(pg, profile).holds,
           name + ": corpus entry must satisfy (S1)+(S2)");
    auto constants = build_structure_constants(pg, profile);
    bool brute = check_commutative(constants).holds && check_associative(constants).holds &&
                 check_hypergroup_axioms(constants).holds;
    bool daa =
        check_daa_commutation(build_adjacency_family(profile), build_aggregation_map(profile)).ok;
    expect(out, brute == daa, name + ": brute force and D A_k A_l verdicts differ");
  }
}

void criterion4(std::ostringstream& out) {
  for (const auto& [name, pg] : s1s2_corpus()) {
    auto profile = compute_distance_profile(pg);
    auto constants = build_structure_constants(pg, profile);
    bool commutative = check_commutative(constants).holds;
    bool pd_da = check_pd_equals_da(build_adjacency_family(profile),
                                    build_transition_family(constants),
                                    build_aggregation_map(profile))
                     .all_hold();
    expect(out, commutative == pd_da, name + ": commutativity and P_h D = D A_h differ");
  }
}

void criterion5(std::ostringstream& out) {
  for (const auto& [name, pg] : s1s2_corpus()) {
    auto profile = compute_distance_profile(pg);
    auto s2 = check_s2(pg, profile);
    expect(out, s2.holds, name + ": (S2) expected");
    expect(out, shortcut_constants(profile, s2.tables) == build_structure_constants(pg, profile),
           name + ": shortcut constants differ from the definition");
  }
}

// --- criterion 6 -----------------------------------------------------------
void criterion6(std::ostringstream& out) {
  int diam2_members = 0;
  for (const auto& [name, pg] : s1s2_corpus()) {
    auto profile = compute_distance_profile(pg);
    if (profile.index_count != 3) continue;
    ++diam2_members;
    Verdict verdict = decide_productive(pg);
    expect(out, verdict.productive, name + ": diameter-2 member must be productive");
    auto s2 = check_s2(pg, profile);
    long m = s2.tables.at(1, 1, 1);
    auto closed = diam2_structure(profile.sphere_sizes[1], profile.sphere_sizes[2], m);
    expect(out, closed.constants == verdict.constants,
           name + ": closed form differs from the brute-forced table");
  }
  expect(out, diam2_members >= 4, "expected several diameter-2 corpus members");
}

// --- criterion 7 -----------------------------------------------------------
void criterion7(std::ostringstream& out) {
  int swept = 0;
  for (long mu1 = 1; mu1 <= 12; ++mu1)
    for (long mu2 = 1; mu2 <= 12; ++mu2)
      for (long m = 0; m <= mu1 - 1; ++m) {
        Diam2Structure d2;
        try {
          d2 = diam2_structure(mu1, mu2, m);
        } catch (const std::invalid_argument&) {
          continue;  // triple not realizable as a pre-hypergroup
        }
        ++swept;
        auto params = WildbergerParams::from_diam2(d2);
        bool wild = check_wildberger_relations(params);
        bool associative = check_associative(d2.constants).holds;
        expect(out, wild && associative,
               "sweep (" + std::to_string(mu1) + "," + std::to_string(mu2) + "," +
                   std::to_string(m) + "): expected wild relations and associativity");
      }
  expect(out, swept >= 400, "sweep produced too few valid triples");

  std::mt19937_64 rng(412);
  auto random_rat = [&rng](long max_den) {
    std::uniform_int_distribution<long> den_dist(1, max_den);
    long den = den_dist(rng);
    std::uniform_int_distribution<long> num_dist(0, den);
    return make_rat(num_dist(rng), den);
  };
  int tested = 0;
  while (tested < 120) {
    WildbergerParams params;
    std::uniform_int_distribution<long> omega_dist(1, 10);
    params.omega1 = Rat(omega_dist(rng));
    params.omega2 = Rat(omega_dist(rng));
    Rat free1 = 1 - 1 / params.omega1;
    Rat free2 = 1 - 1 / params.omega2;
    if (tested % 2 == 0) {
      params.alpha1 = random_rat(8) * free1;
      params.beta1 = free1 - params.alpha1;
      params.alpha2 = random_rat(8) * free2;
      params.beta2 = free2 - params.alpha2;
      params.gamma1 = random_rat(8);
      params.gamma2 = 1 - params.gamma1;
    } else {
      params.beta1 = random_rat(8) * free1;
      params.alpha1 = free1 - params.beta1;
      params.gamma1 = params.beta1 * params.omega1 / params.omega2;
      if (params.gamma1 > 1) continue;
      params.gamma2 = 1 - params.gamma1;
      params.beta2 = params.gamma2 * params.omega1 / params.omega2;
      params.alpha2 = free2 - params.beta2;
      if (params.alpha2 < 0) continue;
    }
    ++tested;
    bool wild = check_wildberger_relations(params);
    bool associative = check_associative(params.to_constants()).holds;
    expect(out, wild == associative,
           "random table " + std::to_string(tested) + ": wild relations disagree with associativity");
  }
}

// --- criterion 8 -----------------------------------------------------------
void criterion8(std::ostringstream& out) {
  for (const auto& [name, pg] : s1s2_corpus()) {
    auto profile = compute_distance_profile(pg);
    auto constants = build_structure_constants(pg, profile);
    bool productive = check_commutative(constants).holds && check_associative(constants).holds;
    if (!productive) continue;
    auto transitions = build_transition_family(constants);
    const int range = profile.index_count;

    std::vector<int> seq;
    std::function<void()> explore = [&]() {
      if (!seq.empty()) {
        auto convolution = convolve_sequence(constants, seq);
        auto enumeration = enumerate_walk_distribution(pg, profile, seq);
        auto extraction = transition_distribution(transitions, seq);
        if (convolution != enumeration || convolution != extraction) {
          std::string tag;
          for (int i : seq) tag += std::to_string(i) + ",";
          expect(out, false, name + ": routes disagree on sequence (" + tag + ")");
          return;
        }
      }
      if (seq.size() == 4) return;
      for (int next = 0; next < range; ++next) {
        seq.push_back(next);
        explore();
        seq.pop_back();
      }
    };
    explore();
  }
}

// --- criterion 9 -----------------------------------------------------------
void criterion9(std::ostringstream& out) {
  struct Fixture {
    std::string name;
    PointedGraph pg;
    std::vector<int> seq;
    std::uint64_t seed;
  };
  std::vector<Fixture> fixtures = {
      {"cycle4 (1,1)", PointedGraph(cycle(4), 0), {1, 1}, 42},
      {"fig2 (1,2)", figure2_graph(), {1, 2}, 7},
      {"fig2 (1,1)", figure2_graph(), {1, 1}, 8},
      {"petersen (1,1)", PointedGraph(petersen(), 0), {1, 1}, 1},
      {"petersen (1,2,1)", PointedGraph(petersen(), 0), {1, 2, 1}, 2},
      {"cycle7 (1,1,1)", PointedGraph(cycle(7), 0), {1, 1, 1}, 3},
      {"hypercube3 (1,2)", PointedGraph(hypercube(3), 0), {1, 2}, 4},
      {"dodecahedron (1,1)", PointedGraph(platonic("dodecahedron"), 0), {1, 1}, 5},
      {"icosahedron (2,2)", PointedGraph(platonic("icosahedron"), 0), {2, 2}, 6},
      {"complete5 (1,1)", PointedGraph(complete(5), 0), {1, 1}, 9},
  };
  for (auto& fixture : fixtures) {
    auto profile = compute_distance_profile(fixture.pg);
    WalkSpec spec;
    spec.sequence = fixture.seq;
    spec.samples = 100000;
    spec.seed = fixture.seed;
    auto emp = simulate(fixture.pg, profile, spec);
    auto constants = build_structure_constants(fixture.pg, profile);
    attach_reference(emp, convolve_sequence(constants, spec.sequence));
    auto report = compare(emp);
    expect(out, report.pass,
           fixture.name + ": gate failed with max |z| = " + std::to_string(report.max_abs_z));
  }

  // the two fixtures with values stated up front
  {
    auto profile = compute_distance_profile(PointedGraph(cycle(4), 0));
    auto constants = build_structure_constants(PointedGraph(cycle(4), 0), profile);
    std::array<int, 2> seq{1, 1};
    auto exact = convolve_sequence(constants, seq);
    expect(out, exact == std::vector<Rat>{make_rat(1, 2), Rat(0), make_rat(1, 2)},
           "cycle4 exact reference must be (1/2, 0, 1/2)");
  }
  {
    auto fig2 = figure2_graph();
    auto profile = compute_distance_profile(fig2);
    auto constants = build_structure_constants(fig2, profile);
    std::array<int, 2> seq{1, 2};
    auto exact = convolve_sequence(constants, seq);
    expect(out,
           exact == std::vector<Rat>{Rat(0), make_rat(1, 2), make_rat(1, 3), make_rat(1, 6)},
           "fig2 exact reference must be (0, 1/2, 1/3, 1/6)");
  }
}

// --- criterion 10 ----------------------------------------------------------
void criterion10(std::ostringstream& out) {
  bool threw = false;
  try {
    decide_productive(hgw::testing::path3(0));
  } catch (const NotSelfCenteredError&) {
    threw = true;
  }
  expect(out, threw, "P_3 from an end vertex must raise NotSelfCentered");

  auto table = hgw::testing::wild_violating_params().to_constants();
  expect(out, !check_wildberger_relations(hgw::testing::wild_violating_params()),
         "synthetic table must violate the wild relations");
  auto associativity = check_associative(table);
  expect(out, !associativity.holds, "synthetic table must fail associativity");
  expect(out, associativity.witness.has_value(), "associativity failure must carry a witness");
  if (associativity.witness) {
    const auto& w = *associativity.witness;
    expect(out, w.i == 1 && w.l == 1 && w.j == 2 && w.m == 0,
           "unexpected associativity witness triple");
    expect(out, w.lhs == make_rat(1, 4) && w.rhs == make_rat(1, 8),
           "unexpected associativity witness values");
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: hgw_acceptance <path-to-hgw-cli>\n";
    return 2;
  }
  g_cli_path = argv[1];

  std::vector<Criterion> criteria = {
      {1, "Z/4Z reproduction: printed A^(k), P_k and P_k D = D A_k", 1.0, criterion1},
      {2, "fig2 reproduction: convolution table and classification", 1.0, criterion2},
      {3, "productivity equals D A_k A_l commutation on the corpus", 30.0, criterion3},
      {4, "commutativity equals P_h D = D A_h on the corpus", 30.0, criterion4},
      {5, "shortcut constants equal definitional constants on the corpus", 30.0, criterion5},
      {6, "diameter-2 members: productive and matching the closed form", 30.0, criterion6},
      {7, "wild relations equal associativity: sweep and random tables", 10.0, criterion7},
      {8, "sequences up to length 4: enumeration = convolution = extraction", 60.0, criterion8},
      {9, "Monte Carlo gate: ten fixtures at |z| <= 4", 10.0, criterion9},
      {10, "negative controls: NotSelfCentered and a wild-violating table", 10.0, criterion10},
  };
  for (const auto& criterion : criteria) run_criterion(criterion);

  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
