#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hgw/generators.hpp"
#include "hgw/graph.hpp"
#include "hgw/hypergroup.hpp"
#include "hgw/serialize.hpp"
#include "hgw/walks.hpp"

namespace {

using namespace hgw;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // non-productive / gate failure
constexpr int kExitError = 2;     // usage or input error

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw std::runtime_error("expected an integer for " + what + ", got \"" + text + "\"");
  }
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  for (const auto& part : split(text, ','))
    out.push_back(parse_int(part, what));
  if (out.empty()) throw std::runtime_error(what + " must be a non-empty comma list");
  return out;
}

// Builtin names resolve before file paths: petersen, fig2, cycle N,
// complete N, hypercube D, platonic NAME, cayley zN s1,s2,...
// Multi-token forms may also be spelled with ':' (cycle:4, cayley:z4:1,3).
Graph resolve_builtin(const std::vector<std::string>& tokens, bool& matched) {
  matched = true;
  const std::string& family = tokens[0];
  auto want_params = [&](std::size_t count) {
    if (tokens.size() != count + 1)
      throw std::runtime_error("graph family \"" + family + "\" expects " +
                               std::to_string(count) + " parameter(s)");
  };
  if (family == "petersen") {
    want_params(0);
    return petersen();
  }
  if (family == "fig2") {
    want_params(0);
    return figure2_graph().graph;
  }
  if (family == "cycle") {
    want_params(1);
    return cycle(parse_int(tokens[1], "cycle length"));
  }
  if (family == "complete") {
    want_params(1);
    return complete(parse_int(tokens[1], "vertex count"));
  }
  if (family == "hypercube") {
    want_params(1);
    return hypercube(parse_int(tokens[1], "dimension"));
  }
  if (family == "platonic") {
    want_params(1);
    return platonic(tokens[1]);
  }
  if (family == "cayley") {
    want_params(2);
    std::string group = tokens[1];
    if (group.size() < 2 || (group[0] != 'z' && group[0] != 'Z'))
      throw std::runtime_error("cayley group must look like z4, got \"" + group + "\"");
    int order = parse_int(group.substr(1), "group order");
    auto gens = parse_int_list(tokens[2], "generating set");
    return cayley(CayleySpec::cyclic(order, gens));
  }
  matched = false;
  return {};
}

Graph resolve_graph(const std::vector<std::string>& source) {
  if (source.empty()) throw std::runtime_error("no graph source given");
  std::vector<std::string> tokens;
  for (const auto& item : source)
    for (auto& part : split(item, ':')) tokens.push_back(part);
  bool matched = false;
  Graph g = resolve_builtin(tokens, matched);
  if (matched) return g;
  if (source.size() != 1)
    throw std::runtime_error("unknown graph family \"" + tokens[0] + "\"");
  return load_graph(source[0]);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string mu_string(const std::vector<int>& mu) {
  std::string out = "(";
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(mu[i]);
  }
  return out + ")";
}

std::string term_string(const std::vector<Rat>& coefficients) {
  std::string out;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (coefficients[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (coefficients[k] != 1) out += rat_to_string(coefficients[k]) + " ";
    out += "x" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

void print_witnesses(const Verdict& verdict) {
  if (verdict.commutativity_witness) {
    const auto& w = *verdict.commutativity_witness;
    std::cout << "  commutativity fails at (i, j, k) = (" << w.i << ", " << w.j << ", " << w.k
              << "): p_" << w.i << w.j << "^" << w.k << " = " << rat_to_string(w.p_ij) << ", p_"
              << w.j << w.i << "^" << w.k << " = " << rat_to_string(w.p_ji) << "\n";
  }
  if (verdict.associativity_witness) {
    const auto& w = *verdict.associativity_witness;
    std::cout << "  associativity fails at (i, l, j), coefficient of x" << w.m << ": (x" << w.i
              << " x" << w.l << ") x" << w.j << " gives " << rat_to_string(w.lhs) << ", x" << w.i
              << " (x" << w.l << " x" << w.j << ") gives " << rat_to_string(w.rhs) << "\n";
  }
}

struct CheckOptions {
  std::vector<std::string> source;
  Vertex base = 0;
  bool json = false;
  bool dump_matrices = false;
};

int run_check(const CheckOptions& opt) {
  Graph g = resolve_graph(opt.source);
  auto validation = validate_graph(g);
  if (!validation.ok) throw std::runtime_error(validation.message);
  PointedGraph pg(std::move(g), opt.base);
  Verdict verdict = decide_productive(pg);

  if (opt.json || opt.dump_matrices) {
    Json out = verdict_to_json(verdict);
    out["schema"] = "1";
    out["command"] = "check";
    if (opt.dump_matrices) {
      auto profile = compute_distance_profile(pg);
      auto family = build_adjacency_family(profile);
      auto aggregation = build_aggregation_map(profile);
      auto transitions = build_transition_family(verdict.constants);
      out["matrices"] = matrices_to_json(family, transitions, aggregation);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "graph: " << verdict.vertex_count << " vertices, " << verdict.edge_count
              << " edges, base " << verdict.base << "\n";
    std::cout << "mu = " << mu_string(verdict.mu) << ", diameter " << verdict.diameter << ", |I| = "
              << verdict.mu.size() << "\n";
    std::cout << "conditions: S1 " << (verdict.symmetry.s1.holds ? "yes" : "no") << ", S2 "
              << (verdict.symmetry.s2.holds ? "yes" : "no") << ", distance-regular "
              << (verdict.symmetry.distance_regular.holds ? "yes" : "no") << "\n";
    std::cout << "classification: " << classification_name(verdict.classification) << "\n";
    std::cout << "methods:\n";
    std::cout << "  brute force (commutative + associative): "
              << (verdict.methods.brute_force ? "yes" : "no") << "\n";
    std::cout << "  D A_k A_l commutation: "
              << (verdict.methods.daa_criterion
                      ? (*verdict.methods.daa_criterion ? "yes" : "no")
                      : "n/a (needs S1 and S2)")
              << "\n";
    std::cout << "  A^(k) mutual commutation: "
              << (verdict.methods.adjacency_commutation ? "yes" : "no") << "\n";
    std::cout << "verdict: " << (verdict.productive ? "productive" : "not productive") << "\n";
    print_witnesses(verdict);
  }
  return verdict.productive ? kExitOk : kExitNegative;
}

struct StructureOptions {
  std::vector<std::string> source;
  Vertex base = 0;
  bool json = false;
};

int run_structure(const StructureOptions& opt) {
  Graph g = resolve_graph(opt.source);
  auto validation = validate_graph(g);
  if (!validation.ok) throw std::runtime_error(validation.message);
  PointedGraph pg(std::move(g), opt.base);
  Verdict verdict = decide_productive(pg);
  const StructureConstants& constants = verdict.constants;
  const int order = constants.size();

  bool diam2_applies = order == 3 && verdict.symmetry.s1.holds && verdict.symmetry.s2.holds;
  Diam2Structure d2;
  if (diam2_applies) {
    long m = verdict.symmetry.s2.tables.at(1, 1, 1);
    d2 = diam2_structure(verdict.mu[1], verdict.mu[2], m);
    if (d2.constants != constants)
      throw std::logic_error("diameter-2 closed form disagrees with the brute-force table");
  }

  if (opt.json) {
    Json out{{"schema", "1"},
             {"command", "structure"},
             {"base", pg.base},
             {"productive", verdict.productive},
             {"commutative", !verdict.commutativity_witness.has_value()},
             {"structure", structure_constants_to_json(constants)}};
    out["diam2"] = diam2_applies
                       ? Json{{"mu1", d2.mu1}, {"mu2", d2.mu2}, {"m", d2.m}}
                       : Json(nullptr);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "H(Gamma, v0) of order " << order << ", base " << pg.base << "\n";
  bool commutative = !verdict.commutativity_witness.has_value();
  for (int i = 0; i < order; ++i)
    for (int j = commutative ? i : 0; j < order; ++j)
      std::cout << "  x" << i << " o x" << j << " = " << term_string(constants.row(i, j)) << "\n";
  if (!verdict.productive)
    std::cout << "note: table is not " << (commutative ? "associative" : "commutative")
              << "; H(Gamma, v0) is a pre-hypergroup only\n";
  if (diam2_applies)
    std::cout << "diameter-2 closed form: mu1 = " << d2.mu1 << ", mu2 = " << d2.mu2
              << ", m = " << d2.m << " (agrees with the brute-force table)\n";
  return kExitOk;
}

struct GenOptions {
  std::vector<std::string> family;
  std::string out_path;
};

int run_gen(const GenOptions& opt) {
  Graph g = resolve_graph(opt.family);
  save_graph(g, opt.out_path, "hgw gen " + join(opt.family, " "));
  return kExitOk;
}

struct SimulateOptions {
  std::vector<std::string> source;
  Vertex base = 0;
  std::string sequence;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  int workers = 1;
  bool json = false;
};

int run_simulate(const SimulateOptions& opt) {
  Graph g = resolve_graph(opt.source);
  auto validation = validate_graph(g);
  if (!validation.ok) throw std::runtime_error(validation.message);
  PointedGraph pg(std::move(g), opt.base);
  auto profile = compute_distance_profile(pg);

  WalkSpec spec;
  spec.sequence = parse_int_list(opt.sequence, "jump sequence");
  spec.samples = opt.samples;
  spec.seed = opt.seed;
  spec.workers = opt.workers;

  auto emp = simulate(pg, profile, spec);
  auto constants = build_structure_constants(pg, profile);
  attach_reference(emp, convolve_sequence(constants, spec.sequence));
  auto report = compare(emp);

  if (opt.json) {
    Json out = empirical_to_json(emp, report);
    out["schema"] = "1";
    out["command"] = "simulate";
    out["base"] = pg.base;
    out["sequence"] = spec.sequence;
    out["seed"] = spec.seed;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "simulate: " << spec.samples << " samples, seed " << spec.seed << ", "
              << spec.workers << " worker(s), rng " << emp.rng_name << "\n";
    std::printf("%-3s %-10s %-10s %-10s %s\n", "k", "count", "estimate", "exact", "z");
    for (std::size_t k = 0; k < emp.counts.size(); ++k)
      std::printf("%-3zu %-10llu %-10.5f %-10s %+.3f\n", k,
                  static_cast<unsigned long long>(emp.counts[k]), emp.estimates[k],
                  rat_to_string(emp.exact_reference[k]).c_str(), report.z_scores[k]);
    std::cout << "gate: " << (report.pass ? "PASS" : "FAIL") << " (max |z| = " << report.max_abs_z
              << ", threshold " << report.threshold << ")\n";
  }
  return report.pass ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypergroups from random walks on pointed graphs"};
  app.require_subcommand(1);

  CheckOptions check_opt;
  auto* check_cmd = app.add_subcommand("check", "decide hypergroup productivity");
  check_cmd->add_option("graph", check_opt.source, "builtin family or edge-list file")->required();
  check_cmd->add_option("--base", check_opt.base, "base vertex v0 (default 0)");
  check_cmd->add_flag("--json", check_opt.json, "machine-readable output");
  check_cmd->add_flag("--dump-matrices", check_opt.dump_matrices,
                      "include A^(k), A_k, D and P_k in the JSON output");

  StructureOptions structure_opt;
  auto* structure_cmd = app.add_subcommand("structure", "print the convolution table");
  structure_cmd->add_option("graph", structure_opt.source, "builtin family or edge-list file")
      ->required();
  structure_cmd->add_option("--base", structure_opt.base, "base vertex v0 (default 0)");
  structure_cmd->add_flag("--json", structure_opt.json, "machine-readable output");

  GenOptions gen_opt;
  auto* gen_cmd = app.add_subcommand("gen", "emit a builtin graph as an edge-list file");
  gen_cmd->add_option("family", gen_opt.family, "family name and parameters")->required();
  gen_cmd->add_option("--out", gen_opt.out_path, "output path")->required();

  SimulateOptions sim_opt;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo walk vs exact coefficients");
  sim_cmd->add_option("graph", sim_opt.source, "builtin family or edge-list file")->required();
  sim_cmd->add_option("--base", sim_opt.base, "base vertex v0 (default 0)");
  sim_cmd->add_option("--seq", sim_opt.sequence, "jump sequence, e.g. 1,1,2")->required();
  sim_cmd->add_option("--samples", sim_opt.samples, "number of walks (default 100000)");
  sim_cmd->add_option("--seed", sim_opt.seed, "rng seed (default 0)");
  sim_cmd->add_option("--workers", sim_opt.workers, "parallel workers (default 1)");
  sim_cmd->add_flag("--json", sim_opt.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (*check_cmd) return run_check(check_opt);
    if (*structure_cmd) return run_structure(structure_opt);
    if (*gen_cmd) return run_gen(gen_opt);
    if (*sim_cmd) return run_simulate(sim_opt);
  } catch (const NotSelfCenteredError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "classification: " << classification_name(Classification::NotSelfCentered) << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
