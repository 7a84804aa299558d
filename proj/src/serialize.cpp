#include "hgw/serialize.hpp"

#include <cmath>

namespace hgw {

namespace {

Json rat_array(const std::vector<Rat>& values) {
  Json out = Json::array();
  for (const Rat& v : values) out.push_back(rat_to_fraction_string(v));
  return out;
}

Json mat_to_json(const Mat<Rat>& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rat_to_fraction_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json mat_to_json(const Mat<int>& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json witness_to_json(const CommutativityWitness& w) {
  return Json{{"i", w.i},
              {"j", w.j},
              {"k", w.k},
              {"p_ij", rat_to_fraction_string(w.p_ij)},
              {"p_ji", rat_to_fraction_string(w.p_ji)}};
}

CommutativityWitness commutativity_witness_from_json(const Json& j) {
  CommutativityWitness w;
  w.i = j.at("i").get<int>();
  w.j = j.at("j").get<int>();
  w.k = j.at("k").get<int>();
  w.p_ij = rat_from_string(j.at("p_ij").get<std::string>());
  w.p_ji = rat_from_string(j.at("p_ji").get<std::string>());
  return w;
}

Json witness_to_json(const AssociativityWitness& w) {
  return Json{{"i", w.i},
              {"l", w.l},
              {"j", w.j},
              {"m", w.m},
              {"lhs", rat_to_fraction_string(w.lhs)},
              {"rhs", rat_to_fraction_string(w.rhs)}};
}

AssociativityWitness associativity_witness_from_json(const Json& j) {
  AssociativityWitness w;
  w.i = j.at("i").get<int>();
  w.l = j.at("l").get<int>();
  w.j = j.at("j").get<int>();
  w.m = j.at("m").get<int>();
  w.lhs = rat_from_string(j.at("lhs").get<std::string>());
  w.rhs = rat_from_string(j.at("rhs").get<std::string>());
  return w;
}

Json witness_to_json(const S1Witness& w) {
  return Json{{"i", w.i}, {"v", w.v}, {"w", w.w}, {"size_v", w.size_v}, {"size_w", w.size_w}};
}

S1Witness s1_witness_from_json(const Json& j) {
  return S1Witness{j.at("i").get<int>(), j.at("v").get<Vertex>(), j.at("w").get<Vertex>(),
                   j.at("size_v").get<int>(), j.at("size_w").get<int>()};
}

Json witness_to_json(const S2Witness& w) {
  return Json{{"i", w.i},         {"j", w.j},         {"k", w.k},       {"v", w.v},
              {"w", w.w},         {"count_v", w.count_v}, {"count_w", w.count_w}};
}

S2Witness s2_witness_from_json(const Json& j) {
  return S2Witness{j.at("i").get<int>(),    j.at("j").get<int>(),    j.at("k").get<int>(),
                   j.at("v").get<Vertex>(), j.at("w").get<Vertex>(), j.at("count_v").get<long>(),
                   j.at("count_w").get<long>()};
}

Json witness_to_json(const DistanceRegularWitness& w) {
  return Json{{"i", w.i},   {"j", w.j},   {"k", w.k},           {"v1", w.v1},
              {"w1", w.w1}, {"v2", w.v2}, {"w2", w.w2},         {"count1", w.count1},
              {"count2", w.count2}};
}

DistanceRegularWitness dr_witness_from_json(const Json& j) {
  return DistanceRegularWitness{j.at("i").get<int>(),     j.at("j").get<int>(),
                                j.at("k").get<int>(),     j.at("v1").get<Vertex>(),
                                j.at("w1").get<Vertex>(), j.at("v2").get<Vertex>(),
                                j.at("w2").get<Vertex>(), j.at("count1").get<long>(),
                                j.at("count2").get<long>()};
}

Classification classification_from_name(const std::string& name) {
  if (name == "not-self-centered") return Classification::NotSelfCentered;
  if (name == "self-centered-only") return Classification::SelfCenteredOnly;
  if (name == "s1s2") return Classification::S1S2;
  if (name == "distance-regular") return Classification::DistanceRegular;
  throw std::invalid_argument("unknown classification: " + name);
}

}  // namespace

Json structure_constants_to_json(const StructureConstants& constants) {
  Json table = Json::array();
  for (int i = 0; i < constants.size(); ++i) {
    Json plane = Json::array();
    for (int j = 0; j < constants.size(); ++j) plane.push_back(rat_array(constants.row(i, j)));
    table.push_back(std::move(plane));
  }
  return Json{{"order", constants.size()}, {"table", std::move(table)}};
}

StructureConstants structure_constants_from_json(const Json& j) {
  const int size = j.at("order").get<int>();
  StructureConstants constants(size);
  const Json& table = j.at("table");
  for (int i = 0; i < size; ++i)
    for (int a = 0; a < size; ++a)
      for (int k = 0; k < size; ++k)
        constants.at(i, a, k) = rat_from_string(
            table.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(a))
                .at(static_cast<std::size_t>(k)).get<std::string>());
  return constants;
}

Json verdict_to_json(const Verdict& verdict) {
  Json methods{{"brute_force", verdict.methods.brute_force},
               {"adjacency_commutation", verdict.methods.adjacency_commutation}};
  if (verdict.methods.daa_criterion)
    methods["daa_criterion"] = *verdict.methods.daa_criterion;
  else
    methods["daa_criterion"] = nullptr;

  Json witnesses;
  witnesses["s1"] =
      verdict.symmetry.s1.witness ? witness_to_json(*verdict.symmetry.s1.witness) : Json(nullptr);
  witnesses["s2"] =
      verdict.symmetry.s2.witness ? witness_to_json(*verdict.symmetry.s2.witness) : Json(nullptr);
  witnesses["distance_regular"] = verdict.symmetry.distance_regular.witness
                                      ? witness_to_json(*verdict.symmetry.distance_regular.witness)
                                      : Json(nullptr);
  witnesses["commutativity"] = verdict.commutativity_witness
                                   ? witness_to_json(*verdict.commutativity_witness)
                                   : Json(nullptr);
  witnesses["associativity"] = verdict.associativity_witness
                                   ? witness_to_json(*verdict.associativity_witness)
                                   : Json(nullptr);

  return Json{{"classification", classification_name(verdict.classification)},
              {"productive", verdict.productive},
              {"methods", std::move(methods)},
              {"conditions",
               Json{{"s1", verdict.symmetry.s1.holds},
                    {"s2", verdict.symmetry.s2.holds},
                    {"distance_regular", verdict.symmetry.distance_regular.holds}}},
              {"witnesses", std::move(witnesses)},
              {"mu", verdict.mu},
              {"base", verdict.base},
              {"vertices", verdict.vertex_count},
              {"edges", verdict.edge_count},
              {"diameter", verdict.diameter},
              {"structure", structure_constants_to_json(verdict.constants)}};
}

Verdict verdict_from_json(const Json& j) {
  Verdict verdict;
  verdict.classification = classification_from_name(j.at("classification").get<std::string>());
  verdict.productive = j.at("productive").get<bool>();
  const Json& methods = j.at("methods");
  verdict.methods.brute_force = methods.at("brute_force").get<bool>();
  verdict.methods.adjacency_commutation = methods.at("adjacency_commutation").get<bool>();
  if (!methods.at("daa_criterion").is_null())
    verdict.methods.daa_criterion = methods.at("daa_criterion").get<bool>();

  const Json& conditions = j.at("conditions");
  verdict.symmetry.s1.holds = conditions.at("s1").get<bool>();
  verdict.symmetry.s2.holds = conditions.at("s2").get<bool>();
  verdict.symmetry.distance_regular.holds = conditions.at("distance_regular").get<bool>();

  const Json& witnesses = j.at("witnesses");
  if (!witnesses.at("s1").is_null())
    verdict.symmetry.s1.witness = s1_witness_from_json(witnesses.at("s1"));
  if (!witnesses.at("s2").is_null())
    verdict.symmetry.s2.witness = s2_witness_from_json(witnesses.at("s2"));
  if (!witnesses.at("distance_regular").is_null())
    verdict.symmetry.distance_regular.witness =
        dr_witness_from_json(witnesses.at("distance_regular"));
  if (!witnesses.at("commutativity").is_null())
    verdict.commutativity_witness = commutativity_witness_from_json(witnesses.at("commutativity"));
  if (!witnesses.at("associativity").is_null())
    verdict.associativity_witness = associativity_witness_from_json(witnesses.at("associativity"));

  verdict.mu = j.at("mu").get<std::vector<int>>();
  verdict.base = j.at("base").get<Vertex>();
  verdict.vertex_count = j.at("vertices").get<int>();
  verdict.edge_count = j.at("edges").get<int>();
  verdict.diameter = j.at("diameter").get<int>();
  verdict.constants = structure_constants_from_json(j.at("structure"));
  return verdict;
}

Json matrices_to_json(const AdjacencyFamily& family, const TransitionFamily& transitions,
                      const AggregationMap& aggregation) {
  Json raw = Json::array();
  for (const auto& a : family.raw) raw.push_back(mat_to_json(a));
  Json normalized = Json::array();
  for (const auto& a : family.normalized) normalized.push_back(mat_to_json(a));
  Json p = Json::array();
  for (const auto& t : transitions.matrices) p.push_back(mat_to_json(t));
  return Json{{"adjacency", std::move(raw)},
              {"normalized", std::move(normalized)},
              {"mu", family.mu},
              {"base_point_relative", family.base_point_relative},
              {"aggregation", mat_to_json(aggregation.matrix)},
              {"transition", std::move(p)}};
}

Json empirical_to_json(const EmpiricalDistribution& emp, const AgreementReport& report) {
  Json z = Json::array();
  for (double value : report.z_scores) {
    if (std::isinf(value))
      z.push_back("inf");
    else
      z.push_back(value);
  }
  return Json{{"counts", emp.counts},
              {"samples", emp.samples},
              {"estimates", emp.estimates},
              {"exact", rat_array(emp.exact_reference)},
              {"rng", emp.rng_name},
              {"worker_seed_rule", emp.seed_rule},
              {"workers", emp.workers},
              {"z_scores", std::move(z)},
              {"max_abs_z", std::isinf(report.max_abs_z) ? Json("inf") : Json(report.max_abs_z)},
              {"threshold", report.threshold},
              {"pass", report.pass}};
}

}  // namespace hgw
