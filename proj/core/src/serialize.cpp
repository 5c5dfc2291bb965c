#include "qgrass/serialize.hpp"

#include <nlohmann/json.hpp>

namespace qgr {

using nlohmann::json;

json to_json(const RSubset& a) { return json{{"n", a.n()}, {"elems", a.elems()}}; }

RSubset rsubset_from_json(const json& j) {
  return RSubset(j.at("n").get<int>(), j.at("elems").get<std::vector<int>>());
}

json to_json(const Partition& p) { return json{{"parts", p.parts()}}; }

Partition partition_from_json(const json& j) {
  return Partition(j.at("parts").get<std::vector<int>>());
}

json to_json(const Composition& c) { return json{{"parts", c.parts()}}; }

Composition composition_from_json(const json& j) {
  return Composition(j.at("parts").get<std::vector<int>>());
}

json to_json(const Permutation& w) { return json{{"oneline", w.oneline()}}; }

Permutation permutation_from_json(const json& j) {
  return Permutation(j.at("oneline").get<std::vector<int>>());
}

json to_json(const NcPermutation& w) {
  return json{{"oneline", w.perm().oneline()}, {"blocks", w.blocks()}};
}

NcPermutation nc_from_json(const json& j) {
  const auto oneline = j.at("oneline").get<std::vector<int>>();
  return NcPermutation::from_blocks(static_cast<int>(oneline.size()),
                                    j.at("blocks").get<std::vector<std::vector<int>>>());
}

json to_json(const IntPolynomial& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(json{{"exp", e}, {"coef", c.str()}});
  return json{{"nx", f.vars().nx}, {"nt", f.vars().nt}, {"terms", terms}};
}

IntPolynomial polynomial_from_json(const json& j) {
  IntPolynomial f(VarSet{j.at("nx").get<int>(), j.at("nt").get<int>()});
  for (const auto& term : j.at("terms"))
    f.add_term(term.at("exp").get<std::vector<int>>(), Int(term.at("coef").get<std::string>()));
  return f;
}

json graph_to_json(const EdgeLabeledGraph& g) {
  json vertices = json::array();
  for (const auto& v : g.vertices()) vertices.push_back(v.elems());
  json edges = json::array(), labels = json::array();
  for (const auto& e : g.edges()) {
    edges.push_back(json::array({e.u, e.v}));
    labels.push_back(json::array({e.i, e.j}));
  }
  return json{{"vertices", vertices}, {"edges", edges}, {"labels", labels}};
}

json gkm_class_to_json(const EdgeLabeledGraph& g, const GkmClass& cls) {
  json out = json::array();
  for (std::size_t v = 0; v < g.vertices().size(); ++v)
    out.push_back(json{{"vertex", to_json(g.vertex(static_cast<int>(v)))},
                       {"poly", to_json(cls.values[v])}});
  return out;
}

json polytope_record(const Composition& alpha, int r, int n) {
  const HPolytope p = h_description(partition_to_subset(comp_to_partition(alpha), r, n));
  json fixed = json::array();
  for (auto [coord, val] : p.fixed) fixed.push_back(json::array({coord, val}));
  json ineqs = json::array();
  for (const auto& iq : p.inequalities)
    ineqs.push_back(json{{"lo", iq.lo},
                         {"hi", iq.hi},
                         {"rhs", iq.rhs},
                         {"sense", iq.at_most ? "<=" : ">="},
                         {"family", iq.family}});
  json pts = json::array();
  for (const auto& b : admissible_sets(alpha, r, n)) pts.push_back(b.elems());
  return json{{"alpha", alpha.parts()},
              {"fixed_points", pts},
              {"h_description",
               json{{"n", p.n}, {"r", p.r}, {"fixed", fixed}, {"inequalities", ineqs}}}};
}

} // namespace qgr
