#pragma once

#include <nlohmann/json_fwd.hpp>

#include "qgrass/composition.hpp"
#include "qgrass/gkm.hpp"
#include "qgrass/johnson.hpp"
#include "qgrass/noncrossing.hpp"
#include "qgrass/partition.hpp"
#include "qgrass/permutation.hpp"
#include "qgrass/polynomial.hpp"
#include "qgrass/polytopes.hpp"
#include "qgrass/subset.hpp"

namespace qgr {

// {"n":int,"elems":[int]}
nlohmann::json to_json(const RSubset& a);
RSubset rsubset_from_json(const nlohmann::json& j);

// {"parts":[int]}
nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Composition& c);
Composition composition_from_json(const nlohmann::json& j);

// {"oneline":[int]}
nlohmann::json to_json(const Permutation& w);
Permutation permutation_from_json(const nlohmann::json& j);

// {"oneline":[int],"blocks":[[int]]}
nlohmann::json to_json(const NcPermutation& w);
NcPermutation nc_from_json(const nlohmann::json& j);

// {"terms":[{"exp":[int],"coef":"bigint-as-string"}]} plus the variable split
nlohmann::json to_json(const IntPolynomial& f);
IntPolynomial polynomial_from_json(const nlohmann::json& j);

// {"vertices":[...],"edges":[[idx,idx]],"labels":[[i,j]]}
nlohmann::json graph_to_json(const EdgeLabeledGraph& g);

// Per-vertex [{"vertex":subset,"poly":...}] dump of a class.
nlohmann::json gkm_class_to_json(const EdgeLabeledGraph& g, const GkmClass& cls);

// {"alpha":[...],"fixed_points":[[...]],"h_description":{...}}
nlohmann::json polytope_record(const Composition& alpha, int r, int n);

} // namespace qgr
