#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qgrass/subset.hpp"

namespace qgr {

/// An edge of a (sub)graph of the Johnson graph.  Endpoints differ by a
/// single swap: upper = lower with i replaced by j, (i,j) in Inv(upper).
/// The label is the linear form t_i - t_j, oriented downward in Gale order.
struct JohnsonEdge {
  int u = 0, v = 0; // vertex indices, u < v
  int i = 0, j = 0; // upper vertex contains j, lower contains i
  int lower = 0, upper = 0;

  bool operator==(const JohnsonEdge&) const = default;
};

/// Edge-labeled graph on all r-subsets of [1..n] (vertices are fixed and
/// lexicographically ordered; subgraphs differ only in their edge sets).
class EdgeLabeledGraph {
public:
  EdgeLabeledGraph(int r, int n, std::vector<JohnsonEdge> edges);

  int r() const { return r_; }
  int n() const { return n_; }
  const std::vector<RSubset>& vertices() const { return vertices_; }
  const std::vector<JohnsonEdge>& edges() const { return edges_; }

  int index_of(const RSubset& a) const;
  const RSubset& vertex(int idx) const { return vertices_[idx]; }
  bool has_edge(int u, int v) const;
  const JohnsonEdge& edge(int u, int v) const;
  std::vector<int> neighbors(int u) const;

private:
  int r_, n_;
  std::vector<RSubset> vertices_;
  std::vector<JohnsonEdge> edges_;
  std::map<std::pair<int, int>, int> edge_index_;
};

/// The full Johnson graph J_{r,n}.
EdgeLabeledGraph johnson(int r, int n);

/// The quasisymmetric Johnson graph by its definition: edges realized by
/// Kreweras-adjacent pairs of noncrossing partitions.  Needs NC_n within
/// the enumeration bound.
EdgeLabeledGraph quasi_johnson(int r, int n);

/// The same graph from the Split/Merge closed form of the noncrossing
/// inversions of z_A.  The two routes are constructed independently and
/// their equality is asserted by the verification suites, never assumed.
EdgeLabeledGraph quasi_johnson_from_inversions(int r, int n);

/// Quasisymmetric inversion set read off from a subgraph G: inversions
/// (i,j) of A whose swap is an edge of G.
std::set<std::pair<int, int>> invq(const RSubset& a, const EdgeLabeledGraph& g);

/// E(J_{r,n}) \ E(QJ_{r,n}) as pairs of subsets (lower, upper).
std::vector<std::pair<RSubset, RSubset>> removed_edges(int r, int n);

/// Deterministic DOT rendering (vertices named by their element lists,
/// edges annotated with labels).
std::string export_dot(const EdgeLabeledGraph& g, const std::string& name);

} // namespace qgr
