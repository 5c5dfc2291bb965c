#include "qgrass/johnson.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "qgrass/noncrossing.hpp"

namespace qgr {

EdgeLabeledGraph::EdgeLabeledGraph(int r, int n, std::vector<JohnsonEdge> edges)
    : r_(r), n_(n), vertices_(all_subsets(n, r)), edges_(std::move(edges)) {
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    auto& e = edges_[k];
    if (e.u > e.v) {
      std::swap(e.u, e.v);
    }
    edge_index_.emplace(std::make_pair(e.u, e.v), static_cast<int>(k));
  }
}

int EdgeLabeledGraph::index_of(const RSubset& a) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), a);
  if (it == vertices_.end() || !(*it == a))
    throw std::invalid_argument("EdgeLabeledGraph::index_of: vertex not in graph");
  return static_cast<int>(it - vertices_.begin());
}

bool EdgeLabeledGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return edge_index_.count({u, v}) > 0;
}

const JohnsonEdge& EdgeLabeledGraph::edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = edge_index_.find({u, v});
  if (it == edge_index_.end()) throw std::invalid_argument("EdgeLabeledGraph::edge: no such edge");
  return edges_[it->second];
}

std::vector<int> EdgeLabeledGraph::neighbors(int u) const {
  std::vector<int> out;
  for (const auto& e : edges_) {
    if (e.u == u) out.push_back(e.v);
    if (e.v == u) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

JohnsonEdge make_edge(const EdgeLabeledGraph& base, const RSubset& upper, int i, int j) {
  JohnsonEdge e;
  const RSubset lower = upper.swap(i, j);
  e.upper = base.index_of(upper);
  e.lower = base.index_of(lower);
  e.u = std::min(e.upper, e.lower);
  e.v = std::max(e.upper, e.lower);
  e.i = i;
  e.j = j;
  return e;
}

EdgeLabeledGraph build_from_downsets(
    int r, int n, const std::function<std::set<std::pair<int, int>>(const RSubset&)>& downs) {
  EdgeLabeledGraph base(r, n, {});
  std::vector<JohnsonEdge> edges;
  for (const auto& a : base.vertices())
    for (auto [i, j] : downs(a)) edges.push_back(make_edge(base, a, i, j));
  std::sort(edges.begin(), edges.end(),
            [](const JohnsonEdge& a, const JohnsonEdge& b) {
              return std::tie(a.u, a.v) < std::tie(b.u, b.v);
            });
  return EdgeLabeledGraph(r, n, std::move(edges));
}

} // namespace

EdgeLabeledGraph johnson(int r, int n) {
  return build_from_downsets(r, n, [](const RSubset& a) { return inversions(a); });
}

EdgeLabeledGraph quasi_johnson(int r, int n) {
  EdgeLabeledGraph base(r, n, {});
  std::set<std::pair<int, int>> seen;
  std::vector<JohnsonEdge> edges;
  for (const auto& u : enumerate_nc(n)) {
    const RSubset b = u.act_initial(r);
    for (const auto& w : kreweras_covers(u)) {
      const RSubset a = w.act_initial(r);
      if (a == b) continue;
      // The cover is left multiplication by a transposition (i j); the two
      // projections differ by that single swap, with j in the Gale-upper set.
      const int iu = base.index_of(a), iv = base.index_of(b);
      auto key = std::minmax(iu, iv);
      if (!seen.insert(key).second) continue;
      const RSubset& up = gale_leq(a, b) ? b : a;
      const RSubset& lo = gale_leq(a, b) ? a : b;
      int i = 0, j = 0;
      for (int v : up.elems())
        if (!lo.contains(v)) j = v;
      for (int v : lo.elems())
        if (!up.contains(v)) i = v;
      edges.push_back(make_edge(base, up, i, j));
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const JohnsonEdge& a, const JohnsonEdge& b) {
              return std::tie(a.u, a.v) < std::tie(b.u, b.v);
            });
  return EdgeLabeledGraph(r, n, std::move(edges));
}

EdgeLabeledGraph quasi_johnson_from_inversions(int r, int n) {
  return build_from_downsets(r, n, [](const RSubset& a) { return split_merge_invnc(a); });
}

std::set<std::pair<int, int>> invq(const RSubset& a, const EdgeLabeledGraph& g) {
  std::set<std::pair<int, int>> out;
  const int ia = g.index_of(a);
  for (auto [i, j] : inversions(a))
    if (g.has_edge(ia, g.index_of(a.swap(i, j)))) out.emplace(i, j);
  return out;
}

std::vector<std::pair<RSubset, RSubset>> removed_edges(int r, int n) {
  const EdgeLabeledGraph j = johnson(r, n);
  const EdgeLabeledGraph qj = quasi_johnson_from_inversions(r, n);
  std::vector<std::pair<RSubset, RSubset>> out;
  for (const auto& e : j.edges())
    if (!qj.has_edge(e.u, e.v)) out.emplace_back(j.vertex(e.lower), j.vertex(e.upper));
  return out;
}

std::string export_dot(const EdgeLabeledGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (const auto& v : g.vertices()) {
    os << "  \"";
    for (std::size_t k = 0; k < v.elems().size(); ++k) os << v.elems()[k];
    os << "\";\n";
  }
  for (const auto& e : g.edges()) {
    const auto& a = g.vertex(e.u);
    const auto& b = g.vertex(e.v);
    os << "  \"";
    for (int x : a.elems()) os << x;
    os << "\" -- \"";
    for (int x : b.elems()) os << x;
    os << "\" [label=\"t" << e.i << "-t" << e.j << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace qgr
