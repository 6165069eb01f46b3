#pragma once

#include <map>
#include <span>
#include <vector>

#include "pcc/groupings.hpp"
#include "pcc/ratio.hpp"

namespace pcc {

// One-inclusion graph on a point subset: nodes are the class's total
// behaviours there, edges join behaviours differing at exactly one point.
struct OigEdge {
  int a = 0;  // node indices, pattern(a) < pattern(b)
  int b = 0;
  int coord = 0;  // position within the support where they differ
};

struct OneInclusionGraph {
  std::vector<int> support;      // ordered point subset
  std::vector<uint32_t> nodes;   // sorted MSB-first patterns on the support
  std::vector<OigEdge> edges;
  std::vector<bool> toward_b;    // orientation: true = a -> b (head b); empty until oriented
  bool oriented = false;

  std::vector<int> out_degrees() const;
  int max_out_degree() const;
  // Head node index of edge e under the orientation.
  int head(int e) const { return toward_b[e] ? edges[e].b : edges[e].a; }
  int tail(int e) const { return toward_b[e] ? edges[e].a : edges[e].b; }
};

OneInclusionGraph build_graph(const IntensionalClass& c, std::span<const int> u);

// Path-reversal local search: while some maximum-out-degree node can reach a
// node with out-degree at most max-2 along directed edges, reverse such a
// path. On exit the maximum out-degree equals the minimum over all
// orientations (the reachable set certifies optimality by edge density).
// Deterministic: scan order and BFS tie-breaks follow node indices.
void orient_min_outdegree(OneInclusionGraph& g);

// Oriented graphs memoized per support set; one cache serves one class.
struct OigCache {
  std::map<std::vector<int>, OneInclusionGraph> graphs;

  const OneInclusionGraph& get(const IntensionalClass& c, const std::vector<int>& support);
};

// The transductive prediction at x from sample s. With two consistent nodes
// the oriented edge between them decides: the head's value at x, so a
// prediction error is an edge oriented out of the true node. No consistent
// node yields 0.
Label oig_predict(const IntensionalClass& c, const LabeledSample& s, int x,
                  OigCache* cache = nullptr);

struct LooResult {
  Ratio value = Ratio::of(0, 1);
  bool realizable = true;
};

// Average leave-one-out error over the n positions of s. The predictor is
// invariant under permutations of its training set, so this equals the
// symmetrized error.
LooResult loo_error(const IntensionalClass& c, const LabeledSample& s);

// Debug edge list: one line "patternA patternB point direction" per edge.
std::string export_edge_list(const OneInclusionGraph& g);

}  // namespace pcc
