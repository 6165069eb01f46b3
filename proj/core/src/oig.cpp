#include "pcc/oig.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace pcc {

std::vector<int> OneInclusionGraph::out_degrees() const {
  std::vector<int> deg(nodes.size(), 0);
  for (size_t e = 0; e < edges.size(); ++e) ++deg[tail(static_cast<int>(e))];
  return deg;
}

int OneInclusionGraph::max_out_degree() const {
  int m = 0;
  for (int d : out_degrees()) m = std::max(m, d);
  return m;
}

OneInclusionGraph build_graph(const IntensionalClass& c, std::span<const int> u) {
  OneInclusionGraph g;
  g.support.assign(u.begin(), u.end());
  g.nodes = c.restrict_on(u);
  int width = static_cast<int>(u.size());
  std::unordered_map<uint32_t, int> index;
  for (size_t i = 0; i < g.nodes.size(); ++i) index[g.nodes[i]] = static_cast<int>(i);
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    for (int pos = 0; pos < width; ++pos) {
      uint32_t flipped = g.nodes[i] ^ (1u << (width - 1 - pos));
      auto it = index.find(flipped);
      if (it != index.end() && g.nodes[i] < flipped)
        g.edges.push_back({static_cast<int>(i), it->second, pos});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const OigEdge& x, const OigEdge& y) {
    return x.a != y.a ? x.a < y.a : (x.b != y.b ? x.b < y.b : x.coord < y.coord);
  });
  return g;
}

void orient_min_outdegree(OneInclusionGraph& g) {
  g.toward_b.assign(g.edges.size(), true);
  g.oriented = true;
  if (g.edges.empty()) return;

  std::vector<std::vector<int>> incident(g.nodes.size());
  for (size_t e = 0; e < g.edges.size(); ++e) {
    incident[g.edges[e].a].push_back(static_cast<int>(e));
    incident[g.edges[e].b].push_back(static_cast<int>(e));
  }
  std::vector<int> deg = g.out_degrees();

  while (true) {
    int k = 0, v = -1;
    for (size_t i = 0; i < deg.size(); ++i)
      if (deg[i] > k) {
        k = deg[i];
        v = static_cast<int>(i);
      }
    if (k <= 1) return;  // out-degree 1 cannot be improved on a nonempty graph

    // BFS from v along edge directions, lowest node index first.
    std::vector<int> parent_edge(g.nodes.size(), -1);
    std::vector<bool> seen(g.nodes.size(), false);
    std::deque<int> queue{v};
    seen[v] = true;
    int found = -1;
    while (!queue.empty() && found < 0) {
      int cur = queue.front();
      queue.pop_front();
      for (int e : incident[cur]) {
        if (g.tail(e) != cur) continue;
        int nxt = g.head(e);
        if (seen[nxt]) continue;
        seen[nxt] = true;
        parent_edge[nxt] = e;
        if (deg[nxt] <= k - 2) {
          found = nxt;
          break;
        }
        queue.push_back(nxt);
      }
    }
    if (found < 0) return;  // reachable set certifies k is optimal

    // Reverse the path; v loses one out-edge, `found` gains one.
    int cur = found;
    while (cur != v) {
      int e = parent_edge[cur];
      int par = g.tail(e);
      g.toward_b[e] = !g.toward_b[e];
      cur = par;
    }
    --deg[v];
    ++deg[found];
  }
}

const OneInclusionGraph& OigCache::get(const IntensionalClass& c, const std::vector<int>& support) {
  auto it = graphs.find(support);
  if (it == graphs.end()) {
    OneInclusionGraph g = build_graph(c, support);
    orient_min_outdegree(g);
    it = graphs.emplace(support, std::move(g)).first;
  }
  return it->second;
}

namespace {

// Shared by oig_predict and loo_error: prediction at position xpos given
// required (position, bit) constraints.
Label predict_in_graph(const OneInclusionGraph& g,
                       const std::vector<std::pair<int, int>>& required, int xpos) {
  int width = static_cast<int>(g.support.size());
  uint32_t mask = 0, want = 0;
  for (auto [pos, bit] : required) {
    uint32_t m = 1u << (width - 1 - pos);
    if ((mask & m) != 0) {
      if (((want & m) != 0) != (bit != 0)) return Label::Zero;  // contradictory sample
      continue;
    }
    mask |= m;
    if (bit) want |= m;
  }
  int first = -1, second = -1;
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    if ((g.nodes[i] & mask) == want) {
      if (first < 0)
        first = static_cast<int>(i);
      else if (second < 0)
        second = static_cast<int>(i);
      else
        throw InvariantError("oig_predict: more than two consistent nodes");
    }
  }
  uint32_t xbit = 1u << (width - 1 - xpos);
  if (first < 0) return Label::Zero;
  if (second < 0) return (g.nodes[first] & xbit) ? Label::One : Label::Zero;
  require_invariant((g.nodes[first] ^ g.nodes[second]) == xbit,
                    "oig_predict: consistent nodes differ away from the test point");
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const OigEdge& ed = g.edges[e];
    if ((ed.a == first && ed.b == second) || (ed.a == second && ed.b == first)) {
      int head = g.head(static_cast<int>(e));
      return (g.nodes[head] & xbit) ? Label::One : Label::Zero;
    }
  }
  throw InvariantError("oig_predict: missing edge between adjacent consistent nodes");
}

int position_of(const std::vector<int>& support, int point) {
  auto it = std::lower_bound(support.begin(), support.end(), point);
  require_invariant(it != support.end() && *it == point, "oig: point missing from support");
  return static_cast<int>(it - support.begin());
}

}  // namespace

Label oig_predict(const IntensionalClass& c, const LabeledSample& s, int x, OigCache* cache) {
  std::vector<int> support = s.domain_points();
  if (!std::binary_search(support.begin(), support.end(), x)) {
    support.push_back(x);
    std::sort(support.begin(), support.end());
  }
  OneInclusionGraph local;
  const OneInclusionGraph* g;
  if (cache != nullptr) {
    g = &cache->get(c, support);
  } else {
    local = build_graph(c, support);
    orient_min_outdegree(local);
    g = &local;
  }
  std::vector<std::pair<int, int>> required;
  required.reserve(s.pairs.size());
  for (const auto& [pt, y] : s.pairs)
    required.emplace_back(position_of(support, pt), y == Label::One ? 1 : 0);
  return predict_in_graph(*g, required, position_of(support, x));
}

LooResult loo_error(const IntensionalClass& c, const LabeledSample& s) {
  require_input(s.size() > 0, "loo_error: empty sample");
  std::vector<int> support = s.domain_points();
  OneInclusionGraph g = build_graph(c, support);
  orient_min_outdegree(g);

  // Realizable iff some node matches every pair of s.
  int width = static_cast<int>(support.size());
  uint32_t mask = 0, want = 0;
  bool contradictory = false;
  for (const auto& [pt, y] : s.pairs) {
    uint32_t m = 1u << (width - 1 - position_of(support, pt));
    uint32_t w = (y == Label::One) ? m : 0;
    if ((mask & m) != 0 && (want & m) != w) contradictory = true;
    mask |= m;
    want |= w;
  }
  bool realizable = false;
  if (!contradictory)
    for (uint32_t node : g.nodes)
      if ((node & mask) == want) realizable = true;

  int n = s.size();
  long long errors = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<int, int>> required;
    required.reserve(n - 1);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const auto& [pt, y] = s.pairs[j];
      required.emplace_back(position_of(support, pt), y == Label::One ? 1 : 0);
    }
    Label pred = predict_in_graph(g, required, position_of(support, s.pairs[i].first));
    if (pred != s.pairs[i].second) ++errors;
  }
  return LooResult{Ratio::of(errors, n), realizable};
}

std::string export_edge_list(const OneInclusionGraph& g) {
  std::ostringstream os;
  int width = static_cast<int>(g.support.size());
  auto pattern_str = [width](uint32_t p) {
    std::string s(width, '0');
    for (int j = 0; j < width; ++j)
      if ((p >> (width - 1 - j)) & 1) s[j] = '1';
    return s;
  };
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const OigEdge& ed = g.edges[e];
    os << pattern_str(g.nodes[ed.a]) << ' ' << pattern_str(g.nodes[ed.b]) << ' '
       << g.support[ed.coord] << ' ';
    if (!g.oriented)
      os << '-';
    else
      os << (g.toward_b[e] ? "ab" : "ba");
    os << '\n';
  }
  return os.str();
}

}  // namespace pcc
