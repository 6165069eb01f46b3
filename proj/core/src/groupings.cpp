#include "pcc/groupings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace pcc {

namespace {

// Labels of an ordered tuple, MSB-first, rearranged from the sorted-tuple
// packing given the permutation that maps ordered position -> sorted position.
uint32_t permute_pattern(uint32_t sorted_labels, std::span<const int> perm, int k) {
  uint32_t out = 0;
  for (int pos = 0; pos < k; ++pos) {
    int bit = (sorted_labels >> (k - 1 - perm[pos])) & 1;
    out = (out << 1) | static_cast<uint32_t>(bit);
  }
  return out;
}

}  // namespace

bool ForbiddenSpec::violates(std::span<const int> sorted_tuple, uint32_t labels) const {
  int k = arity;
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  std::vector<int> ordered(k);
  do {
    for (int i = 0; i < k; ++i) ordered[i] = sorted_tuple[perm[i]];
    auto patterns = forbidden(ordered);
    if (!patterns.empty()) {
      uint32_t lab = permute_pattern(labels, perm, k);
      for (uint32_t p : patterns)
        if (p == lab) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

ForbiddenSpec similarity_spec(const std::shared_ptr<const Domain>& dom) {
  require_input(dom->has_weights(), "similarity_spec: domain has no weight matrix");
  ForbiddenSpec s;
  s.arity = 2;
  s.kind = "similarity";
  s.penalty = [dom](std::span<const int> t) { return dom->weight(t[0], t[1]); };
  s.forbidden = [](std::span<const int>) { return std::vector<uint32_t>{0b01, 0b10}; };
  return s;
}

ForbiddenSpec nn_spec(const std::shared_ptr<const Domain>& dom) {
  require_input(dom->has_metric(), "nn_spec: domain has no metric");
  ForbiddenSpec s;
  s.arity = 2;
  s.kind = "nn";
  s.penalty = [dom](std::span<const int> t) {
    double d = dom->dist(t[0], t[1]);
    if (d == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / d;
  };
  s.forbidden = [](std::span<const int>) { return std::vector<uint32_t>{0b01, 0b10}; };
  return s;
}

double contrastive_rad(const Domain& dom, int x, int xp, int xm) {
  double best = std::numeric_limits<double>::infinity();
  for (int c = 0; c < dom.size(); ++c) {
    double r = std::max({dom.dist(c, x), dom.dist(c, xp), dom.dist(c, xm)});
    best = std::min(best, r);
  }
  return best;
}

ForbiddenSpec contrastive_spec(const std::shared_ptr<const Domain>& dom) {
  require_input(dom->has_metric(), "contrastive_spec: domain has no metric");
  ForbiddenSpec s;
  s.arity = 3;
  s.kind = "contrastive";
  s.penalty = [dom](std::span<const int> t) {
    double r = contrastive_rad(*dom, t[0], t[1], t[2]);
    if (r == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / r;
  };
  s.forbidden = [dom](std::span<const int> t) {
    // Ordered (x, x+, x-): constrained only under strict dist(x,x+) < dist(x,x-).
    if (dom->dist(t[0], t[1]) < dom->dist(t[0], t[2]))
      return std::vector<uint32_t>{0b010, 0b101};
    return std::vector<uint32_t>{};
  };
  return s;
}

ForbiddenSpec cluster_spec(std::vector<int> cluster_of_point) {
  ForbiddenSpec s;
  s.arity = 2;
  s.kind = "cluster";
  auto clusters = std::make_shared<std::vector<int>>(std::move(cluster_of_point));
  s.penalty = [clusters](std::span<const int> t) {
    return (*clusters)[t[0]] == (*clusters)[t[1]] ? 1.0 : 0.0;
  };
  s.forbidden = [](std::span<const int>) { return std::vector<uint32_t>{0b01, 0b10}; };
  return s;
}

namespace {

// All k-subsets of positions {0..width-1} as masks, ascending.
void for_each_subset_of_size(int width, int k, const std::function<void(uint64_t)>& fn) {
  if (k == 0 || k > width) return;
  uint64_t mask = (1ULL << k) - 1;
  uint64_t limit = 1ULL << width;
  while (mask < limit) {
    fn(mask);
    uint64_t c = mask & -mask;
    uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
}

std::vector<int> positions_of(uint64_t mask) {
  std::vector<int> pos;
  while (mask != 0) {
    pos.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return pos;
}

}  // namespace

TraceSet IntensionalClass::trace_set(std::span<const int> u) const {
  TraceSet ts = ::pcc::trace_set(base_, u);
  if (!constraint_.active() || u.size() < static_cast<size_t>(constraint_.spec->arity))
    return ts;
  const ForbiddenSpec& spec = *constraint_.spec;
  int width = ts.width;
  ts.violated.assign(ts.traces.size(), {});
  for_each_subset_of_size(width, spec.arity, [&](uint64_t amask) {
    auto pos = positions_of(amask);
    std::vector<int> pts(pos.size());
    for (size_t i = 0; i < pos.size(); ++i) pts[i] = u[pos[i]];
    // Tuples of distinct points only; repeated points cannot occur since u is
    // an ordered set.
    if (spec.penalty(pts) < constraint_.threshold) return;
    for (size_t i = 0; i < ts.traces.size(); ++i) {
      const PartialTrace& t = ts.traces[i];
      if (!t.total_on(amask)) continue;
      if (spec.violates(pts, t.pattern_on(amask))) ts.violated[i].push_back(amask);
    }
  });
  return ts;
}

std::vector<uint32_t> IntensionalClass::restrict_on(std::span<const int> u) const {
  return trace_set(u).restriction(low_mask(static_cast<int>(u.size())));
}

VcResult IntensionalClass::vc_of_restriction(std::span<const int> u, int cap) const {
  if (static_cast<int>(u.size()) > cap)
    throw ResourceError("vc_of_restriction: |U| exceeds the enumeration cap");
  TraceSet ts = trace_set(u);
  return VcResult{ts.vc(cap), ts.has_total_on_full()};
}

Collection::Collection(std::vector<IntensionalClass> ms, std::function<double(int)> tau_bound)
    : members(std::move(ms)), analytic_tau(std::move(tau_bound)) {
  require_input(!members.empty(), "Collection: must be nonempty");
  std::set<std::string> names;
  int n = members.front().domain_size();
  for (const auto& m : members) {
    require_input(m.domain_size() == n, "Collection: members must share one domain");
    require_input(names.insert(m.name()).second, "Collection: duplicate member name");
  }
}

HierarchicalClustering HierarchicalClustering::from_levels(std::vector<std::vector<int>> levels) {
  require_input(!levels.empty(), "HierarchicalClustering: no levels");
  size_t n = levels.front().size();
  require_input(n > 0, "HierarchicalClustering: empty domain");
  for (const auto& lv : levels)
    require_input(lv.size() == n, "HierarchicalClustering: inconsistent level sizes");
  for (size_t x = 1; x < n; ++x)
    require_input(levels.front()[x] == levels.front()[0],
                  "HierarchicalClustering: root level must be a single cluster");
  const auto& leaves = levels.back();
  std::set<int> leaf_ids(leaves.begin(), leaves.end());
  require_input(leaf_ids.size() == n, "HierarchicalClustering: leaf level must be singletons");
  for (size_t l = 0; l + 1 < levels.size(); ++l) {
    // Same cluster at the finer level implies same cluster at the coarser one.
    for (size_t a = 0; a < n; ++a)
      for (size_t b = a + 1; b < n; ++b)
        if (levels[l + 1][a] == levels[l + 1][b])
          require_input(levels[l][a] == levels[l][b],
                        "HierarchicalClustering: levels must refine going down");
  }
  return HierarchicalClustering(std::move(levels));
}

HierarchicalClustering HierarchicalClustering::random(int n, Rng& rng) {
  require_input(n >= 1, "HierarchicalClustering::random: n must be positive");
  std::vector<int> part(n);
  for (int i = 0; i < n; ++i) part[i] = i;
  std::vector<std::vector<int>> levels;
  levels.push_back(part);
  while (true) {
    std::set<int> ids(part.begin(), part.end());
    if (ids.size() == 1) break;
    std::vector<int> id_list(ids.begin(), ids.end());
    int a = static_cast<int>(rng.next_below(id_list.size()));
    int b = static_cast<int>(rng.next_below(id_list.size() - 1));
    if (b >= a) ++b;
    int from = id_list[std::max(a, b)], to = id_list[std::min(a, b)];
    for (auto& c : part)
      if (c == from) c = to;
    levels.push_back(part);
  }
  std::reverse(levels.begin(), levels.end());
  return from_levels(std::move(levels));
}

Collection hc_collection(const ExplicitClass& base, const HierarchicalClustering& hc) {
  require_input(base.domain_size() == hc.domain_size(),
                "hc_collection: clustering and class domains differ");
  std::vector<IntensionalClass> members;
  for (int l = 0; l < hc.num_levels(); ++l) {
    Constraint c{std::make_shared<const ForbiddenSpec>(cluster_spec(hc.level(l))), 0.5};
    members.emplace_back(base.name() + "/hc_level_" + std::to_string(l), base, c);
  }
  int levels = hc.num_levels();
  return Collection(std::move(members),
                    [levels](int m) { return static_cast<double>(std::min(m, levels)); });
}

Breakpoints penalty_breakpoints(const ForbiddenSpec& spec, std::span<const int> u) {
  int width = static_cast<int>(u.size());
  require_input(width <= 62, "penalty_breakpoints: set too large");
  std::map<double, int> counts;
  for_each_subset_of_size(width, spec.arity, [&](uint64_t amask) {
    auto pos = positions_of(amask);
    std::vector<int> pts(pos.size());
    for (size_t i = 0; i < pos.size(); ++i) pts[i] = u[pos[i]];
    counts[spec.penalty(pts)] += 1;
  });
  Breakpoints bp;
  for (const auto& [v, c] : counts) {
    bp.values.push_back(v);
    bp.multiplicity.push_back(c);
  }
  return bp;
}

std::vector<double> representative_thresholds(const Breakpoints& bp) {
  std::vector<double> rs;
  if (bp.values.empty()) return rs;
  rs.push_back(bp.values.front() - 1.0);
  for (size_t j = 0; j + 1 < bp.values.size(); ++j)
    rs.push_back(0.5 * (bp.values[j] + bp.values[j + 1]));
  double top = bp.values.back();
  rs.push_back(std::isinf(top) ? std::numeric_limits<double>::infinity() : top + 1.0);
  return rs;
}

namespace {

std::string format_threshold(double r) {
  std::ostringstream os;
  os.precision(12);
  os << r;
  return os.str();
}

}  // namespace

Collection forbidden_collection(const ExplicitClass& base,
                                const std::shared_ptr<const ForbiddenSpec>& spec,
                                std::span<const int> u) {
  Breakpoints bp = penalty_breakpoints(*spec, u);
  std::vector<double> rs = representative_thresholds(bp);
  if (rs.empty()) rs.push_back(0.0);  // |u| < arity: a single unconstrained class
  std::vector<IntensionalClass> members;
  for (double r : rs)
    members.emplace_back(base.name() + "(r=" + format_threshold(r) + ")", base,
                         Constraint{spec, r});
  int k = spec->arity;
  return Collection(std::move(members), [k](int m) {
    double binom = 1.0;
    for (int i = 0; i < k; ++i) binom = binom * static_cast<double>(m - i) / static_cast<double>(i + 1);
    return std::max(1.0, binom) + 1.0;
  });
}

namespace {

int largest_constrained_shattered(const ExplicitClass& base, const Domain& dom, int cap,
                                  const std::function<bool(const std::vector<int>&)>& side_ok) {
  int n = dom.size();
  require_input(n <= 24, "vc_at_*: domain too large for exhaustive search");
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  TraceSet ts = trace_set(base, all);
  int bound = std::min(n, cap);
  int lg = 0;
  while ((size_t{1} << (lg + 1)) <= ts.traces.size()) ++lg;
  bound = std::min(bound, lg);
  for (int t = bound; t >= 1; --t) {
    bool found = false;
    for_each_subset_of_size(n, t, [&](uint64_t mask) {
      if (found) return;
      auto pts = positions_of(mask);
      if (!side_ok(pts)) return;
      if (ts.shatters(mask)) found = true;
    });
    if (found) return t;
  }
  return 0;
}

}  // namespace

int vc_at_weight(const ExplicitClass& base, const Domain& dom, double r, int cap) {
  require_input(dom.has_weights(), "vc_at_weight: domain has no weight matrix");
  return largest_constrained_shattered(base, dom, cap, [&](const std::vector<int>& pts) {
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j)
        if (!(dom.weight(pts[i], pts[j]) < r)) return false;
    return true;
  });
}

int vc_at_distance(const ExplicitClass& base, const Domain& dom, double r, int cap) {
  require_input(dom.has_metric(), "vc_at_distance: domain has no metric");
  return largest_constrained_shattered(base, dom, cap, [&](const std::vector<int>& pts) {
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j)
        if (!(dom.dist(pts[i], pts[j]) > r)) return false;
    return true;
  });
}

int vc_at_radius(const ExplicitClass& base, const Domain& dom, double r, int cap) {
  require_input(dom.has_metric(), "vc_at_radius: domain has no metric");
  return largest_constrained_shattered(base, dom, cap, [&](const std::vector<int>& pts) {
    for (int c = 0; c < dom.size(); ++c) {
      int inside = 0;
      for (int p : pts)
        if (dom.dist(c, p) <= r) ++inside;
      if (inside > 2) return false;
    }
    return true;
  });
}

std::vector<int> r_net(const Domain& dom, double r) {
  require_input(dom.has_metric(), "r_net: domain has no metric");
  std::vector<int> net{0};
  std::vector<double> dist_to_net(dom.size());
  for (int i = 0; i < dom.size(); ++i) dist_to_net[i] = dom.dist(0, i);
  while (true) {
    int far = -1;
    double best = -1.0;
    for (int i = 0; i < dom.size(); ++i)
      if (dist_to_net[i] > best) {
        best = dist_to_net[i];
        far = i;
      }
    if (best <= r) break;
    net.push_back(far);
    for (int i = 0; i < dom.size(); ++i)
      dist_to_net[i] = std::min(dist_to_net[i], dom.dist(far, i));
  }
  std::sort(net.begin(), net.end());
  return net;
}

std::vector<int> r_packing(const Domain& dom, double r) { return r_net(dom, r); }

bool is_lipschitz(const std::vector<double>& f, const Domain& dom, double lipschitz) {
  for (int i = 0; i < dom.size(); ++i)
    for (int j = i + 1; j < dom.size(); ++j)
      if (std::abs(f[i] - f[j]) > lipschitz * dom.dist(i, j)) return false;
  return true;
}

RealValuedClass lipschitz_subset(const RealValuedClass& f, const Domain& dom, double lipschitz) {
  RealValuedClass out;
  out.name = f.name;
  for (const auto& fn : f.functions)
    if (is_lipschitz(fn, dom, lipschitz)) out.functions.push_back(fn);
  return out;
}

ExplicitClass margin_patterns(const RealValuedClass& f, const Domain& dom, double lipschitz,
                              double gamma) {
  require_input(gamma > 0.0, "margin_patterns: gamma must be positive");
  std::vector<Hypothesis> hs;
  for (const auto& fn : f.functions) {
    require_input(static_cast<int>(fn.size()) == dom.size(),
                  "margin_patterns: function length must match the domain");
    if (!is_lipschitz(fn, dom, lipschitz)) continue;
    Hypothesis h(dom.size());
    for (int i = 0; i < dom.size(); ++i) {
      if (fn[i] >= gamma)
        h.set(i, Label::One);
      else if (fn[i] <= -gamma)
        h.set(i, Label::Zero);
    }
    hs.push_back(std::move(h));
  }
  require_input(!hs.empty(), "margin_patterns: no function with the requested Lipschitz constant");
  return ExplicitClass(f.name + "^{0/1}", std::move(hs));
}

IntensionalClass margin_translated_class(const RealValuedClass& f,
                                         const std::shared_ptr<const Domain>& dom,
                                         double lipschitz, double gamma) {
  ExplicitClass patterns = margin_patterns(f, *dom, lipschitz, gamma);
  Constraint c{std::make_shared<const ForbiddenSpec>(nn_spec(dom)), lipschitz / (2.0 * gamma)};
  return IntensionalClass(patterns.name(), std::move(patterns), std::move(c));
}

std::vector<uint32_t> margin_translate(const RealValuedClass& f,
                                       const std::shared_ptr<const Domain>& dom, double lipschitz,
                                       double gamma, std::span<const int> u) {
  return margin_translated_class(f, dom, lipschitz, gamma).restrict_on(u);
}

Ratio err_gamma(const std::vector<double>& f, const LabeledSample& s, double gamma) {
  require_input(s.size() > 0, "err_gamma: empty sample");
  long long bad = 0;
  for (const auto& [x, y] : s.pairs) {
    double sign = (y == Label::One) ? 1.0 : -1.0;
    if (sign * f[x] < gamma) ++bad;
  }
  return Ratio::of(bad, s.size());
}

Ratio err_gamma_class(const RealValuedClass& f, const LabeledSample& s, double gamma) {
  require_input(!f.functions.empty(), "err_gamma_class: empty class");
  Ratio best = Ratio::of(1, 1);
  for (const auto& fn : f.functions) best = std::min(best, err_gamma(fn, s, gamma));
  return best;
}

int fat_shattering_zero_witness(const RealValuedClass& f, double gamma, int cap) {
  if (f.functions.empty()) return 0;
  int n = static_cast<int>(f.functions.front().size());
  require_input(n <= 24, "fat_shattering_zero_witness: domain too large");
  int bound = std::min(n, cap);
  int lg = 0;
  while ((size_t{1} << (lg + 1)) <= f.functions.size()) ++lg;
  bound = std::min(bound, lg);
  for (int t = bound; t >= 1; --t) {
    bool found = false;
    for_each_subset_of_size(n, t, [&](uint64_t mask) {
      if (found) return;
      auto pts = positions_of(mask);
      for (uint32_t pattern = 0; pattern < (1u << t); ++pattern) {
        bool realized = false;
        for (const auto& fn : f.functions) {
          bool ok = true;
          for (int j = 0; j < t && ok; ++j) {
            double sign = ((pattern >> (t - 1 - j)) & 1) ? 1.0 : -1.0;
            ok = sign * fn[pts[j]] >= gamma;
          }
          if (ok) {
            realized = true;
            break;
          }
        }
        if (!realized) return;
      }
      found = true;
    });
    if (found) return t;
  }
  return 0;
}

}  // namespace pcc
