#include "pcc/growth.hpp"

#include <algorithm>
#include <map>

namespace pcc {

namespace {

void check_cap(std::span<const int> u, int cap, const char* who) {
  if (static_cast<int>(u.size()) > cap)
    throw ResourceError(std::string(who) + ": |U| exceeds the signature cap (2^|U| subsets)");
}

// Canonical serialization of a trace set; equal keys imply equal restriction
// maps on every subset of u.
std::vector<uint64_t> canonical_key(const TraceSet& ts) {
  std::vector<uint64_t> key;
  key.push_back(static_cast<uint64_t>(ts.width));
  for (size_t i = 0; i < ts.traces.size(); ++i) {
    key.push_back(ts.traces[i].defined);
    key.push_back(ts.traces[i].ones);
    if (!ts.violated.empty()) {
      std::vector<uint64_t> v = ts.violated[i];
      std::sort(v.begin(), v.end());
      key.push_back(0x8000000000000000ULL | v.size());
      key.insert(key.end(), v.begin(), v.end());
    }
  }
  return key;
}

bool total_unconstrained(const TraceSet& ts) {
  for (size_t i = 0; i < ts.traces.size(); ++i) {
    if (!ts.traces[i].total()) return false;
    if (!ts.violated.empty() && !ts.violated[i].empty()) return false;
  }
  return true;
}

EquivalenceSignature signature_from_traceset(const TraceSet& ts) {
  EquivalenceSignature sig;
  sig.width = ts.width;
  uint64_t subsets = 1ULL << ts.width;
  sig.by_subset.resize(subsets);
  for (uint64_t mask = 0; mask < subsets; ++mask) sig.by_subset[mask] = ts.restriction(mask);
  return sig;
}

}  // namespace

uint64_t EquivalenceSignature::hash() const {
  uint64_t h = 0x9E3779B97F4A7C15ULL ^ static_cast<uint64_t>(width);
  for (const auto& pats : by_subset) {
    h = Rng::mix64(h ^ pats.size());
    for (uint32_t p : pats) h = Rng::mix64(h ^ p);
  }
  return h;
}

EquivalenceSignature signature_of(const IntensionalClass& ic, std::span<const int> u, int cap) {
  check_cap(u, cap, "signature_of");
  return signature_from_traceset(ic.trace_set(u));
}

bool equivalent_on(const IntensionalClass& a, const IntensionalClass& b, std::span<const int> u,
                   int cap) {
  check_cap(u, cap, "equivalent_on");
  TraceSet ta = a.trace_set(u), tb = b.trace_set(u);
  if (canonical_key(ta) == canonical_key(tb)) return true;
  if (total_unconstrained(ta) && total_unconstrained(tb)) {
    // Restrictions on subsets are projections, so equality on u decides; the
    // keys differ, hence the restrictions on u differ.
    return false;
  }
  return signature_from_traceset(ta) == signature_from_traceset(tb);
}

TauResult tau_of_set(const Collection& c, std::span<const int> u, int cap) {
  check_cap(u, cap, "tau_of_set");
  size_t n = c.members.size();

  std::vector<TraceSet> tsets;
  tsets.reserve(n);
  for (const auto& m : c.members) tsets.push_back(m.trace_set(u));

  // Group identical trace sets first.
  std::map<std::vector<uint64_t>, std::vector<size_t>> by_key;
  std::vector<const std::vector<size_t>*> key_groups;  // in first-appearance order
  for (size_t i = 0; i < n; ++i) {
    auto key = canonical_key(tsets[i]);
    auto [it, fresh] = by_key.try_emplace(std::move(key));
    it->second.push_back(i);
    if (fresh) key_groups.push_back(&it->second);
  }

  // Key groups of unconstrained total classes are mutually inequivalent, so
  // signatures are only needed where stars or active constraints appear.
  struct Group {
    size_t rep;
    bool plain;
    bool has_sig = false;
    EquivalenceSignature sig;
    uint64_t sig_hash = 0;
    int cls = -1;
  };
  std::vector<Group> groups;
  for (const auto* g : key_groups)
    groups.push_back({g->front(), total_unconstrained(tsets[g->front()])});

  auto ensure_sig = [&](Group& g) {
    if (!g.has_sig) {
      g.sig = signature_from_traceset(tsets[g.rep]);
      g.sig_hash = g.sig.hash();
      g.has_sig = true;
    }
  };

  int next_cls = 0;
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    Group& g = groups[gi];
    if (!g.plain) {
      ensure_sig(g);
      for (size_t gj = 0; gj < gi; ++gj) {
        Group& h = groups[gj];
        ensure_sig(h);
        if (h.sig_hash == g.sig_hash && h.sig == g.sig) {
          g.cls = h.cls;
          break;
        }
      }
    }
    if (g.cls < 0) g.cls = next_cls++;
  }

  TauResult res;
  res.tau = next_cls;
  res.member_class.assign(n, -1);
  {
    size_t gi = 0;
    for (const auto* grp : key_groups) {
      for (size_t i : *grp) res.member_class[i] = groups[gi].cls;
      ++gi;
    }
  }
  // Renumber by first appearance over members.
  std::vector<int> remap(next_cls, -1);
  int id = 0;
  for (auto& cls : res.member_class) {
    if (remap[cls] < 0) remap[cls] = id++;
    cls = remap[cls];
  }
  return res;
}

TauOfM tau_of_m(const Collection& c, int m, TauMode mode, int trials, Rng* rng, int cap) {
  require_input(m >= 1, "tau_of_m: m must be positive");
  int n = c.domain_size();
  int eff = std::min(m, n);
  if (eff > cap)
    throw ResourceError("tau_of_m: set size exceeds the signature cap (2^|U| subsets)");

  std::vector<int> pts;
  int best = 0;
  if (mode == TauMode::Exact) {
    // C(n, eff) subsets; refuse when the enumeration is clearly infeasible.
    double count = 1.0;
    for (int i = 0; i < eff; ++i) count = count * (n - i) / (i + 1);
    if (n > 24 || count > 500000.0)
      throw ResourceError("tau_of_m: exact enumeration infeasible; use the sampled mode");
    std::vector<int> idx(eff);
    for (int i = 0; i < eff; ++i) idx[i] = i;
    while (true) {
      best = std::max(best, tau_of_set(c, idx, cap).tau);
      int i = eff - 1;
      while (i >= 0 && idx[i] == n - eff + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < eff; ++j) idx[j] = idx[j - 1] + 1;
    }
    return TauOfM{best, TauMode::Exact};
  }
  require_input(rng != nullptr, "tau_of_m: sampled mode needs an rng");
  for (int t = 0; t < trials; ++t) {
    Rng r = rng->split(t);
    auto subset = r.sample_without_replacement(n, eff);
    std::sort(subset.begin(), subset.end());
    best = std::max(best, tau_of_set(c, subset, cap).tau);
  }
  return TauOfM{best, TauMode::SampledLowerBound};
}

int tau_dist_estimate(const Collection& c, const FiniteDistribution& d, int m, double delta,
                      int trials, Rng& rng, int cap) {
  require_input(trials > 0, "tau_dist_estimate: trials must be positive");
  std::vector<int> vals;
  vals.reserve(trials);
  for (int t = 0; t < trials; ++t) {
    Rng r = rng.split(t);
    LabeledSample s = d.sample(m, r);
    auto pts = s.domain_points();
    vals.push_back(tau_of_set(c, pts, cap).tau);
  }
  return ceiling_quantile(std::move(vals), delta);
}

int growth_function_pi(const ExplicitClass& c, std::span<const int> u, int cap) {
  check_cap(u, cap, "growth_function_pi");
  return static_cast<int>(restrict_class(c, u).size());
}

}  // namespace pcc
