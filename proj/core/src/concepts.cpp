#include "pcc/concepts.hpp"

#include <algorithm>
#include <cmath>

namespace pcc {

std::vector<PartialTrace> traces_on(const ExplicitClass& c, std::span<const int> u) {
  std::vector<PartialTrace> ts;
  ts.reserve(c.hypotheses().size());
  for (const auto& h : c.hypotheses()) ts.push_back(h.trace(u));
  sort_dedup_traces(ts);
  return ts;
}

TraceSet trace_set(const ExplicitClass& c, std::span<const int> u) {
  TraceSet t;
  t.width = static_cast<int>(u.size());
  t.traces = traces_on(c, u);
  return t;
}

std::vector<uint32_t> restrict_class(const ExplicitClass& c, std::span<const int> u) {
  return trace_set(c, u).restriction(low_mask(static_cast<int>(u.size())));
}

Ratio err_sample(const Hypothesis& h, const LabeledSample& s) {
  require_input(s.size() > 0, "err_sample: empty sample");
  long long bad = 0;
  for (const auto& [x, y] : s.pairs)
    if (h.label(x) != y) ++bad;
  return Ratio::of(bad, s.size());
}

double err_dist(const Hypothesis& h, const FiniteDistribution& d) {
  double e = 0.0;
  for (const auto& a : d.atoms())
    if (h.label(a.point) != a.label) e += a.prob;
  return e;
}

double err_class_dist(const ExplicitClass& c, const FiniteDistribution& d) {
  double best = 1.0;
  for (const auto& h : c.hypotheses()) best = std::min(best, err_dist(h, d));
  return best;
}

Ratio err_class_sample(const ExplicitClass& c, const LabeledSample& s) {
  require_input(s.size() > 0, "err_class_sample: empty sample");
  Ratio best = Ratio::of(1, 1);
  for (const auto& h : c.hypotheses()) best = std::min(best, err_sample(h, s));
  return best;
}

VcResult vc_of_restriction(const ExplicitClass& c, std::span<const int> u, int cap) {
  if (static_cast<int>(u.size()) > cap)
    throw ResourceError("vc_of_restriction: |U| exceeds the enumeration cap");
  TraceSet ts = trace_set(c, u);
  return VcResult{ts.vc(cap), ts.has_total_on_full()};
}

int ceiling_quantile(std::vector<int> values, double delta) {
  require_input(!values.empty(), "ceiling_quantile: no observations");
  std::sort(values.begin(), values.end());
  auto need = static_cast<size_t>(
      std::ceil((1.0 - delta) * static_cast<double>(values.size())));
  if (need == 0) need = 1;
  if (need > values.size()) need = values.size();
  return values[need - 1];
}

int vc_dist_estimate(const ExplicitClass& c, const FiniteDistribution& d, int m, double delta,
                     int trials, Rng& rng, int cap) {
  require_input(trials > 0, "vc_dist_estimate: trials must be positive");
  std::vector<int> vals;
  vals.reserve(trials);
  for (int t = 0; t < trials; ++t) {
    Rng r = rng.split(t);
    LabeledSample s = d.sample(m, r);
    auto pts = s.domain_points();
    vals.push_back(vc_of_restriction(c, pts, cap).vc);
  }
  return ceiling_quantile(std::move(vals), delta);
}

double err_star_estimate(const ExplicitClass& c, const FiniteDistribution& d, int n, int trials,
                         Rng& rng) {
  require_input(n >= 1 && trials >= 1, "err_star_estimate: n and trials must be >= 1");
  double acc = 0.0;
  for (int t = 0; t < trials; ++t) {
    Rng r = rng.split(t);
    LabeledSample s = d.sample(n, r);
    acc += err_class_sample(c, s).value();
  }
  return acc / static_cast<double>(trials);
}

double phi_sparseness(const FiniteDistribution& d, double gamma) {
  require_input(gamma >= 0.0, "phi_sparseness: gamma must be nonnegative");
  double mass = 0.0;
  for (int x : d.support_points())
    if (std::abs(d.eta(x) - 0.5) <= gamma) mass += d.marginal(x);
  return mass;
}

double psi_lipschitz(const FiniteDistribution& d, const Domain& dom, double lipschitz) {
  require_input(dom.has_metric(), "psi_lipschitz: domain has no metric");
  auto pts = d.support_points();
  double mass = 0.0;
  for (int x : pts) {
    bool far = false;
    for (int z : pts)
      if (std::abs(d.eta(x) - d.eta(z)) > lipschitz * dom.dist(x, z)) {
        far = true;
        break;
      }
    if (far) mass += d.marginal(x);
  }
  return mass;
}

double psi_lipschitz_pairwise(const FiniteDistribution& d, const Domain& dom, double lipschitz) {
  require_input(dom.has_metric(), "psi_lipschitz_pairwise: domain has no metric");
  auto pts = d.support_points();
  double mass = 0.0;
  for (int x : pts)
    for (int z : pts)
      if (std::abs(d.eta(x) - d.eta(z)) > lipschitz * dom.dist(x, z))
        mass += d.marginal(x) * d.marginal(z);
  return mass;
}

}  // namespace pcc
