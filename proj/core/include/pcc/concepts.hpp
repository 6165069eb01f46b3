#pragma once

#include <span>
#include <vector>

#include "pcc/caps.hpp"
#include "pcc/domain.hpp"
#include "pcc/ratio.hpp"
#include "pcc/traceset.hpp"

namespace pcc {

// Deduplicated traces (stars kept) of the class members on u.
std::vector<PartialTrace> traces_on(const ExplicitClass& c, std::span<const int> u);

// H|_u: the total behaviours on u, sorted lexicographically. Behaviours with
// a star anywhere on u are dropped.
std::vector<uint32_t> restrict_class(const ExplicitClass& c, std::span<const int> u);

TraceSet trace_set(const ExplicitClass& c, std::span<const int> u);

// Fraction of pairs with h(x) != y; a star never matches a label.
Ratio err_sample(const Hypothesis& h, const LabeledSample& s);

// Mass of atoms with h(x) != y, exact over the explicit distribution.
double err_dist(const Hypothesis& h, const FiniteDistribution& d);

// min over members (finite class, so inf = min).
double err_class_dist(const ExplicitClass& c, const FiniteDistribution& d);
Ratio err_class_sample(const ExplicitClass& c, const LabeledSample& s);

struct VcResult {
  int vc = 0;
  // False when the class has no total behaviour on all of u.
  bool has_total_behaviour = true;
};

// Largest subset T of u with restrict(c, T) = {0,1}^T, brute force descending
// with early exit; |u| above the cap is a resource error.
VcResult vc_of_restriction(const ExplicitClass& c, std::span<const int> u, int cap = default_caps().vc_cap);

// Empirical ceiling (1-delta)-quantile of vc(c, dom(S)) over samples S ~ D^m.
int vc_dist_estimate(const ExplicitClass& c, const FiniteDistribution& d, int m, double delta,
                     int trials, Rng& rng, int cap = default_caps().vc_cap);

inline LabeledSample sample(const FiniteDistribution& d, int m, Rng& rng) {
  return d.sample(m, rng);
}

// Monte Carlo estimate of E min over member traces of err(b, S), S ~ D^n,
// stars counted as errors.
double err_star_estimate(const ExplicitClass& c, const FiniteDistribution& d, int n, int trials,
                         Rng& rng);

// Mass of points whose conditional label probability lies within gamma of 1/2.
double phi_sparseness(const FiniteDistribution& d, double gamma);

// Mass of points x for which some support point z has
// |eta(x) - eta(z)| > L * dist(x, z).
double psi_lipschitz(const FiniteDistribution& d, const Domain& dom, double lipschitz);

// Variant over independent pairs (x, z): mass of pairs violating the bound.
double psi_lipschitz_pairwise(const FiniteDistribution& d, const Domain& dom, double lipschitz);

// Empirical ceiling quantile helper shared by the vc and tau estimators:
// smallest observed value v such that at least ceil((1-delta) * trials)
// observations are <= v.
int ceiling_quantile(std::vector<int> values, double delta);

}  // namespace pcc
