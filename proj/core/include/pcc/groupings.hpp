#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcc/caps.hpp"
#include "pcc/concepts.hpp"
#include "pcc/domain.hpp"

namespace pcc {

// Forbidden label patterns on point tuples, graded by a real penalty.
// Penalties are symmetric functions of the tuple; patterns may depend on the
// ordering (the contrastive spec constrains only orderings with
// dist(x, x+) < dist(x, x-)).
struct ForbiddenSpec {
  int arity = 2;
  std::string kind = "custom";
  // Penalty of a sorted tuple of distinct points. +infinity is allowed and
  // means the tuple is constrained at every threshold.
  std::function<double(std::span<const int>)> penalty;
  // Forbidden patterns for an ordered tuple, packed MSB-first (position 0 of
  // the tuple in the most significant bit). May be empty.
  std::function<std::vector<uint32_t>(std::span<const int>)> forbidden;

  // True when some ordering of `sorted_tuple` exhibits a forbidden pattern.
  // `labels` holds the labels of the sorted tuple, packed MSB-first.
  bool violates(std::span<const int> sorted_tuple, uint32_t labels) const;
};

// Pairs with similarity weight >= r must agree. Requires a weight matrix.
ForbiddenSpec similarity_spec(const std::shared_ptr<const Domain>& dom);
// Pairs at distance <= 1/r must agree (penalty 1/dist; +inf for coincident
// distinct points). Requires a metric.
ForbiddenSpec nn_spec(const std::shared_ptr<const Domain>& dom);
// Ordered triplets (x, x+, x-) with dist(x,x+) < dist(x,x-) forbid the
// patterns (0,1,0) and (1,0,1); penalty 1/rad where rad is the smallest
// radius of a domain-centered ball containing all three points.
ForbiddenSpec contrastive_spec(const std::shared_ptr<const Domain>& dom);
// Same-cluster pairs must agree (penalty 1 inside a cluster, 0 across).
ForbiddenSpec cluster_spec(std::vector<int> cluster_of_point);

double contrastive_rad(const Domain& dom, int x, int xp, int xm);

struct Constraint {
  std::shared_ptr<const ForbiddenSpec> spec;  // null = unconstrained
  double threshold = 0.0;                     // tuples with penalty >= threshold are active

  bool active() const { return spec != nullptr; }
};

// A base explicit class (total or partial) plus an optional constraint; its
// restrictions are computed on demand, filtering the constraint only on
// tuples that lie fully inside the queried subset.
class IntensionalClass {
 public:
  IntensionalClass(ExplicitClass base)
      : name_(base.name()), base_(std::move(base)) {}
  IntensionalClass(std::string name, ExplicitClass base, Constraint constraint)
      : name_(std::move(name)), base_(std::move(base)), constraint_(std::move(constraint)) {}

  const std::string& name() const { return name_; }
  const ExplicitClass& base() const { return base_; }
  const Constraint& constraint() const { return constraint_; }
  int domain_size() const { return base_.domain_size(); }

  TraceSet trace_set(std::span<const int> u) const;
  std::vector<uint32_t> restrict_on(std::span<const int> u) const;
  VcResult vc_of_restriction(std::span<const int> u, int cap = default_caps().vc_cap) const;

 private:
  std::string name_;
  ExplicitClass base_;
  Constraint constraint_;
};

inline std::vector<uint32_t> restrict_intensional(const IntensionalClass& ic,
                                                  std::span<const int> u) {
  return ic.restrict_on(u);
}

// Ordered family of intensional classes over one domain. The growth module
// measures equivalence-class counts of these.
struct Collection {
  std::vector<IntensionalClass> members;
  // Conservative closed-form bound on tau as a function of the set size, when
  // the grouping provides one (hierarchies: m; k-tuple penalties: C(m,k)+1).
  std::function<double(int)> analytic_tau;

  explicit Collection(std::vector<IntensionalClass> ms,
                      std::function<double(int)> tau_bound = nullptr);
  int domain_size() const { return members.front().domain_size(); }
};

// Tree of clusterings: level 0 has one cluster, the last level is singletons,
// and each level going down refines the previous one.
class HierarchicalClustering {
 public:
  static HierarchicalClustering from_levels(std::vector<std::vector<int>> levels);
  // Uniformly random merge order; n levels for n points.
  static HierarchicalClustering random(int n, Rng& rng);

  int num_levels() const { return static_cast<int>(levels_.size()); }
  int domain_size() const { return static_cast<int>(levels_.front().size()); }
  const std::vector<int>& level(int i) const { return levels_[i]; }

 private:
  explicit HierarchicalClustering(std::vector<std::vector<int>> levels)
      : levels_(std::move(levels)) {}
  std::vector<std::vector<int>> levels_;
};

// One class per level, root first; nested as restrictions.
Collection hc_collection(const ExplicitClass& base, const HierarchicalClustering& hc);

struct Breakpoints {
  std::vector<double> values;  // distinct, ascending
  std::vector<int> multiplicity;
};

// Distinct penalties over the k-subsets of u.
Breakpoints penalty_breakpoints(const ForbiddenSpec& spec, std::span<const int> u);

// One representative threshold per penalty interval: below the smallest
// breakpoint, between consecutive ones (midpoints), and above the largest.
// Hits every equivalence class of {H(r) : r} on u.
Collection forbidden_collection(const ExplicitClass& base,
                                const std::shared_ptr<const ForbiddenSpec>& spec,
                                std::span<const int> u);
std::vector<double> representative_thresholds(const Breakpoints& bp);

// Largest set shattered by the base subject to the side condition: pairwise
// weight < r / pairwise distance > r / at most two points in any radius-r
// ball centered at a domain point.
int vc_at_weight(const ExplicitClass& base, const Domain& dom, double r,
                 int cap = default_caps().vc_cap);
int vc_at_distance(const ExplicitClass& base, const Domain& dom, double r,
                   int cap = default_caps().vc_cap);
int vc_at_radius(const ExplicitClass& base, const Domain& dom, double r,
                 int cap = default_caps().vc_cap);

// Greedy farthest-point construction starting from point 0; the result is at
// once an r-cover and an r-packing.
std::vector<int> r_net(const Domain& dom, double r);
std::vector<int> r_packing(const Domain& dom, double r);

// --- real-valued classes and margins ---

struct RealValuedClass {
  std::string name;
  std::vector<std::vector<double>> functions;  // one row per function, length N
};

// |f(x)-f(z)| <= L * dist(x,z) over all pairs.
bool is_lipschitz(const std::vector<double>& f, const Domain& dom, double lipschitz);
RealValuedClass lipschitz_subset(const RealValuedClass& f, const Domain& dom, double lipschitz);

// Margin patterns of the Lipschitz members: sign where |f| >= gamma, star
// elsewhere. Labels use sign01: f >= gamma -> 1, f <= -gamma -> 0.
ExplicitClass margin_patterns(const RealValuedClass& f, const Domain& dom, double lipschitz,
                              double gamma);

// The margin patterns constrained by the nearest-neighbour spec at threshold
// L/(2*gamma): pairs closer than 2*gamma/L may not take opposite labels.
IntensionalClass margin_translated_class(const RealValuedClass& f,
                                         const std::shared_ptr<const Domain>& dom,
                                         double lipschitz, double gamma);

std::vector<uint32_t> margin_translate(const RealValuedClass& f,
                                       const std::shared_ptr<const Domain>& dom, double lipschitz,
                                       double gamma, std::span<const int> u);

// Fraction of pairs with y * f(x) < gamma, labels mapped 0 -> -1, 1 -> +1.
Ratio err_gamma(const std::vector<double>& f, const LabeledSample& s, double gamma);
Ratio err_gamma_class(const RealValuedClass& f, const LabeledSample& s, double gamma);

// Largest set U such that for every sign pattern some member satisfies
// b(x) * f(x) >= gamma on U (witness fixed at zero).
int fat_shattering_zero_witness(const RealValuedClass& f, double gamma,
                                int cap = default_caps().vc_cap);

}  // namespace pcc
