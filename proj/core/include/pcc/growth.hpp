#pragma once

#include <span>
#include <vector>

#include "pcc/groupings.hpp"

namespace pcc {

// Restrictions of one class on every subset of u: by_subset[mask] is the
// sorted pattern list on the positions of mask. Two classes are equivalent on
// u exactly when their signatures coincide. Cost 2^|u|, so |u| is capped.
struct EquivalenceSignature {
  int width = 0;
  std::vector<std::vector<uint32_t>> by_subset;

  friend bool operator==(const EquivalenceSignature&, const EquivalenceSignature&) = default;
  uint64_t hash() const;
};

EquivalenceSignature signature_of(const IntensionalClass& ic, std::span<const int> u,
                                  int cap = default_caps().set_cap);

// Full-signature comparison. Equality of restrictions on u alone is not
// sufficient for partial classes; two cheap sufficient tests run first
// (identical trace sets, and for unconstrained all-total classes equality on
// u itself decides).
bool equivalent_on(const IntensionalClass& a, const IntensionalClass& b, std::span<const int> u,
                   int cap = default_caps().set_cap);

struct TauResult {
  int tau = 0;
  // Equivalence class id per member, numbered by first appearance.
  std::vector<int> member_class;
};

TauResult tau_of_set(const Collection& c, std::span<const int> u,
                     int cap = default_caps().set_cap);

enum class TauMode { Exact, SampledLowerBound };

struct TauOfM {
  int value = 0;
  TauMode mode = TauMode::Exact;
};

// Exact mode enumerates every size-m point set (sets larger than the domain
// collapse to the full domain); sampled mode reports a certified lower bound
// from random subsets.
TauOfM tau_of_m(const Collection& c, int m, TauMode mode, int trials = 200, Rng* rng = nullptr,
                int cap = default_caps().set_cap);

// Empirical ceiling (1-delta)-quantile of tau(dom(S)) over S ~ D^m.
int tau_dist_estimate(const Collection& c, const FiniteDistribution& d, int m, double delta,
                      int trials, Rng& rng, int cap = default_caps().set_cap);

// pi_C(u): number of total behaviours the class induces on u.
int growth_function_pi(const ExplicitClass& c, std::span<const int> u,
                       int cap = default_caps().set_cap);

}  // namespace pcc
