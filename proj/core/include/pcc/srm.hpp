#pragma once

#include <string>
#include <vector>

#include "pcc/learner.hpp"

namespace pcc {

// A collection with an a priori weighting; weights are positive and sum to at
// most 1. declared_vc lets constructed instances state the worst-case VC of a
// member in closed form; -1 means brute force over the full domain.
struct WeightedCollection {
  Collection collection;
  std::vector<double> weights;
  std::vector<int> declared_vc;

  WeightedCollection(Collection c, std::vector<double> w, std::vector<int> vc = {});
};

struct SrmRow {
  Hypothesis hypothesis;
  int class_index = 0;  // n(h): first class containing the hypothesis
  Ratio emp_err = Ratio::of(0, 1);
  double penalty = 0.0;
  double score = 0.0;
  bool selected = false;
};

struct SrmLedger {
  std::vector<SrmRow> rows;
  double delta = 0.0;
  int m = 0;
};

// Standard SRM: every hypothesis is scored with the class of smallest index
// containing it, err(h,S) + sqrt((vc + ln(1/w) + ln(1/delta)) / m); returns
// the minimizer (ties: smaller class index, then lexicographically smaller
// hypothesis).
std::pair<Predictor, SrmLedger> srm_learn(const WeightedCollection& wc, const LabeledSample& s,
                                          double delta, int vc_cap = default_caps().vc_cap);

enum class WeightRule { Geometric, DoubleExponential };

inline const char* weight_rule_name(WeightRule r) {
  return r == WeightRule::Geometric ? "geometric" : "double-exp";
}

// ln(1/w(n)) for the rule; weights themselves can be subnormal.
double log_inv_weight(WeightRule rule, int n);

struct AdversarialInstance {
  WeightedCollection weighted;  // classes H_1..H_m0, weights w(n)
  Collection plain;             // the same members without weights
  FiniteDistribution dist;
  int m0 = 0;
  int n_trunc = 0;
  Hypothesis target;            // the only low-error hypothesis, in H_m0
  double competitor_err = 0.0;  // exact error of every other hypothesis on dist
};

// The failure instance for standard SRM: class n is a free cube on its own
// block and constant 1 elsewhere, plus one hypothesis with a short zero run
// just past the block; the distribution sits on that zero run and m0 is
// pushed far enough down the weighting that SRM can never afford the class
// containing the realizing hypothesis. c1/c2 are the concentration constants
// in the threshold inequality; n_trunc 0 means the minimal domain size.
AdversarialInstance adversarial_instance(int m, double delta, WeightRule rule, int n_trunc = 0,
                                         double c1 = 1.0, double c2 = 1.0);

}  // namespace pcc
