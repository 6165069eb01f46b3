#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "pcc/growth.hpp"
#include "pcc/oig.hpp"

namespace pcc {

// A compressed representation of a predictor: per-round index blocks into the
// training sample; the predictor is the unweighted majority of the per-block
// one-inclusion predictors. |J| = sum of block sizes <= per_round * rounds()
// (blocks are padded with repeated indices up to per_round where possible;
// repeats do not change a block's predictor).
struct CompressionCandidate {
  std::string class_name;
  std::vector<std::vector<int>> blocks;
  int per_round = 0;

  int rounds() const { return static_cast<int>(blocks.size()); }
  std::vector<int> j_indices() const;
  int j_len() const;
};

Label majority_vote(const IntensionalClass& c, const LabeledSample& s,
                    const CompressionCandidate& cand, int x, OigCache* cache = nullptr);

struct WeakResult {
  bool found = false;
  std::vector<int> indices;  // <= k indices into s
  double weighted_error = 1.0;
};

// Searches for a multiset R of at most k sample points whose one-inclusion
// predictor has weighted error <= 1/3 on s. Exhausts subsets of the distinct
// (point,label) contents in ascending size when that is small enough,
// otherwise tries up to 200 weighted random draws. Failure is a value.
WeakResult weak_learner_search(const IntensionalClass& c, const LabeledSample& s,
                               const std::vector<double>& weights, int k, Rng& rng,
                               OigCache* cache = nullptr);

// Multiplicative-weights boosting of the one-inclusion weak learners until
// the unweighted majority labels all of s_prime correctly; at most
// min(t_max, ceil(18 ln |s'|) + 1) rounds, stopping early once perfect.
// s_prime must be realizable; persistent weak-learner failure throws with the
// failing round in the message.
CompressionCandidate boost(const IntensionalClass& c, const LabeledSample& s_prime, int k,
                           int t_max, Rng& rng, OigCache* cache = nullptr);

inline int boosting_rounds(int sample_size) {
  double t = std::ceil(18.0 * std::log(static_cast<double>(sample_size))) + 1.0;
  return t < 1.0 ? 1 : static_cast<int>(t);
}

struct RealizableSubsequence {
  bool nonempty = false;
  uint32_t behaviour = 0;      // pattern over dom(s), valid when nonempty
  std::vector<int> indices;    // positions of s the behaviour matches
};

// Empirical-risk-minimizing behaviour of the restriction on dom(s) (ties to
// the lexicographically smallest) and the subsequence it labels correctly.
RealizableSubsequence realizable_subsequence(const IntensionalClass& c, const LabeledSample& s);

// Boosting-built candidates for each k in k_grid plus every candidate with at
// most two indices (up to predictor equivalence), deduplicated. k_grid
// defaults to {1..3*vc(dom s)} capped at |s|/2.
std::vector<CompressionCandidate> candidate_compressions(const IntensionalClass& c,
                                                         const LabeledSample& s,
                                                         std::vector<int> k_grid, Rng& rng,
                                                         OigCache* cache = nullptr);

// err + c' * sqrt(((ln tau_hat + |J|) * ln m + ln(1/delta)) / m), natural logs.
double selection_score(double error_on_s, int j_len, int m, double tau_hat, double delta,
                       double c_prime);

struct SelectionRow {
  std::string class_name;
  CompressionCandidate candidate;
  Ratio emp_err = Ratio::of(0, 1);
  double penalty = 0.0;
  double score = 0.0;
  bool selected = false;
};

struct SelectionLedger {
  std::vector<SelectionRow> rows;
  double tau_hat = 1.0;
  std::string tau_mode;
  double delta = 0.0;
  double c_prime = 1.0;
  int m = 0;
};

enum class TauSelect { Sample, Analytic };

// The collection learner: scores every (member, candidate) pair by empirical
// error plus the selection penalty and materializes the winner over the whole
// domain. Ties break to smaller |J|, then earlier member, then lexicographic J.
std::pair<Predictor, SelectionLedger> collection_learn(const Collection& coll,
                                                       const LabeledSample& s, double delta,
                                                       double c_prime, TauSelect tau_mode,
                                                       Rng& rng,
                                                       int cap = default_caps().set_cap);

// Reporting utility: C * sqrt(((vc + ln tau) * ln^2 m + ln(1/delta)) / m).
double theorem_bound(double vc_val, double tau_val, int m, double delta,
                     double big_o_constant = 1.0);

}  // namespace pcc
