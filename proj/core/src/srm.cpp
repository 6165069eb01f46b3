#include "pcc/srm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace pcc {

WeightedCollection::WeightedCollection(Collection c, std::vector<double> w, std::vector<int> vc)
    : collection(std::move(c)), weights(std::move(w)), declared_vc(std::move(vc)) {
  require_input(weights.size() == collection.members.size(),
                "WeightedCollection: one weight per member");
  double total = 0.0;
  for (double x : weights) {
    require_input(x > 0.0, "WeightedCollection: weights must be positive");
    total += x;
  }
  require_input(total <= 1.0 + 1e-12, "WeightedCollection: weights must sum to at most 1");
  if (declared_vc.empty()) declared_vc.assign(weights.size(), -1);
  require_input(declared_vc.size() == weights.size(),
                "WeightedCollection: one declared vc per member");
}

std::pair<Predictor, SrmLedger> srm_learn(const WeightedCollection& wc, const LabeledSample& s,
                                          double delta, int vc_cap) {
  require_input(s.size() >= 1, "srm_learn: empty sample");
  require_input(delta > 0.0 && delta < 1.0, "srm_learn: delta must lie in (0,1)");
  const auto& members = wc.collection.members;

  SrmLedger ledger;
  ledger.delta = delta;
  ledger.m = s.size();

  // Per-class penalty; vc is the worst-case dimension of the class.
  std::vector<double> penalty(members.size());
  std::vector<int> all_points(members.front().domain_size());
  for (size_t i = 0; i < all_points.size(); ++i) all_points[i] = static_cast<int>(i);
  for (size_t n = 0; n < members.size(); ++n) {
    int vc = wc.declared_vc[n];
    if (vc < 0) vc = members[n].vc_of_restriction(all_points, vc_cap).vc;
    penalty[n] = std::sqrt((static_cast<double>(vc) + std::log(1.0 / wc.weights[n]) +
                            std::log(1.0 / delta)) /
                           static_cast<double>(s.size()));
  }

  // Distinct sample contents; hypothesis error is a weighted lookup.
  std::map<std::pair<int, Label>, long long> counts;
  for (const auto& p : s.pairs) counts[p] += 1;

  std::vector<Hypothesis> seen;  // already scored with an earlier class
  int best = -1;
  for (size_t n = 0; n < members.size(); ++n) {
    require_input(members[n].base().all_total() && !members[n].constraint().active(),
                  "srm_learn: members must be total unconstrained classes");
    for (const auto& h : members[n].base().hypotheses()) {
      if (std::binary_search(seen.begin(), seen.end(), h)) continue;
      long long wrong = 0;
      for (const auto& [pt, cnt] : counts)
        if (h.label(pt.first) != pt.second) wrong += cnt;
      SrmRow row;
      row.hypothesis = h;
      row.class_index = static_cast<int>(n);
      row.emp_err = Ratio::of(wrong, s.size());
      row.penalty = penalty[n];
      row.score = row.emp_err.value() + row.penalty;
      ledger.rows.push_back(std::move(row));
      int r = static_cast<int>(ledger.rows.size()) - 1;
      if (best < 0)
        best = r;
      else {
        const SrmRow& a = ledger.rows[r];
        const SrmRow& b = ledger.rows[best];
        if (a.score < b.score ||
            (a.score == b.score &&
             (a.class_index < b.class_index ||
              (a.class_index == b.class_index && a.hypothesis < b.hypothesis))))
          best = r;
      }
    }
    // Rebuild the dedup index including this class's hypotheses.
    for (const auto& h : members[n].base().hypotheses()) seen.push_back(h);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  }
  ledger.rows[best].selected = true;

  Predictor pred;
  pred.labels = ledger.rows[best].hypothesis;
  pred.class_name = members[ledger.rows[best].class_index].name();
  pred.bound = ledger.rows[best].score;
  return {std::move(pred), std::move(ledger)};
}

double log_inv_weight(WeightRule rule, int n) {
  double ln2 = std::log(2.0);
  if (rule == WeightRule::Geometric) return static_cast<double>(n) * ln2;
  return std::ldexp(1.0, n) * ln2;  // 2^n * ln 2
}

AdversarialInstance adversarial_instance(int m, double delta, WeightRule rule, int n_trunc,
                                         double c1, double c2) {
  require_input(m >= 2, "adversarial_instance: m must be at least 2");
  require_input(delta > 0.0 && delta < 1.0, "adversarial_instance: delta must lie in (0,1)");

  double dm = static_cast<double>(m);
  double rhs = 0.5 + c1 * std::sqrt(std::log(1.0 / delta) / dm) +
               c2 * std::sqrt((log_inv_weight(rule, 1) + std::log(1.0 / delta)) / dm);
  int w0 = 1;
  while (!(std::sqrt(static_cast<double>(w0) / dm) > rhs)) ++w0;

  int m0 = 1;
  while (log_inv_weight(rule, m0) < static_cast<double>(w0)) {
    ++m0;
    if (m0 > 16)
      throw ResourceError(
          "adversarial_instance: m0 exceeds 16, the explicit cube classes are too large; "
          "use a faster-decaying weight rule");
  }

  int required = (m0 + 1) * (m0 + 1) + m0 + 1;
  if (n_trunc == 0) n_trunc = required;
  if (n_trunc < required) {
    std::ostringstream os;
    os << "adversarial_instance: truncation " << n_trunc << " too small, need at least "
       << required;
    throw InputError(os.str());
  }

  // Natural number i lives at index i-1. Class n: free cube on
  // [n(n-1)+1, n^2], constant 1 elsewhere, plus the hypothesis with zeros on
  // [n^2+1, n^2+ceil(n/2)].
  std::vector<IntensionalClass> members;
  std::vector<double> weights;
  std::vector<int> vcs;
  Hypothesis target;
  for (int n = 1; n <= m0; ++n) {
    int block_lo = n * (n - 1);  // 0-based, inclusive
    std::vector<Hypothesis> hs;
    hs.reserve((1u << n) + 1);
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      Hypothesis h(n_trunc, Label::One);
      for (int j = 0; j < n; ++j)
        if (((mask >> j) & 1) == 0) h.set(block_lo + j, Label::Zero);
      hs.push_back(std::move(h));
    }
    Hypothesis star(n_trunc, Label::One);
    int zeros = (n + 1) / 2;
    for (int j = 0; j < zeros; ++j) star.set(n * n + j, Label::Zero);
    hs.push_back(star);
    if (n == m0) target = star;
    members.emplace_back(ExplicitClass("H_" + std::to_string(n), std::move(hs)));
    weights.push_back(std::exp(-log_inv_weight(rule, n)));
    require_input(weights.back() > 0.0,
                  "adversarial_instance: weight underflow; lower m or slow the rule");
    vcs.push_back(n);
  }

  std::vector<int> support;
  for (int j = 0; j <= m0; ++j) support.push_back(m0 * m0 + j);
  FiniteDistribution dist = FiniteDistribution::uniform_over(support, target);

  AdversarialInstance inst{
      WeightedCollection(Collection(members), std::move(weights), std::move(vcs)),
      Collection(std::move(members)),
      std::move(dist),
      m0,
      n_trunc,
      std::move(target),
      static_cast<double>((m0 + 1) / 2) / static_cast<double>(m0 + 1)};
  return inst;
}

}  // namespace pcc
