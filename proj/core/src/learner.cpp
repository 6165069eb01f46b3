#include "pcc/learner.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace pcc {

namespace {

// Distinct (point,label) contents of a sample with multiplicities. Predictors
// here depend on content only, so searches and error sums run over the
// distinct pairs.
struct Aggregated {
  std::vector<std::pair<int, Label>> pairs;  // sorted distinct
  std::vector<int> count;
  std::vector<int> first_index;
  int total = 0;

  explicit Aggregated(const LabeledSample& s) {
    std::map<std::pair<int, int>, std::pair<int, int>> acc;  // (x,y) -> (count, first)
    for (int i = 0; i < s.size(); ++i) {
      auto key = std::make_pair(s.pairs[i].first, static_cast<int>(s.pairs[i].second));
      auto [it, fresh] = acc.try_emplace(key, std::make_pair(0, i));
      it->second.first += 1;
    }
    for (const auto& [key, val] : acc) {
      pairs.emplace_back(key.first, static_cast<Label>(key.second));
      count.push_back(val.first);
      first_index.push_back(val.second);
    }
    total = s.size();
  }

  LabeledSample pair_sample(int i) const {
    LabeledSample s;
    s.pairs.push_back(pairs[i]);
    return s;
  }
};

LabeledSample subsample(const LabeledSample& s, const std::vector<int>& indices) {
  LabeledSample out;
  out.pairs.reserve(indices.size());
  for (int i : indices) out.pairs.push_back(s.pairs[i]);
  return out;
}

Label majority_of_blocks(const IntensionalClass& c, const LabeledSample& s,
                         const std::vector<std::vector<int>>& blocks, int x, OigCache* cache) {
  int ones = 0, zeros = 0;
  for (const auto& block : blocks) {
    Label v = oig_predict(c, subsample(s, block), x, cache);
    (v == Label::One ? ones : zeros) += 1;
  }
  return ones > zeros ? Label::One : Label::Zero;  // ties toward 0
}

}  // namespace

std::vector<int> CompressionCandidate::j_indices() const {
  std::vector<int> j;
  for (const auto& b : blocks) j.insert(j.end(), b.begin(), b.end());
  return j;
}

int CompressionCandidate::j_len() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

Label majority_vote(const IntensionalClass& c, const LabeledSample& s,
                    const CompressionCandidate& cand, int x, OigCache* cache) {
  for (const auto& block : cand.blocks)
    for (int i : block)
      require_input(i >= 0 && i < s.size(), "majority_vote: candidate index out of range");
  return majority_of_blocks(c, s, cand.blocks, x, cache);
}

namespace {

double weighted_error_of(const IntensionalClass& c, const Aggregated& agg,
                         const std::vector<double>& weights, const LabeledSample& train,
                         OigCache* cache) {
  double err = 0.0;
  for (size_t i = 0; i < agg.pairs.size(); ++i) {
    if (weights[i] == 0.0) continue;
    Label pred = oig_predict(c, train, agg.pairs[i].first, cache);
    if (pred != agg.pairs[i].second) err += weights[i];
  }
  return err;
}

}  // namespace

WeakResult weak_learner_search(const IntensionalClass& c, const LabeledSample& s,
                               const std::vector<double>& weights, int k, Rng& rng,
                               OigCache* cache) {
  require_input(static_cast<int>(weights.size()) == s.size(),
                "weak_learner_search: one weight per sample point");
  Aggregated agg(s);
  std::vector<double> w(agg.pairs.size(), 0.0);
  for (int i = 0; i < s.size(); ++i) {
    auto key = std::make_pair(s.pairs[i].first, s.pairs[i].second);
    size_t d = std::lower_bound(agg.pairs.begin(), agg.pairs.end(), key) - agg.pairs.begin();
    w[d] += weights[i];
  }

  int d = static_cast<int>(agg.pairs.size());
  auto evaluate = [&](const std::vector<int>& distinct_ids) -> std::optional<WeakResult> {
    LabeledSample train;
    for (int id : distinct_ids) train.pairs.push_back(agg.pairs[id]);
    double err = weighted_error_of(c, agg, w, train, cache);
    if (err <= 1.0 / 3.0 + 1e-12) {
      WeakResult res;
      res.found = true;
      for (int id : distinct_ids) res.indices.push_back(agg.first_index[id]);
      std::sort(res.indices.begin(), res.indices.end());
      res.weighted_error = err;
      return res;
    }
    return std::nullopt;
  };

  // Exhaustive over distinct contents, ascending size, when small enough.
  double combos = 1.0, binom = 1.0;
  for (int j = 1; j <= k; ++j) {
    binom = binom * static_cast<double>(d - j + 1) / static_cast<double>(j);
    combos += binom;
    if (combos > 1e5) break;
  }
  if (combos <= 1e5) {
    // Ascending size prefers small R; within a size, lexicographic id order.
    for (int size = 0; size <= k && size <= d; ++size) {
      std::vector<int> comb(size);
      for (int i = 0; i < size; ++i) comb[i] = i;
      if (size == 0) {
        if (auto res = evaluate({})) return *res;
        continue;
      }
      while (true) {
        if (auto res = evaluate(comb)) return *res;
        int i = size - 1;
        while (i >= 0 && comb[i] == d - size + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
      }
    }
    return WeakResult{};
  }

  // Weighted random multisets of size k.
  std::vector<double> cum(w.size());
  double total = 0.0;
  for (size_t i = 0; i < w.size(); ++i) {
    total += w[i];
    cum[i] = total;
  }
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<int> ids;
    for (int j = 0; j < k; ++j) {
      double u = rng.next_double() * total;
      size_t lo = std::lower_bound(cum.begin(), cum.end(), u) - cum.begin();
      if (lo >= cum.size()) lo = cum.size() - 1;
      ids.push_back(static_cast<int>(lo));
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (auto res = evaluate(ids)) return *res;
  }
  return WeakResult{};
}

RealizableSubsequence realizable_subsequence(const IntensionalClass& c, const LabeledSample& s) {
  RealizableSubsequence out;
  std::vector<int> u = s.domain_points();
  require_input(u.size() <= 32, "realizable_subsequence: dom(S) wider than 32 points");
  std::vector<uint32_t> patterns = c.restrict_on(u);
  if (patterns.empty()) return out;

  Aggregated agg(s);
  int width = static_cast<int>(u.size());
  long long best_err = s.size() + 1;
  uint32_t best = 0;
  for (uint32_t b : patterns) {  // ascending = lexicographic; first min wins
    long long err = 0;
    for (size_t i = 0; i < agg.pairs.size(); ++i) {
      int pos = static_cast<int>(std::lower_bound(u.begin(), u.end(), agg.pairs[i].first) -
                                 u.begin());
      int bit = (b >> (width - 1 - pos)) & 1;
      if (bit != (agg.pairs[i].second == Label::One ? 1 : 0)) err += agg.count[i];
    }
    if (err < best_err) {
      best_err = err;
      best = b;
    }
  }
  out.nonempty = true;
  out.behaviour = best;
  for (int i = 0; i < s.size(); ++i) {
    int pos = static_cast<int>(std::lower_bound(u.begin(), u.end(), s.pairs[i].first) - u.begin());
    int bit = (best >> (width - 1 - pos)) & 1;
    if (bit == (s.pairs[i].second == Label::One ? 1 : 0)) out.indices.push_back(i);
  }
  return out;
}

CompressionCandidate boost(const IntensionalClass& c, const LabeledSample& s_prime, int k,
                           int t_max, Rng& rng, OigCache* cache) {
  require_input(s_prime.size() > 0, "boost: empty sample");
  {
    auto rs = realizable_subsequence(c, s_prime);
    require_input(rs.nonempty && static_cast<int>(rs.indices.size()) == s_prime.size(),
                  "boost: sample is not realizable by the class");
  }
  Aggregated agg(s_prime);
  size_t d = agg.pairs.size();
  std::vector<double> w(d);
  for (size_t i = 0; i < d; ++i)
    w[i] = static_cast<double>(agg.count[i]) / static_cast<double>(agg.total);

  int rounds = std::min(t_max, boosting_rounds(s_prime.size()));
  CompressionCandidate cand;
  cand.class_name = c.name();
  cand.per_round = k;
  std::vector<std::vector<Label>> votes;  // per round, per distinct pair

  for (int t = 0; t < rounds; ++t) {
    WeakResult weak;
    for (int attempt = 0; attempt < 5 && !weak.found; ++attempt) {
      // Expand distinct weights back to per-index weights for the search API.
      std::vector<double> wi(s_prime.size(), 0.0);
      for (int i = 0; i < s_prime.size(); ++i) {
        auto key = std::make_pair(s_prime.pairs[i].first, s_prime.pairs[i].second);
        size_t id = std::lower_bound(agg.pairs.begin(), agg.pairs.end(), key) - agg.pairs.begin();
        wi[i] = w[id] / static_cast<double>(agg.count[id]);
      }
      Rng r = rng.split(static_cast<uint64_t>(t) * 8 + attempt);
      weak = weak_learner_search(c, s_prime, wi, k, r, cache);
    }
    if (!weak.found) {
      std::ostringstream os;
      os << "boost: weak learner failed in round " << (t + 1) << " for class " << c.name();
      throw InputError(os.str());
    }
    // Pad to k with a repeated index; repeats leave the block's predictor
    // unchanged. An empty block stays empty.
    std::vector<int> block = weak.indices;
    while (!block.empty() && static_cast<int>(block.size()) < k) block.push_back(block.front());
    LabeledSample train = subsample(s_prime, block);
    std::vector<Label> vote(d);
    double eps = 0.0;
    for (size_t i = 0; i < d; ++i) {
      vote[i] = oig_predict(c, train, agg.pairs[i].first, cache);
      if (vote[i] != agg.pairs[i].second) eps += w[i];
    }
    cand.blocks.push_back(block);
    votes.push_back(std::move(vote));

    // Majority so far; stop as soon as it is perfect on s_prime.
    bool perfect = true;
    for (size_t i = 0; i < d && perfect; ++i) {
      int ones = 0;
      for (const auto& v : votes)
        if (v[i] == Label::One) ++ones;
      Label maj = (2 * ones > static_cast<int>(votes.size())) ? Label::One : Label::Zero;
      perfect = maj == agg.pairs[i].second;
    }
    if (perfect) break;

    double clamped = std::min(std::max(eps, 1e-6), 1.0 / 3.0);
    double alpha = 0.5 * std::log((1.0 - clamped) / clamped);
    double total = 0.0;
    for (size_t i = 0; i < d; ++i) {
      if (votes.back()[i] != agg.pairs[i].second) w[i] *= std::exp(alpha);
      total += w[i];
    }
    for (auto& x : w) x /= total;
  }

  // All blocks empty collapses to the single empty-block candidate.
  bool all_empty = true;
  for (const auto& b : cand.blocks) all_empty = all_empty && b.empty();
  if (all_empty) {
    cand.blocks.assign(1, {});
    cand.per_round = 0;
  }
  return cand;
}

namespace {

std::vector<std::vector<std::pair<int, Label>>> block_contents(const CompressionCandidate& cand,
                                                               const LabeledSample& s) {
  std::vector<std::vector<std::pair<int, Label>>> bs;
  for (const auto& block : cand.blocks) {
    std::vector<std::pair<int, Label>> content;
    for (int i : block) content.push_back(s.pairs[i]);
    std::sort(content.begin(), content.end());
    content.erase(std::unique(content.begin(), content.end()), content.end());
    bs.push_back(std::move(content));
  }
  std::sort(bs.begin(), bs.end());
  return bs;
}

}  // namespace

std::vector<CompressionCandidate> candidate_compressions(const IntensionalClass& c,
                                                         const LabeledSample& s,
                                                         std::vector<int> k_grid, Rng& rng,
                                                         OigCache* cache) {
  std::vector<int> u = s.domain_points();
  if (k_grid.empty()) {
    int vc = c.vc_of_restriction(u).vc;
    for (int k = 1; k <= 3 * vc && k <= s.size() / 2; ++k) k_grid.push_back(k);
  }

  std::vector<CompressionCandidate> out;
  std::set<std::vector<std::vector<std::pair<int, Label>>>> seen;
  auto push = [&](CompressionCandidate cand) {
    if (seen.insert(block_contents(cand, s)).second) out.push_back(std::move(cand));
  };

  // Every candidate with at most two indices, up to content equivalence.
  Aggregated agg(s);
  int d = static_cast<int>(agg.pairs.size());
  push(CompressionCandidate{c.name(), {{}}, 0});
  for (int i = 0; i < d; ++i)
    push(CompressionCandidate{c.name(), {{agg.first_index[i]}}, 1});
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      push(CompressionCandidate{c.name(), {{agg.first_index[i], agg.first_index[j]}}, 2});

  auto rs = realizable_subsequence(c, s);
  if (rs.nonempty && !rs.indices.empty()) {
    LabeledSample sp = subsample(s, rs.indices);
    for (int k : k_grid) {
      CompressionCandidate cand;
      try {
        cand = boost(c, sp, k, boosting_rounds(sp.size()), rng.split(1000 + k), cache);
      } catch (const InputError&) {
        continue;  // weak-learner failure for this k; other candidates remain
      }
      // Remap block indices from s_prime coordinates to s coordinates.
      for (auto& block : cand.blocks)
        for (auto& i : block) i = rs.indices[i];
      push(std::move(cand));
    }
  }
  return out;
}

double selection_score(double error_on_s, int j_len, int m, double tau_hat, double delta,
                       double c_prime) {
  require_input(m >= 2, "selection_score: m must be at least 2");
  require_input(tau_hat >= 1.0, "selection_score: tau_hat must be at least 1");
  double inner = (std::log(tau_hat) + static_cast<double>(j_len)) * std::log(static_cast<double>(m)) +
                 std::log(1.0 / delta);
  return error_on_s + c_prime * std::sqrt(inner / static_cast<double>(m));
}

double theorem_bound(double vc_val, double tau_val, int m, double delta, double big_o_constant) {
  require_input(m >= 2, "theorem_bound: m must be at least 2");
  double lm = std::log(static_cast<double>(m));
  double inner = (vc_val + std::log(tau_val)) * lm * lm + std::log(1.0 / delta);
  return big_o_constant * std::sqrt(inner / static_cast<double>(m));
}

std::pair<Predictor, SelectionLedger> collection_learn(const Collection& coll,
                                                       const LabeledSample& s, double delta,
                                                       double c_prime, TauSelect tau_mode,
                                                       Rng& rng, int cap) {
  require_input(s.size() >= 2, "collection_learn: need at least two sample points");
  require_input(delta > 0.0 && delta < 1.0, "collection_learn: delta must lie in (0,1)");
  std::vector<int> u = s.domain_points();

  SelectionLedger ledger;
  ledger.delta = delta;
  ledger.c_prime = c_prime;
  ledger.m = s.size();
  if (tau_mode == TauSelect::Sample) {
    ledger.tau_hat = static_cast<double>(tau_of_set(coll, u, cap).tau);
    ledger.tau_mode = "sample";
  } else {
    require_input(static_cast<bool>(coll.analytic_tau),
                  "collection_learn: collection has no analytic tau bound");
    ledger.tau_hat = coll.analytic_tau(s.size());
    ledger.tau_mode = "analytic";
  }

  Aggregated agg(s);
  std::vector<OigCache> caches(coll.members.size());
  std::vector<size_t> row_member;
  for (size_t mi = 0; mi < coll.members.size(); ++mi) {
    const IntensionalClass& member = coll.members[mi];
    auto cands = candidate_compressions(member, s, {}, rng.split(mi), &caches[mi]);
    for (auto& cand : cands) {
      long long wrong = 0;
      for (size_t i = 0; i < agg.pairs.size(); ++i) {
        Label pred = majority_of_blocks(member, s, cand.blocks, agg.pairs[i].first, &caches[mi]);
        if (pred != agg.pairs[i].second) wrong += agg.count[i];
      }
      SelectionRow row;
      row.class_name = member.name();
      row.candidate = std::move(cand);
      row.emp_err = Ratio::of(wrong, s.size());
      row.score = selection_score(row.emp_err.value(), row.candidate.j_len(), s.size(),
                                  ledger.tau_hat, delta, c_prime);
      row.penalty = row.score - row.emp_err.value();
      ledger.rows.push_back(std::move(row));
      row_member.push_back(mi);
    }
  }
  require_input(!ledger.rows.empty(), "collection_learn: no candidate was generated");

  size_t best = 0;
  auto key = [&](size_t r) {
    return std::make_tuple(ledger.rows[r].score, ledger.rows[r].candidate.j_len(), row_member[r],
                           ledger.rows[r].candidate.j_indices());
  };
  for (size_t r = 1; r < ledger.rows.size(); ++r)
    if (key(r) < key(best)) best = r;
  ledger.rows[best].selected = true;

  const SelectionRow& win = ledger.rows[best];
  const IntensionalClass& chosen = coll.members[row_member[best]];
  int n = chosen.domain_size();
  Predictor pred;
  pred.labels = Hypothesis(n, Label::Zero);
  for (int x = 0; x < n; ++x)
    pred.labels.set(x, majority_of_blocks(chosen, s, win.candidate.blocks, x,
                                          &caches[row_member[best]]));
  pred.class_name = win.class_name;
  pred.compression = win.candidate.j_indices();
  pred.bound = win.score;
  return {std::move(pred), std::move(ledger)};
}

}  // namespace pcc
