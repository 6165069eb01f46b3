#pragma once

#include <optional>
#include <string>

#include "pcc/groupings.hpp"

namespace pcc {

// Seeded generators for synthetic instances used by the experiment harness.

inline ExplicitClass random_total_class(int n, int count, Rng& rng,
                                        std::string name = "rand") {
  std::vector<Hypothesis> hs;
  for (int i = 0; i < count; ++i) {
    Hypothesis h(n, Label::Zero);
    for (int j = 0; j < n; ++j)
      if (rng.next_bool()) h.set(j, Label::One);
    hs.push_back(std::move(h));
  }
  return ExplicitClass(std::move(name), std::move(hs));
}

// star_pct percent of entries independently replaced by stars.
inline ExplicitClass random_partial_class(int n, int count, int star_pct, Rng& rng,
                                          std::string name = "rand") {
  std::vector<Hypothesis> hs;
  for (int i = 0; i < count; ++i) {
    Hypothesis h(n, Label::Zero);
    for (int j = 0; j < n; ++j) {
      if (static_cast<int>(rng.next_below(100)) < star_pct)
        h.set(j, Label::Star);
      else if (rng.next_bool())
        h.set(j, Label::One);
    }
    hs.push_back(std::move(h));
  }
  return ExplicitClass(std::move(name), std::move(hs));
}

// n uniform point draws labeled by a uniformly chosen total behaviour of the
// class on those points; nullopt when the restriction there is empty.
inline std::optional<LabeledSample> random_realizable_sample(const IntensionalClass& c, int n,
                                                             Rng& rng) {
  std::vector<int> pts;
  for (int i = 0; i < n; ++i)
    pts.push_back(static_cast<int>(rng.next_below(static_cast<uint64_t>(c.domain_size()))));
  std::vector<int> u = pts;
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  auto patterns = c.restrict_on(u);
  if (patterns.empty()) return std::nullopt;
  uint32_t b = patterns[rng.next_below(patterns.size())];
  int width = static_cast<int>(u.size());
  LabeledSample s;
  for (int x : pts) {
    int pos = static_cast<int>(std::lower_bound(u.begin(), u.end(), x) - u.begin());
    s.pairs.emplace_back(x, ((b >> (width - 1 - pos)) & 1) ? Label::One : Label::Zero);
  }
  return s;
}

// k nested prefixes of the threshold class, coarse to full.
inline Collection nested_threshold_collection(int n, int k_classes,
                                              const std::string& base_name = "thr") {
  ExplicitClass all = ExplicitClass::thresholds(n);
  std::vector<IntensionalClass> members;
  for (int j = 1; j <= k_classes; ++j) {
    int take = static_cast<int>((static_cast<long long>(j) * (n + 1) + k_classes - 1) / k_classes);
    std::vector<Hypothesis> hs(all.hypotheses().begin(), all.hypotheses().begin() + take);
    members.emplace_back(ExplicitClass(base_name + "_" + std::to_string(j), std::move(hs)));
  }
  return Collection(std::move(members));
}

// Uniform marginal over {0..n-1}, threshold-at-t labels flipped with
// probability `noise`.
inline FiniteDistribution noisy_threshold_distribution(int n, int t_star, double noise) {
  require_input(noise > 0.0 && noise < 0.5, "noisy_threshold_distribution: noise in (0, 0.5)");
  std::vector<FiniteDistribution::Atom> atoms;
  for (int x = 0; x < n; ++x) {
    Label truth = x >= t_star ? Label::One : Label::Zero;
    Label other = truth == Label::One ? Label::Zero : Label::One;
    atoms.push_back({x, truth, (1.0 - noise) / n});
    atoms.push_back({x, other, noise / n});
  }
  return FiniteDistribution(std::move(atoms));
}

// Splits one point off the head cluster per level: n levels, level l keeps
// {0..n-1-l} together. On the full domain every level induces a distinct
// restriction of the cube, so the collection meets the linear growth bound
// with equality.
inline HierarchicalClustering chain_hierarchy(int n) {
  std::vector<std::vector<int>> levels;
  for (int l = 0; l < n; ++l) {
    std::vector<int> part(n);
    int head = n - l;  // points below this index share cluster 0
    for (int x = 0; x < n; ++x) part[x] = x < head ? 0 : x;
    levels.push_back(std::move(part));
  }
  return HierarchicalClustering::from_levels(std::move(levels));
}

// Every function with values in {-levels..levels} * scale; count (2l+1)^n.
inline RealValuedClass grid_functions(int n, int levels, double scale,
                                      std::string name = "grid") {
  RealValuedClass f;
  f.name = std::move(name);
  int base = 2 * levels + 1;
  long long count = 1;
  for (int i = 0; i < n; ++i) {
    count *= base;
    require_input(count <= 200000, "grid_functions: too many functions");
  }
  for (long long idx = 0; idx < count; ++idx) {
    std::vector<double> fn(n);
    long long rest = idx;
    for (int i = 0; i < n; ++i) {
      fn[i] = static_cast<double>(static_cast<int>(rest % base) - levels) * scale;
      rest /= base;
    }
    f.functions.push_back(std::move(fn));
  }
  return f;
}

}  // namespace pcc
