#include "pcc/domain.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace pcc {

void Domain::set_metric(std::vector<std::vector<double>> m) {
  require_input(static_cast<int>(m.size()) == size_, "Domain: metric must be NxN");
  for (int i = 0; i < size_; ++i) {
    require_input(static_cast<int>(m[i].size()) == size_, "Domain: metric must be NxN");
    require_input(m[i][i] == 0.0, "Domain: metric diagonal must be zero");
    for (int j = 0; j < size_; ++j) {
      require_input(m[i][j] >= 0.0, "Domain: metric entries must be nonnegative");
      require_input(m[i][j] == m[j][i], "Domain: metric must be symmetric");
    }
  }
  metric_ = std::move(m);
}

void Domain::set_weights(std::vector<std::vector<double>> w) {
  require_input(static_cast<int>(w.size()) == size_, "Domain: weights must be NxN");
  for (int i = 0; i < size_; ++i) {
    require_input(static_cast<int>(w[i].size()) == size_, "Domain: weights must be NxN");
    for (int j = 0; j < size_; ++j) {
      require_input(w[i][j] >= 0.0 && w[i][j] <= 1.0, "Domain: weights must lie in [0,1]");
      require_input(w[i][j] == w[j][i], "Domain: weights must be symmetric");
    }
  }
  weights_ = std::move(w);
}

double Domain::diameter() const {
  require_input(has_metric(), "Domain: diameter requires a metric");
  double d = 0.0;
  for (int i = 0; i < size_; ++i)
    for (int j = i + 1; j < size_; ++j) d = std::max(d, metric_[i][j]);
  return d;
}

Domain Domain::random_euclidean(int size, int dim, Rng& rng) {
  std::vector<std::vector<double>> coords(size, std::vector<double>(dim));
  for (auto& p : coords)
    for (auto& c : p) c = rng.next_double();
  std::vector<std::vector<double>> m(size, std::vector<double>(size, 0.0));
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j) {
      double s = 0.0;
      for (int d = 0; d < dim; ++d) {
        double diff = coords[i][d] - coords[j][d];
        s += diff * diff;
      }
      m[i][j] = m[j][i] = std::sqrt(s);
    }
  Domain dom(size);
  dom.set_metric(std::move(m));
  return dom;
}

Hypothesis::Hypothesis(int n, Label fill) : n_(n) {
  require_input(n >= 0, "Hypothesis: negative length");
  int words = (n + 63) / 64;
  defined_.assign(words, 0);
  ones_.assign(words, 0);
  if (fill != Label::Star) {
    for (int i = 0; i < n; ++i) set(i, fill);
  }
}

Hypothesis Hypothesis::from_string(const std::string& s) {
  Hypothesis h(static_cast<int>(s.size()));
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    char c = s[i];
    require_input(c == '0' || c == '1' || c == '*', "Hypothesis: characters must be 0, 1 or *");
    h.set(i, c == '0' ? Label::Zero : c == '1' ? Label::One : Label::Star);
  }
  return h;
}

Hypothesis Hypothesis::from_labels(const std::vector<Label>& labels) {
  Hypothesis h(static_cast<int>(labels.size()));
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) h.set(i, labels[i]);
  return h;
}

void Hypothesis::set(int i, Label v) {
  require_input(i >= 0 && i < n_, "Hypothesis: index out of range");
  int w = i >> 6, b = i & 63;
  uint64_t bit = 1ULL << b;
  if (v == Label::Star) {
    defined_[w] &= ~bit;
    ones_[w] &= ~bit;
  } else {
    defined_[w] |= bit;
    if (v == Label::One)
      ones_[w] |= bit;
    else
      ones_[w] &= ~bit;
  }
}

bool Hypothesis::total() const { return star_count() == 0; }

int Hypothesis::star_count() const {
  int defined = 0;
  for (uint64_t w : defined_) defined += std::popcount(w);
  return n_ - defined;
}

std::string Hypothesis::to_string() const {
  std::string s(n_, '?');
  for (int i = 0; i < n_; ++i) s[i] = label_char(label(i));
  return s;
}

PartialTrace Hypothesis::trace(std::span<const int> u) const {
  require_input(u.size() <= 64, "Hypothesis::trace: subset wider than 64 points");
  PartialTrace t;
  t.width = static_cast<int>(u.size());
  for (int j = 0; j < t.width; ++j) {
    int i = u[j];
    require_input(i >= 0 && i < n_, "Hypothesis::trace: point out of range");
    Label v = label(i);
    if (v != Label::Star) {
      t.defined |= 1ULL << j;
      if (v == Label::One) t.ones |= 1ULL << j;
    }
  }
  return t;
}

uint64_t Hypothesis::hash() const {
  uint64_t h = 0xcbf29ce484222325ULL ^ static_cast<uint64_t>(n_);
  for (uint64_t w : defined_) h = Rng::mix64(h ^ w);
  for (uint64_t w : ones_) h = Rng::mix64(h ^ w);
  return h;
}

bool operator<(const Hypothesis& a, const Hypothesis& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  // Pointwise label order 0 < 1 < star, first difference decides.
  for (int i = 0; i < a.n_; ++i) {
    auto la = static_cast<int>(a.label(i)), lb = static_cast<int>(b.label(i));
    if (la != lb) return la < lb;
  }
  return false;
}

ExplicitClass::ExplicitClass(std::string name, std::vector<Hypothesis> hypotheses)
    : name_(std::move(name)), hypotheses_(std::move(hypotheses)) {
  require_input(!hypotheses_.empty(), "ExplicitClass: class must be nonempty");
  int n = hypotheses_.front().size();
  for (const auto& h : hypotheses_)
    require_input(h.size() == n, "ExplicitClass: hypotheses must share one domain");
  std::sort(hypotheses_.begin(), hypotheses_.end());
  hypotheses_.erase(std::unique(hypotheses_.begin(), hypotheses_.end()), hypotheses_.end());
}

bool ExplicitClass::all_total() const {
  for (const auto& h : hypotheses_)
    if (!h.total()) return false;
  return true;
}

ExplicitClass ExplicitClass::thresholds(int n, std::string name) {
  std::vector<Hypothesis> hs;
  for (int t = 0; t <= n; ++t) {
    Hypothesis h(n, Label::Zero);
    for (int i = t; i < n; ++i) h.set(i, Label::One);
    hs.push_back(std::move(h));
  }
  return ExplicitClass(std::move(name), std::move(hs));
}

ExplicitClass ExplicitClass::full_cube(int n, std::string name) {
  require_input(n <= 20, "full_cube: 2^n hypotheses, n capped at 20");
  std::vector<Hypothesis> hs;
  hs.reserve(1u << n);
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    Hypothesis h(n, Label::Zero);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) h.set(i, Label::One);
    hs.push_back(std::move(h));
  }
  return ExplicitClass(std::move(name), std::move(hs));
}

std::vector<int> LabeledSample::domain_points() const {
  std::set<int> pts;
  for (const auto& [x, y] : pairs) pts.insert(x);
  return std::vector<int>(pts.begin(), pts.end());
}

FiniteDistribution::FiniteDistribution(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  require_input(!atoms_.empty(), "FiniteDistribution: no atoms");
  std::sort(atoms_.begin(), atoms_.end(), [](const Atom& a, const Atom& b) {
    return a.point != b.point ? a.point < b.point
                              : static_cast<int>(a.label) < static_cast<int>(b.label);
  });
  double total = 0.0;
  for (size_t i = 0; i < atoms_.size(); ++i) {
    const Atom& a = atoms_[i];
    require_input(a.prob > 0.0, "FiniteDistribution: probabilities must be positive");
    require_input(a.label != Label::Star, "FiniteDistribution: labels must be 0 or 1");
    require_input(a.point >= 0, "FiniteDistribution: negative point index");
    if (i > 0)
      require_input(!(atoms_[i - 1].point == a.point && atoms_[i - 1].label == a.label),
                    "FiniteDistribution: duplicate (point,label) atom");
    total += a.prob;
    cumulative_.push_back(total);
  }
  require_input(std::abs(total - 1.0) <= 1e-12, "FiniteDistribution: probabilities must sum to 1");
}

double FiniteDistribution::marginal(int x) const {
  double p = 0.0;
  for (const Atom& a : atoms_)
    if (a.point == x) p += a.prob;
  return p;
}

double FiniteDistribution::eta(int x) const {
  double p = 0.0, p1 = 0.0;
  for (const Atom& a : atoms_)
    if (a.point == x) {
      p += a.prob;
      if (a.label == Label::One) p1 += a.prob;
    }
  require_input(p > 0.0, "FiniteDistribution::eta: point outside the support");
  return p1 / p;
}

std::vector<int> FiniteDistribution::support_points() const {
  std::set<int> pts;
  for (const Atom& a : atoms_) pts.insert(a.point);
  return std::vector<int>(pts.begin(), pts.end());
}

LabeledSample FiniteDistribution::sample(int m, Rng& rng) const {
  require_input(m >= 1, "FiniteDistribution::sample: m must be >= 1");
  LabeledSample s;
  s.pairs.reserve(m);
  for (int i = 0; i < m; ++i) {
    double u = rng.next_double();
    size_t lo = std::lower_bound(cumulative_.begin(), cumulative_.end(), u) - cumulative_.begin();
    if (lo >= atoms_.size()) lo = atoms_.size() - 1;
    s.pairs.emplace_back(atoms_[lo].point, atoms_[lo].label);
  }
  return s;
}

FiniteDistribution FiniteDistribution::uniform_over(const std::vector<int>& points,
                                                    const Hypothesis& labeler) {
  require_input(!points.empty(), "uniform_over: empty support");
  std::vector<Atom> atoms;
  double p = 1.0 / static_cast<double>(points.size());
  for (int x : points) {
    Label y = labeler.label(x);
    require_input(y != Label::Star, "uniform_over: labeler must be total on the support");
    atoms.push_back({x, y, p});
  }
  return FiniteDistribution(std::move(atoms));
}

}  // namespace pcc
