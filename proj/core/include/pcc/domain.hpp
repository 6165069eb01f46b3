#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcc/bits.hpp"
#include "pcc/errors.hpp"
#include "pcc/rng.hpp"

namespace pcc {

enum class Label : uint8_t { Zero = 0, One = 1, Star = 2 };

inline char label_char(Label v) { return v == Label::Zero ? '0' : v == Label::One ? '1' : '*'; }

// Finite point set {0..size-1} with an optional metric and an optional
// similarity-weight matrix, both stored dense.
class Domain {
 public:
  explicit Domain(int size) : size_(size) {
    require_input(size > 0, "Domain: size must be positive");
  }

  int size() const { return size_; }

  void set_metric(std::vector<std::vector<double>> m);
  void set_weights(std::vector<std::vector<double>> w);

  bool has_metric() const { return !metric_.empty(); }
  bool has_weights() const { return !weights_.empty(); }

  double dist(int a, int b) const { return metric_[a][b]; }
  double weight(int a, int b) const { return weights_[a][b]; }

  double diameter() const;

  // Points placed i.i.d. uniform in [0,1]^dim with Euclidean distances, so the
  // triangle inequality holds by construction.
  static Domain random_euclidean(int size, int dim, Rng& rng);

 private:
  int size_;
  std::vector<std::vector<double>> metric_;
  std::vector<std::vector<double>> weights_;
};

// Total or partial labelling of the whole domain, two bits per point.
class Hypothesis {
 public:
  Hypothesis() : n_(0) {}
  explicit Hypothesis(int n, Label fill = Label::Star);
  static Hypothesis from_string(const std::string& s);
  static Hypothesis from_labels(const std::vector<Label>& labels);

  int size() const { return n_; }
  Label label(int i) const {
    int w = i >> 6, b = i & 63;
    if (((defined_[w] >> b) & 1) == 0) return Label::Star;
    return ((ones_[w] >> b) & 1) ? Label::One : Label::Zero;
  }
  void set(int i, Label v);
  bool total() const;
  int star_count() const;
  std::string to_string() const;

  // View through an ordered subset U, |U| <= 64.
  PartialTrace trace(std::span<const int> u) const;

  uint64_t hash() const;
  friend bool operator==(const Hypothesis& a, const Hypothesis& b) {
    return a.n_ == b.n_ && a.defined_ == b.defined_ && a.ones_ == b.ones_;
  }
  friend bool operator<(const Hypothesis& a, const Hypothesis& b);

 private:
  int n_;
  std::vector<uint64_t> defined_;
  std::vector<uint64_t> ones_;
};

// Deduplicated, nonempty set of hypotheses over one domain.
class ExplicitClass {
 public:
  ExplicitClass(std::string name, std::vector<Hypothesis> hypotheses);

  const std::string& name() const { return name_; }
  const std::vector<Hypothesis>& hypotheses() const { return hypotheses_; }
  int domain_size() const { return hypotheses_.front().size(); }
  bool all_total() const;

  // h_t(i) = 1 iff i >= t, for t = 0..n (n+1 hypotheses).
  static ExplicitClass thresholds(int n, std::string name = "thresholds");
  // All 2^n total label vectors; n <= 20.
  static ExplicitClass full_cube(int n, std::string name = "cube");

 private:
  std::string name_;
  std::vector<Hypothesis> hypotheses_;
};

// Sequence of (point, binary label) pairs; repeats allowed.
struct LabeledSample {
  std::vector<std::pair<int, Label>> pairs;

  int size() const { return static_cast<int>(pairs.size()); }
  // Distinct points in ascending order.
  std::vector<int> domain_points() const;
};

// Explicit probability mass over (point, label) atoms.
class FiniteDistribution {
 public:
  struct Atom {
    int point;
    Label label;  // Zero or One
    double prob;
  };

  explicit FiniteDistribution(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  // P(X = x) and P(Y = 1 | X = x); eta requires marginal(x) > 0.
  double marginal(int x) const;
  double eta(int x) const;
  std::vector<int> support_points() const;

  LabeledSample sample(int m, Rng& rng) const;

  static FiniteDistribution uniform_over(const std::vector<int>& points, const Hypothesis& labeler);

 private:
  std::vector<Atom> atoms_;
  std::vector<double> cumulative_;
};

// Total prediction over the whole domain, with the record of how it was chosen.
struct Predictor {
  Hypothesis labels;
  std::string class_name;          // empty for baselines
  std::vector<int> compression;    // index sequence into the training sample
  double bound = 0.0;              // selection score of the chosen row
};

}  // namespace pcc
