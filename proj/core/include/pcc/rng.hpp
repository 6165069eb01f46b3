#pragma once

#include <cstdint>
#include <vector>

namespace pcc {

// Counter-based pseudorandom generator built on the SplitMix64 finalizer.
//
// The i-th output is mix64(seed + (i+1) * 0x9E3779B97F4A7C15), where mix64 is
// the xor-shift-multiply finalizer from Steele et al.'s SplitMix64. Outputs
// depend only on (seed, counter), not on platform or library version, so any
// language can reproduce a stream from its seed. `split(tag)` derives an
// independent child stream; children with distinct tags never collide with
// each other or with the parent in practice.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), counter_(0) {}

  static uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  uint64_t next_u64() {
    ++counter_;
    return mix64(seed_ + counter_ * 0x9E3779B97F4A7C15ULL);
  }

  // Uniform in [0,1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in {0, ..., n-1} via 128-bit multiply-shift (n must be > 0).
  uint64_t next_below(uint64_t n) {
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  bool next_bool() { return (next_u64() & 1) != 0; }

  // Child stream keyed by `tag`; deterministic regardless of how much the
  // parent has been consumed.
  Rng split(uint64_t tag) const {
    return Rng(mix64(seed_ ^ mix64(tag + 0x632BE59BD9B4E019ULL)));
  }

  // First k positions of a seeded shuffle of {0..n-1} (partial Fisher-Yates).
  std::vector<int> sample_without_replacement(int n, int k) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    for (int i = 0; i < k && i < n; ++i) {
      int j = i + static_cast<int>(next_below(static_cast<uint64_t>(n - i)));
      std::swap(idx[i], idx[j]);
    }
    idx.resize(k < n ? k : n);
    return idx;
  }

  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
  uint64_t counter_;
};

}  // namespace pcc
