#pragma once

#include <bit>
#include <compare>
#include <cstdint>

#include "pcc/errors.hpp"

namespace pcc {

inline uint64_t low_mask(int width) {
  return width >= 64 ? ~0ULL : ((1ULL << width) - 1);
}

// A hypothesis viewed through an ordered point subset U with |U| <= 64.
// Bit j of the masks refers to position j of U. `ones` is a subset of
// `defined`; positions outside `defined` carry the star label.
struct PartialTrace {
  uint64_t defined = 0;
  uint64_t ones = 0;
  int width = 0;

  bool total() const { return defined == low_mask(width); }
  bool total_on(uint64_t tmask) const { return (defined & tmask) == tmask; }

  // Packs the labels at the positions of tmask, first position in the most
  // significant bit, so numeric order on patterns is lexicographic order on
  // label strings. Requires total_on(tmask) and popcount(tmask) <= 32.
  uint32_t pattern_on(uint64_t tmask) const {
    uint32_t key = 0;
    uint64_t m = tmask;
    while (m != 0) {
      int j = std::countr_zero(m);
      key = (key << 1) | static_cast<uint32_t>((ones >> j) & 1);
      m &= m - 1;
    }
    return key;
  }

  friend bool operator==(const PartialTrace&, const PartialTrace&) = default;
  friend std::strong_ordering operator<=>(const PartialTrace& a, const PartialTrace& b) {
    if (auto c = a.width <=> b.width; c != 0) return c;
    if (auto c = a.defined <=> b.defined; c != 0) return c;
    return a.ones <=> b.ones;
  }
};

}  // namespace pcc
