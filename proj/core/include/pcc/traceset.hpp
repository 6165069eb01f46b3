#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "pcc/bits.hpp"
#include "pcc/errors.hpp"

namespace pcc {

// The behaviours a class induces on an ordered subset U, deduplicated, plus
// (for constrained classes) the forbidden-tuple masks each behaviour violates.
// Every restriction, shattering and equivalence question on subsets of U can
// be answered from this view alone: whether a trace contributes to the
// restriction on T <= U depends only on its labels inside U and on which
// violated tuples lie inside T.
struct TraceSet {
  int width = 0;
  std::vector<PartialTrace> traces;
  // Parallel to traces. violated[i] holds masks (within U) of penalized tuples
  // on which trace i shows a forbidden pattern; empty for unconstrained classes.
  std::vector<std::vector<uint64_t>> violated;

  bool admits(size_t idx, uint64_t tmask) const {
    if (!traces[idx].total_on(tmask)) return false;
    if (!violated.empty()) {
      for (uint64_t v : violated[idx])
        if ((v & ~tmask) == 0) return false;
    }
    return true;
  }

  // Sorted distinct total patterns on the positions of tmask (MSB-first keys,
  // so ascending numeric order is lexicographic order).
  std::vector<uint32_t> restriction(uint64_t tmask) const {
    std::vector<uint32_t> out;
    for (size_t i = 0; i < traces.size(); ++i)
      if (admits(i, tmask)) out.push_back(traces[i].pattern_on(tmask));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool shatters(uint64_t tmask) const {
    int t = std::popcount(tmask);
    if (t > 25) throw ResourceError("TraceSet::shatters: subset too large");
    uint32_t want = 1u << t;
    std::vector<bool> seen(want, false);
    uint32_t found = 0;
    for (size_t i = 0; i < traces.size() && found < want; ++i) {
      if (!admits(i, tmask)) continue;
      uint32_t p = traces[i].pattern_on(tmask);
      if (!seen[p]) {
        seen[p] = true;
        ++found;
      }
    }
    return found == want;
  }

  // Largest |T|, T a subset of U, whose restriction is the full cube. Scans
  // sizes descending with a log2(#traces) start bound and exits on the first
  // shattered subset.
  int vc(int cap) const {
    int bound = width < cap ? width : cap;
    int lg = 0;
    while ((size_t{1} << (lg + 1)) <= traces.size()) ++lg;
    if (lg < bound) bound = lg;
    if (traces.empty()) return 0;
    for (int t = bound; t >= 1; --t) {
      // Gosper's hack over all width-choose-t masks.
      uint64_t mask = (1ULL << t) - 1;
      uint64_t limit = 1ULL << width;
      while (mask < limit) {
        if (shatters(mask)) return t;
        uint64_t c = mask & -mask;
        uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
      }
    }
    return 0;
  }

  bool has_total_on_full() const {
    uint64_t full = low_mask(width);
    for (size_t i = 0; i < traces.size(); ++i)
      if (admits(i, full)) return true;
    return false;
  }
};

inline void sort_dedup_traces(std::vector<PartialTrace>& ts) {
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
}

}  // namespace pcc
