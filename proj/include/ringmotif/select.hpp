#pragma once

#include <algorithm>
#include <cassert>
#include <vector>

#include "ringmotif/enumerate.hpp"
#include "ringmotif/graph.hpp"
#include "ringmotif/pattern.hpp"

namespace ringmotif {

// Off-diagonal cells classified by color (black/white) x membership in the
// selected patterns (mirrors included).  Sums to n^2 - n.
struct PrecisionCounts {
  long long white_out = 0, white_in = 0, black_in = 0, black_out = 0;
};

struct FilterRule {
  enum class Mode { None, Absolute, Relative };
  Mode mode = Mode::None;
  long long min_weight = 0;  // Absolute
  double fraction = 0.0;     // Relative, of the heaviest selected pattern

  static FilterRule none() { return {}; }
  static FilterRule absolute(long long w) {
    FilterRule r;
    r.mode = Mode::Absolute;
    r.min_weight = w;
    return r;
  }
  static FilterRule relative(double f) {
    FilterRule r;
    r.mode = Mode::Relative;
    r.fraction = f;
    return r;
  }

  bool admits(long long w, long long max_selected) const {
    switch (mode) {
      case Mode::None: return true;
      case Mode::Absolute: return w >= min_weight;
      case Mode::Relative: return static_cast<double>(w) >= fraction * max_selected;
    }
    return true;
  }
};

// Maximum-weight set of pairwise non-overlapping clique intervals.  Suffix
// DP over candidates sorted by start, then a forward greedy that always
// takes the (lo, hi)-smallest candidate still reaching the optimum — which
// pins the tie-break to the lexicographically smallest interval set.
inline std::vector<Pattern> select_cliques(std::vector<Pattern> candidates) {
  std::sort(candidates.begin(), candidates.end(), [](const Pattern& a, const Pattern& b) {
    if (a.row_lo != b.row_lo) return a.row_lo < b.row_lo;
    return a.row_hi < b.row_hi;
  });
  int k = static_cast<int>(candidates.size());
  std::vector<int> next(k);
  for (int t = 0; t < k; ++t) {
    int hi = candidates[t].row_hi;
    int a = t + 1, b = k;
    while (a < b) {  // first index whose interval starts after hi
      int mid = (a + b) / 2;
      if (candidates[mid].row_lo > hi)
        b = mid;
      else
        a = mid + 1;
    }
    next[t] = a;
  }
  std::vector<long long> best(k + 1, 0);
  for (int t = k - 1; t >= 0; --t)
    best[t] = std::max(best[t + 1], candidates[t].weight + best[next[t]]);

  std::vector<Pattern> out;
  long long target = best[0];
  int pos = 0;
  while (target > 0) {
    bool found = false;
    for (int u = pos; u < k; ++u)
      if (candidates[u].weight + best[next[u]] == target) {
        out.push_back(candidates[u]);
        target -= candidates[u].weight;
        pos = next[u];
        found = true;
        break;
      }
    if (!found) break;  // unreachable: best[pos] == target by construction
  }
  return out;
}

// Greedy packing of bicliques and stars around the already-selected
// cliques: heaviest first, added iff disjoint from everything selected so
// far and admitted by the filter against the current heaviest selection.
inline std::vector<Pattern> select_rect(std::vector<Pattern> rects, std::vector<Pattern> selected,
                                        const FilterRule& rule) {
  std::sort(rects.begin(), rects.end(), [](const Pattern& a, const Pattern& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    if (a.row_lo != b.row_lo) return a.row_lo < b.row_lo;
    if (a.col_lo != b.col_lo) return a.col_lo < b.col_lo;
    if (a.row_hi != b.row_hi) return a.row_hi < b.row_hi;
    return a.col_hi < b.col_hi;
  });
  long long max_sel = 0;
  for (const Pattern& s : selected) max_sel = std::max(max_sel, s.weight);
  for (const Pattern& r : rects) {
    if (!rule.admits(r.weight, max_sel)) continue;
    bool clash = false;
    for (const Pattern& s : selected)
      if (!disjoint(r, s)) {
        clash = true;
        break;
      }
    if (clash) continue;
    selected.push_back(r);
    max_sel = std::max(max_sel, r.weight);
  }
  return selected;
}

inline PrecisionCounts precision(const BitMatrix& m, const std::vector<Pattern>& patterns) {
  std::vector<char> covered(static_cast<std::size_t>(m.n) * m.n, 0);
  auto mark = [&](int r, int c) { covered[static_cast<std::size_t>(r) * m.n + c] = 1; };
  for (const Pattern& p : patterns) {
    bool clique = p.kind == PatternKind::Clique;
    for (int r = p.row_lo; r <= p.row_hi; ++r)
      for (int c = p.col_lo; c <= p.col_hi; ++c) {
        if (clique && r == c) continue;
        mark(r, c);
        if (!clique) mark(c, r);
      }
  }
  PrecisionCounts out;
  for (int r = 0; r < m.n; ++r)
    for (int c = 0; c < m.n; ++c) {
      if (r == c) continue;
      bool in = covered[static_cast<std::size_t>(r) * m.n + c];
      if (m.at(r, c))
        (in ? out.black_in : out.black_out) += 1;
      else
        (in ? out.white_in : out.white_out) += 1;
    }
  return out;
}

struct Decomposition {
  std::vector<Pattern> patterns;  // selection order: MWIS cliques, then rects
  long long total_weight = 0;
  PrecisionCounts precision;
};

inline Decomposition decompose(const BitMatrix& m, const CandidateSet& cands,
                               const FilterRule& rule = FilterRule::none()) {
  std::vector<Pattern> rects = cands.bicliques;
  rects.insert(rects.end(), cands.stars.begin(), cands.stars.end());
  Decomposition d;
  d.patterns = select_rect(std::move(rects), select_cliques(cands.cliques), rule);
  for (const Pattern& p : d.patterns) d.total_weight += p.weight;
  d.precision = precision(m, d.patterns);
#ifndef NDEBUG
  for (std::size_t a = 0; a < d.patterns.size(); ++a)
    for (std::size_t b = a + 1; b < d.patterns.size(); ++b)
      assert(disjoint(d.patterns[a], d.patterns[b]));
#endif
  return d;
}

inline Decomposition decompose(const BitMatrix& m, const NoiseModel& model,
                               const FilterRule& rule = FilterRule::none(),
                               AxisPreference pref = AxisPreference::RowsFirst) {
  return decompose(m, enumerate_all(m, model, pref), rule);
}

}  // namespace ringmotif
