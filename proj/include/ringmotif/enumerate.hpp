#pragma once

#include <optional>
#include <vector>

#include "ringmotif/graph.hpp"
#include "ringmotif/pattern.hpp"
#include "ringmotif/prefix.hpp"

namespace ringmotif {

// Which axis a biclique grows along when only one single-axis extension is
// possible; both-axes extension is always tried first.
enum class AxisPreference { RowsFirst, ColsFirst };

namespace detail {

// Moran's I of a submatrix viewed as a standalone grid with rook adjacency.
// Written over unordered neighbor pairs: I = (N / P) * sum / variance with
// P the number of adjacent cell pairs.  A constant region is defined as 1
// (perfect autocorrelation), which is exactly the known blind spot of this
// model on blank blocks.
inline double grid_morans(const BitMatrix& m, int r1, int r2, int c1, int c2) {
  long long rows = r2 - r1 + 1, cols = c2 - c1 + 1;
  long long area = rows * cols, black = 0;
  for (int r = r1; r <= r2; ++r)
    for (int c = c1; c <= c2; ++c) black += m.at(r, c);
  if (black == 0 || black == area) return 1.0;
  double mean = static_cast<double>(black) / area;
  double denom = black * (1.0 - mean) * (1.0 - mean) + (area - black) * mean * mean;
  double sum = 0.0;
  long long pairs = rows * (cols - 1) + cols * (rows - 1);
  for (int r = r1; r <= r2; ++r)
    for (int c = c1; c <= c2; ++c) {
      double d = m.at(r, c) - mean;
      if (c + 1 <= c2) sum += d * (m.at(r, c + 1) - mean);
      if (r + 1 <= r2) sum += d * (m.at(r + 1, c) - mean);
    }
  return (static_cast<double>(area) / pairs) * sum / denom;
}

}  // namespace detail

inline long long clique_weight(const PrefixTables& p, int lo, int hi) {
  long long w = 0;
  for (int u = lo; u < hi; ++u) w += vertical_bb(p, u, lo, hi, true);
  for (int c = lo; c < hi; ++c) w += horizontal_bb(p, c, lo, hi, true);
  return w;
}

inline long long rect_weight(const PrefixTables& p, int r1, int r2, int c1, int c2) {
  return p.vertical_pairs(r1, r2, c1, c2) + p.horizontal_pairs(r1, r2, c1, c2);
}

inline Pattern make_clique(const BitMatrix& m, const PrefixTables& p, int lo, int hi) {
  Pattern c;
  c.kind = PatternKind::Clique;
  c.row_lo = c.col_lo = lo;
  c.row_hi = c.col_hi = hi;
  long long k = hi - lo + 1;
  c.cells_total = k * k - k;
  long long diag = 0;
  for (int t = lo; t <= hi; ++t) diag += m.at(t, t);
  c.cells_black = p.black(lo, hi, lo, hi) - diag;
  c.weight = clique_weight(p, lo, hi);
  return c;
}

inline Pattern make_rect(const PrefixTables& p, PatternKind kind, int r1, int r2, int c1, int c2) {
  Pattern b;
  b.kind = kind;
  b.row_lo = r1;
  b.row_hi = r2;
  b.col_lo = c1;
  b.col_hi = c2;
  b.cells_total = static_cast<long long>(r2 - r1 + 1) * (c2 - c1 + 1);
  b.cells_black = p.black(r1, r2, c1, c2);
  b.weight = rect_weight(p, r1, r2, c1, c2);
  return b;
}

// Noise-model verdict for a candidate shape (only kind and the intervals of
// `shape` are read).  Thresholds: per-pair tests are strict (> sigma*width),
// aggregate ratios and fractions are inclusive (>=).
inline bool test_pattern(const BitMatrix& m, const PrefixTables& p, const Pattern& shape,
                         const NoiseModel& model) {
  const bool clique = shape.kind == PatternKind::Clique;
  const int r1 = shape.row_lo, r2 = shape.row_hi, c1 = shape.col_lo, c2 = shape.col_hi;
  const long long rows = r2 - r1 + 1, cols = c2 - c1 + 1;

  switch (model.kind) {
    case NoiseKind::Density: {
      long long total = clique ? rows * rows - rows : rows * cols;
      long long black = p.black(r1, r2, c1, c2);
      if (clique)
        for (int t = r1; t <= r2; ++t) black -= m.at(t, t);
      double ratio = total > 0 ? static_cast<double>(black) / total : 0.0;
      return ratio >= model.sigma;
    }
    case NoiseKind::PlainMorans:
      return detail::grid_morans(m, r1, r2, c1, c2) >= model.sigma;
    case NoiseKind::GlobalReweighted: {
      long long w = clique ? clique_weight(p, r1, r2) : rect_weight(p, r1, r2, c1, c2);
      long long total = clique ? 2 * (rows - 1) * (rows - 2) : 2 * rows * cols - rows - cols;
      double ratio = total > 0 ? static_cast<double>(w) / total : 0.0;
      return ratio >= model.sigma;
    }
    case NoiseKind::LocalReweighted: {
      auto rows_ok = [&](double width) {
        int good = 0;
        for (int u = r1; u < r2; ++u)
          if (vertical_bb(p, u, c1, c2, clique) > model.sigma * width) ++good;
        return good >= model.tau * (r2 - r1);
      };
      auto cols_ok = [&](double width) {
        int good = 0;
        for (int c = c1; c < c2; ++c)
          if (horizontal_bb(p, c, r1, r2, clique) > model.sigma * width) ++good;
        return good >= model.tau * (c2 - c1);
      };
      if (clique) return rows_ok(static_cast<double>(cols));
      if (shape.kind == PatternKind::Biclique)
        return rows_ok(static_cast<double>(cols)) && cols_ok(static_cast<double>(rows));
      // star: the length-1 axis has no consecutive pairs, so only the long
      // axis is constrained
      return rows == 1 ? cols_ok(static_cast<double>(rows)) : rows_ok(static_cast<double>(cols));
    }
  }
  return false;
}

// All diagonal intervals of length >= 3 passing the model, with at least
// one black-black adjacency.
inline std::vector<Pattern> enumerate_cliques(const BitMatrix& m, const PrefixTables& p,
                                              const NoiseModel& model) {
  std::vector<Pattern> out;
  for (int lo = 0; lo + 2 < m.n; ++lo)
    for (int hi = lo + 2; hi < m.n; ++hi) {
      Pattern shape;
      shape.kind = PatternKind::Clique;
      shape.row_lo = shape.col_lo = lo;
      shape.row_hi = shape.col_hi = hi;
      if (!test_pattern(m, p, shape, model)) continue;
      Pattern full = make_clique(m, p, lo, hi);
      if (full.weight < 1) continue;
      out.push_back(full);
    }
  return out;
}

// Greedy growth from the 2x2 seed at (i, j): extend both axes while valid,
// else the preferred axis, else the other; never touches the diagonal or
// the matrix edge.
inline std::optional<Pattern> grow_biclique(const BitMatrix& m, const PrefixTables& p, int i,
                                            int j, const NoiseModel& model,
                                            AxisPreference pref = AxisPreference::RowsFirst) {
  if (i + 1 >= j || j + 1 >= m.n) return std::nullopt;
  auto ok = [&](int i2, int j2) {
    Pattern s;
    s.kind = PatternKind::Biclique;
    s.row_lo = i;
    s.row_hi = i2;
    s.col_lo = j;
    s.col_hi = j2;
    return test_pattern(m, p, s, model);
  };
  int i2 = i + 1, j2 = j + 1;
  if (!ok(i2, j2)) return std::nullopt;
  for (;;) {
    if (i2 + 1 < j && j2 + 1 < m.n && ok(i2 + 1, j2 + 1)) {
      ++i2;
      ++j2;
      continue;
    }
    bool grew = false;
    for (int attempt = 0; attempt < 2 && !grew; ++attempt) {
      bool try_rows = (pref == AxisPreference::RowsFirst) == (attempt == 0);
      if (try_rows && i2 + 1 < j && ok(i2 + 1, j2)) {
        ++i2;
        grew = true;
      } else if (!try_rows && j2 + 1 < m.n && ok(i2, j2 + 1)) {
        ++j2;
        grew = true;
      }
    }
    if (!grew) break;
  }
  return make_rect(p, PatternKind::Biclique, i, i2, j, j2);
}

// Single-axis growth from a length-5 seed: a horizontal star spans row i,
// columns [j, j+4] and grows right; a vertical one spans rows [i, i+4],
// column j and grows down, stopping short of the diagonal.
inline std::optional<Pattern> grow_star(const BitMatrix& m, const PrefixTables& p, int i, int j,
                                        bool horizontal, const NoiseModel& model) {
  auto ok = [&](int i2, int j2) {
    Pattern s;
    s.kind = PatternKind::Star;
    s.row_lo = i;
    s.row_hi = i2;
    s.col_lo = j;
    s.col_hi = j2;
    return test_pattern(m, p, s, model);
  };
  if (horizontal) {
    if (i >= j || j + 4 >= m.n) return std::nullopt;
    if (!ok(i, j + 4)) return std::nullopt;
    int j2 = j + 4;
    while (j2 + 1 < m.n && ok(i, j2 + 1)) ++j2;
    return make_rect(p, PatternKind::Star, i, i, j, j2);
  }
  if (i + 4 >= j) return std::nullopt;
  if (!ok(i + 4, j)) return std::nullopt;
  int i2 = i + 4;
  while (i2 + 1 < j && ok(i2 + 1, j)) ++i2;
  return make_rect(p, PatternKind::Star, i, i2, j, j);
}

struct CandidateSet {
  std::vector<Pattern> cliques, bicliques, stars;
};

// One growth attempt per kind per seed; a grown shape keeps its seed as its
// top-left corner, so distinct seeds yield distinct shapes and the sets are
// duplicate-free by construction.  Zero-weight shapes are dropped.
inline CandidateSet enumerate_all(const BitMatrix& m, const NoiseModel& model,
                                  AxisPreference pref = AxisPreference::RowsFirst) {
  PrefixTables p = build_prefix(m);
  CandidateSet out;
  out.cliques = enumerate_cliques(m, p, model);
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 2; j < m.n; ++j)
      if (auto b = grow_biclique(m, p, i, j, model, pref); b && b->weight >= 1)
        out.bicliques.push_back(*b);
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) {
      if (auto s = grow_star(m, p, i, j, true, model); s && s->weight >= 1)
        out.stars.push_back(*s);
      if (auto s = grow_star(m, p, i, j, false, model); s && s->weight >= 1)
        out.stars.push_back(*s);
    }
  return out;
}

}  // namespace ringmotif
