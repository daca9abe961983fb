#pragma once

#include <cstdint>
#include <vector>

#include "ringmotif/graph.hpp"

namespace ringmotif {

// Exclusive 2D prefix sums over the cell grid and its two derived adjacency
// grids (a vertical black-black pair is indexed by its top cell, a
// horizontal one by its left cell).  Any rectangle count is then four table
// lookups, which is what keeps pattern enumeration near-linear per shape.
struct PrefixTables {
  int n = 0;
  std::vector<long long> cum, vpair, hpair;  // (n+1) x (n+1) each

  long long rect(const std::vector<long long>& t, int r1, int r2, int c1, int c2) const {
    // inclusive cell bounds; callers guarantee r1 <= r2, c1 <= c2
    int w = n + 1;
    return t[static_cast<std::size_t>(r2 + 1) * w + c2 + 1] -
           t[static_cast<std::size_t>(r1) * w + c2 + 1] -
           t[static_cast<std::size_t>(r2 + 1) * w + c1] + t[static_cast<std::size_t>(r1) * w + c1];
  }

  // black cells in M[r1..r2 x c1..c2]
  long long black(int r1, int r2, int c1, int c2) const { return rect(cum, r1, r2, c1, c2); }

  // vertical black-black pairs fully inside the rectangle
  long long vertical_pairs(int r1, int r2, int c1, int c2) const {
    if (r2 <= r1) return 0;
    return rect(vpair, r1, r2 - 1, c1, c2);
  }

  // horizontal black-black pairs fully inside the rectangle
  long long horizontal_pairs(int r1, int r2, int c1, int c2) const {
    if (c2 <= c1) return 0;
    return rect(hpair, r1, r2, c1, c2 - 1);
  }
};

inline PrefixTables build_prefix(const BitMatrix& m) {
  PrefixTables p;
  p.n = m.n;
  int w = m.n + 1;
  std::size_t sz = static_cast<std::size_t>(w) * w;
  p.cum.assign(sz, 0);
  p.vpair.assign(sz, 0);
  p.hpair.assign(sz, 0);
  for (int r = 0; r < m.n; ++r)
    for (int c = 0; c < m.n; ++c) {
      long long cell = m.at(r, c);
      long long v = (r + 1 < m.n && m.at(r, c) && m.at(r + 1, c)) ? 1 : 0;
      long long h = (c + 1 < m.n && m.at(r, c) && m.at(r, c + 1)) ? 1 : 0;
      std::size_t i0 = static_cast<std::size_t>(r) * w + c;          // (r, c)
      std::size_t i1 = static_cast<std::size_t>(r + 1) * w + c + 1;  // (r+1, c+1)
      p.cum[i1] = cell + p.cum[i0 + w] + p.cum[i0 + 1] - p.cum[i0];
      p.vpair[i1] = v + p.vpair[i0 + w] + p.vpair[i0 + 1] - p.vpair[i0];
      p.hpair[i1] = h + p.hpair[i0 + w] + p.hpair[i0 + 1] - p.hpair[i0];
    }
  return p;
}

// Black-black pairs between rows u and u+1 over columns [j, j2].  With
// exclude_diagonal set, pairs in columns u and u+1 (the ones with a
// main-diagonal endpoint) are dropped — the clique convention.
inline long long vertical_bb(const PrefixTables& p, int u, int j, int j2, bool exclude_diagonal) {
  long long s = p.vertical_pairs(u, u + 1, j, j2);
  if (exclude_diagonal) {
    if (u >= j && u <= j2) s -= p.vertical_pairs(u, u + 1, u, u);
    if (u + 1 >= j && u + 1 <= j2) s -= p.vertical_pairs(u, u + 1, u + 1, u + 1);
  }
  return s;
}

// Transposed analogue: pairs between columns c and c+1 over rows [i, i2].
inline long long horizontal_bb(const PrefixTables& p, int c, int i, int i2, bool exclude_diagonal) {
  long long s = p.horizontal_pairs(i, i2, c, c + 1);
  if (exclude_diagonal) {
    if (c >= i && c <= i2) s -= p.horizontal_pairs(c, c, c, c + 1);
    if (c + 1 >= i && c + 1 <= i2) s -= p.horizontal_pairs(c + 1, c + 1, c, c + 1);
  }
  return s;
}

}  // namespace ringmotif
