#pragma once

#include <string>

#include "ringmotif/errors.hpp"
#include "ringmotif/graph.hpp"

namespace ringmotif {

// Closed-form constants for rook-adjacency Moran's I restricted to 0/1
// matrices.  With n the matrix side, m the number of black cells, B the
// count of black-black and W the count of white-white rook-adjacent cell
// pairs, the general definition collapses to
//
//   I = B * n / (2(n-1)m) + W * n / (2(n-1)(n^2-m)) - 1
//
// (derived by substituting mean m/n^2 and variance m(n^2-m)/n^4 into the
// cross-product form; the oracle tests pin this down).  Undefined when all
// cells are equal or n < 2.
struct MoransConstants {
  int n = 0;
  long long black = 0;
  double c_b = 0.0;
  double c_w = 0.0;

  static MoransConstants from(const BitMatrix& m) {
    if (m.n < 2) throw DegenerateInputError("Moran's I needs a matrix of side >= 2, got " + std::to_string(m.n));
    long long black = m.black_cells();
    long long total = static_cast<long long>(m.n) * m.n;
    if (black == 0) throw DegenerateInputError("Moran's I is undefined on an all-white matrix");
    if (black == total) throw DegenerateInputError("Moran's I is undefined on an all-black matrix");
    MoransConstants k;
    k.n = m.n;
    k.black = black;
    double denom = 2.0 * (m.n - 1);
    k.c_b = m.n / (denom * static_cast<double>(black));
    k.c_w = m.n / (denom * static_cast<double>(total - black));
    return k;
  }
};

// Counts of same-colored rook-adjacent cell pairs (unordered).
struct AdjacencyCounts {
  long long black_black = 0;
  long long white_white = 0;
};

inline AdjacencyCounts count_adjacencies(const BitMatrix& m) {
  AdjacencyCounts c;
  for (int r = 0; r < m.n; ++r)
    for (int col = 0; col < m.n; ++col) {
      std::uint8_t v = m.at(r, col);
      if (r + 1 < m.n && v == m.at(r + 1, col)) (v ? c.black_black : c.white_white)++;
      if (col + 1 < m.n && v == m.at(r, col + 1)) (v ? c.black_black : c.white_white)++;
    }
  return c;
}

inline double morans_i_simplified(const BitMatrix& m) {
  MoransConstants k = MoransConstants::from(m);
  AdjacencyCounts c = count_adjacencies(m);
  return k.c_b * c.black_black + k.c_w * c.white_white - 1.0;
}

inline double morans_i_simplified(const AdjacencyMatrix& m) { return morans_i_simplified(m.bits); }

// Similarity between two rows: the black-black and white-white column
// matches they would contribute as vertical adjacencies if placed next to
// each other, scaled by the matrix constants.  Invariant under symmetric
// column permutation, so it is a function of the vertex pair alone.
inline double row_similarity(const BitMatrix& m, const MoransConstants& k, int u, int v) {
  long long bb = 0, ww = 0;
  for (int c = 0; c < m.n; ++c) {
    std::uint8_t a = m.at(u, c), b = m.at(v, c);
    if (a && b)
      ++bb;
    else if (!a && !b)
      ++ww;
  }
  return k.c_b * bb + k.c_w * ww;
}

inline double row_similarity(const BitMatrix& m, int u, int v) {
  return row_similarity(m, MoransConstants::from(m), u, v);
}

inline double row_similarity(const AdjacencyMatrix& m, int u, int v) {
  return row_similarity(m.bits, u, v);
}

// Seriation distance: low when placing u next to v helps autocorrelation.
// Can in principle go negative (similarity above 1 under extreme constants);
// the TSP instance builder shifts globally to nonnegative.
inline double row_distance(const BitMatrix& m, const MoransConstants& k, int u, int v) {
  return 1.0 - row_similarity(m, k, u, v);
}

inline double row_distance(const BitMatrix& m, int u, int v) {
  return row_distance(m, MoransConstants::from(m), u, v);
}

inline double row_distance(const AdjacencyMatrix& m, int u, int v) { return row_distance(m.bits, u, v); }

}  // namespace ringmotif
