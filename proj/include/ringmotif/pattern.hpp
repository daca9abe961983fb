#pragma once

#include <algorithm>
#include <array>
#include <string>

namespace ringmotif {

enum class PatternKind { Clique, Biclique, Star };

inline const char* kind_name(PatternKind k) {
  switch (k) {
    case PatternKind::Clique: return "clique";
    case PatternKind::Biclique: return "biclique";
    case PatternKind::Star: return "star";
  }
  return "?";
}

// A contiguous submatrix pattern.  Cliques sit on the diagonal (rows ==
// cols) and their cell counts exclude the diagonal cells; bicliques and
// stars live strictly above the diagonal and implicitly own their mirror.
struct Pattern {
  PatternKind kind = PatternKind::Clique;
  int row_lo = 0, row_hi = 0;  // inclusive
  int col_lo = 0, col_hi = 0;  // inclusive
  long long weight = 0;        // black-black adjacencies inside (clique: diagonal pairs excluded)
  long long cells_total = 0;
  long long cells_black = 0;

  int rows_len() const { return row_hi - row_lo + 1; }
  int cols_len() const { return col_hi - col_lo + 1; }

  bool same_shape(const Pattern& o) const {
    return kind == o.kind && row_lo == o.row_lo && row_hi == o.row_hi && col_lo == o.col_lo &&
           col_hi == o.col_hi;
  }
};

enum class NoiseKind { Density, PlainMorans, GlobalReweighted, LocalReweighted };

// sigma thresholds structure (per-model meaning), tau thresholds tightness
// (only the locally reweighted model reads it).
struct NoiseModel {
  NoiseKind kind = NoiseKind::LocalReweighted;
  double sigma = 0.5;
  double tau = 0.85;
};

namespace detail {
inline bool intervals_meet(int a1, int a2, int b1, int b2) {
  return std::max(a1, b1) <= std::min(a2, b2);
}
}  // namespace detail

// Disjointness of the claimed submatrix regions.  A clique claims its full
// diagonal block (diagonal cells included, even though they do not count as
// patterned cells); a biclique or star claims its rectangle plus the mirror
// below the diagonal.
inline bool disjoint(const Pattern& p, const Pattern& q) {
  using detail::intervals_meet;
  bool pc = p.kind == PatternKind::Clique, qc = q.kind == PatternKind::Clique;
  if (pc && qc) return !intervals_meet(p.row_lo, p.row_hi, q.row_lo, q.row_hi);
  if (pc || qc) {
    const Pattern& cl = pc ? p : q;
    const Pattern& re = pc ? q : p;
    return !(intervals_meet(cl.row_lo, cl.row_hi, re.row_lo, re.row_hi) &&
             intervals_meet(cl.row_lo, cl.row_hi, re.col_lo, re.col_hi));
  }
  bool direct = intervals_meet(p.row_lo, p.row_hi, q.row_lo, q.row_hi) &&
                intervals_meet(p.col_lo, p.col_hi, q.col_lo, q.col_hi);
  bool mirrored = intervals_meet(p.row_lo, p.row_hi, q.col_lo, q.col_hi) &&
                  intervals_meet(p.col_lo, p.col_hi, q.row_lo, q.row_hi);
  return !(direct || mirrored);
}

// Categorical 12-color cycle; patterns take colors in selection order.
inline constexpr std::array<const char*, 12> kPalette = {
    "#1F77B4", "#FF7F0E", "#2CA02C", "#9467BD", "#8C564B", "#E377C2",
    "#17BECF", "#BCBD22", "#AEC7E8", "#FFBB78", "#98DF8A", "#C5B0D5"};

inline const char* palette_color(std::size_t selection_index) {
  return kPalette[selection_index % kPalette.size()];
}

}  // namespace ringmotif
