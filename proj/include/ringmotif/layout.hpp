#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "ringmotif/select.hpp"

namespace ringmotif {

inline constexpr double kPi = 3.14159265358979323846;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  double norm() const { return std::sqrt(x * x + y * y); }
};

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

struct ForceParams {
  double c_o = 0.8;
  double c_a = 1.0;
  double c_r = 1.0;
  double c_g = 1.0;
  double mu = 3.0;
  int max_iters = 5000;
  double convergence_eps = 1e-3;
};

enum class GlyphShape { Annulus, DiamondAnnulus };

// One glyph per selected pattern. Annulus radii follow the cell counts so the
// colored area equals cells_black; diamonds use side lengths the same way.
// x tracks matrix columns, y matrix rows (screen-style, y grows downward).
struct Glyph {
  int pattern_index = -1;
  Pattern pattern;
  GlyphShape shape = GlyphShape::Annulus;
  double outer = 0.0;  // radius (annulus) or side length (diamond)
  double inner = 0.0;
  Vec2 start;
  Vec2 center;
  double rotation = 0.0;
  std::string color;

  // Radius used for repulsion and force damping; circumradius for diamonds.
  double radius() const {
    return shape == GlyphShape::Annulus ? outer : outer / std::sqrt(2.0);
  }
};

// Boundary parameter t runs once around the outer boundary on [0, 1).
// Annulus: t is the angle fraction starting at rotation 0's +x axis.
// Diamond: corners sit at west/north/east/south of the center; the row-side
// path west->north->east covers [0, 0.5) and the column-side path
// east->south->west covers [0.5, 1), both at constant speed.
inline Vec2 boundary_point(const Glyph& g, double t) {
  if (g.shape == GlyphShape::Annulus) {
    double ang = g.rotation + 2.0 * kPi * t;
    return g.center + Vec2{std::cos(ang), std::sin(ang)} * g.outer;
  }
  double d = g.outer / std::sqrt(2.0);
  static const int kCorner[5][2] = {{-1, 0}, {0, -1}, {1, 0}, {0, 1}, {-1, 0}};
  double u = t * 4.0;
  int side = static_cast<int>(std::floor(u));
  double f = u - side;
  side = ((side % 4) + 4) % 4;
  Vec2 a{kCorner[side][0] * d, kCorner[side][1] * d};
  Vec2 b{kCorner[side + 1][0] * d, kCorner[side + 1][1] * d};
  Vec2 local = a + (b - a) * f;
  double cs = std::cos(g.rotation), sn = std::sin(g.rotation);
  return g.center + Vec2{cs * local.x - sn * local.y, sn * local.x + cs * local.y};
}

struct BoundarySegment {
  int vertex = 0;  // matrix vertex index
  double t0 = 0.0;
  double t1 = 0.0;
};

// Vertices in matrix order: cliques get equal arcs around the circle, row and
// column sets of a diamond get equal segments of their side pair.
inline std::vector<BoundarySegment> boundary_map(const Glyph& g) {
  std::vector<BoundarySegment> segs;
  const Pattern& p = g.pattern;
  if (g.shape == GlyphShape::Annulus) {
    int n = p.rows_len();
    for (int k = 0; k < n; ++k)
      segs.push_back({p.row_lo + k, static_cast<double>(k) / n, (k + 1.0) / n});
    return segs;
  }
  int rows = p.rows_len(), cols = p.cols_len();
  for (int k = 0; k < rows; ++k)
    segs.push_back({p.row_lo + k, k / (2.0 * rows), (k + 1) / (2.0 * rows)});
  for (int k = 0; k < cols; ++k)
    segs.push_back({p.col_lo + k, 0.5 + k / (2.0 * cols), 0.5 + (k + 1) / (2.0 * cols)});
  return segs;
}

struct Link {
  int clique = -1;  // glyph indices
  int rect = -1;
  int v_lo = 0;  // shared vertex range (always contiguous)
  int v_hi = 0;
  double cl_t0 = 0.0, cl_t1 = 0.0;  // attachment on the clique boundary
  double re_t0 = 0.0, re_t1 = 0.0;  // attachment on the biclique/star boundary
};

struct LinkGeometry {
  Vec2 a1, a2;  // clique-side attachment endpoints
  Vec2 b1, b2;  // rect-side attachment endpoints
  Vec2 centroid;
};

inline std::vector<Glyph> build_glyphs(const Decomposition& d) {
  std::vector<Glyph> glyphs;
  for (std::size_t i = 0; i < d.patterns.size(); ++i) {
    const Pattern& p = d.patterns[i];
    Glyph g;
    g.pattern_index = static_cast<int>(i);
    g.pattern = p;
    double hole = static_cast<double>(p.cells_total - p.cells_black);
    if (p.kind == PatternKind::Clique) {
      g.shape = GlyphShape::Annulus;
      g.outer = std::sqrt(p.cells_total / kPi);
      g.inner = std::sqrt(hole / kPi);
    } else {
      g.shape = GlyphShape::DiamondAnnulus;
      g.outer = std::sqrt(static_cast<double>(p.cells_total));
      g.inner = std::sqrt(hole);
    }
    g.start = {(p.col_lo + p.col_hi + 1) / 2.0, (p.row_lo + p.row_hi + 1) / 2.0};
    g.center = g.start;
    g.color = palette_color(i);
    glyphs.push_back(g);
  }
  return glyphs;
}

// Links exist only between a clique and a biclique/star with shared vertices.
// Disjointness guarantees the shared set touches exactly one side of the
// rectangle, and interval intersection keeps it contiguous on both boundaries.
inline std::vector<Link> build_links(const std::vector<Glyph>& glyphs) {
  std::vector<Link> links;
  for (std::size_t i = 0; i < glyphs.size(); ++i) {
    if (glyphs[i].pattern.kind != PatternKind::Clique) continue;
    const Pattern& cl = glyphs[i].pattern;
    for (std::size_t j = 0; j < glyphs.size(); ++j) {
      if (glyphs[j].pattern.kind == PatternKind::Clique) continue;
      const Pattern& re = glyphs[j].pattern;
      Link l;
      l.clique = static_cast<int>(i);
      l.rect = static_cast<int>(j);
      int row_lo = std::max(cl.row_lo, re.row_lo), row_hi = std::min(cl.row_hi, re.row_hi);
      int col_lo = std::max(cl.row_lo, re.col_lo), col_hi = std::min(cl.row_hi, re.col_hi);
      bool on_rows = row_lo <= row_hi;
      if (on_rows) {
        l.v_lo = row_lo;
        l.v_hi = row_hi;
        int p = re.rows_len();
        l.re_t0 = (row_lo - re.row_lo) / (2.0 * p);
        l.re_t1 = (row_hi - re.row_lo + 1) / (2.0 * p);
      } else if (col_lo <= col_hi) {
        l.v_lo = col_lo;
        l.v_hi = col_hi;
        int q = re.cols_len();
        l.re_t0 = 0.5 + (col_lo - re.col_lo) / (2.0 * q);
        l.re_t1 = 0.5 + (col_hi - re.col_lo + 1) / (2.0 * q);
      } else {
        continue;
      }
      int n = cl.rows_len();
      l.cl_t0 = static_cast<double>(l.v_lo - cl.row_lo) / n;
      l.cl_t1 = static_cast<double>(l.v_hi - cl.row_lo + 1) / n;
      links.push_back(l);
    }
  }
  return links;
}

inline LinkGeometry link_geometry(const std::vector<Glyph>& glyphs, const Link& l) {
  LinkGeometry geo;
  geo.a1 = boundary_point(glyphs[l.clique], l.cl_t0);
  geo.a2 = boundary_point(glyphs[l.clique], l.cl_t1);
  geo.b1 = boundary_point(glyphs[l.rect], l.re_t0);
  geo.b2 = boundary_point(glyphs[l.rect], l.re_t1);
  geo.centroid = (geo.a1 + geo.a2 + geo.b1 + geo.b2) * 0.25;
  return geo;
}

namespace detail {

inline bool segments_cross(const Vec2& p1, const Vec2& p2, const Vec2& q1, const Vec2& q2) {
  auto side = [](const Vec2& a, const Vec2& b, const Vec2& c) {
    double s = cross(b - a, c - a);
    return (s > 0.0) - (s < 0.0);
  };
  return side(p1, p2, q1) * side(p1, p2, q2) < 0 && side(q1, q2, p1) * side(q1, q2, p2) < 0;
}

}  // namespace detail

// Quad corners in drawing order; the rect-side endpoints are flipped when the
// default pairing would produce a self-intersecting bowtie.
inline std::array<Vec2, 4> link_corners(const std::vector<Glyph>& glyphs, const Link& l) {
  LinkGeometry geo = link_geometry(glyphs, l);
  if (detail::segments_cross(geo.a2, geo.b2, geo.b1, geo.a1))
    return {geo.a1, geo.a2, geo.b1, geo.b2};
  return {geo.a1, geo.a2, geo.b2, geo.b1};
}

namespace detail {

inline Vec2 normalized(const Vec2& v, double eps = 1e-12) {
  double n = v.norm();
  if (n < eps) return {0.0, 0.0};
  return v * (1.0 / n);
}

// Smallest signed angle from `from` to `to`, in (-kPi, kPi].
inline double signed_angle(const Vec2& from, const Vec2& to) {
  if (from.norm() < 1e-12 || to.norm() < 1e-12) return 0.0;
  return std::atan2(cross(from, to), dot(from, to));
}

// Central angle spanned by the attachment [t0, t1] as seen from the center.
inline double attachment_beta(const Glyph& g, double t0, double t1) {
  if (g.shape == GlyphShape::Annulus) return 2.0 * kPi * (t1 - t0);
  Vec2 a = boundary_point(g, t0) - g.center;
  Vec2 b = boundary_point(g, t1) - g.center;
  return std::atan2(std::abs(cross(a, b)), dot(a, b));
}

// Direction from the center to the middle of the attachment. For arcs the
// chord midpoint (with the half-turn fix for spans over kPi) reduces to the
// angular midpoint; diamonds use the literal chord midpoint with the path
// midpoint as fallback when the chord midpoint degenerates to the center.
inline Vec2 attachment_mid_dir(const Glyph& g, double t0, double t1) {
  if (g.shape == GlyphShape::Annulus) {
    double ang = g.rotation + kPi * (t0 + t1);
    return {std::cos(ang), std::sin(ang)};
  }
  Vec2 chord = (boundary_point(g, t0) + boundary_point(g, t1)) * 0.5 - g.center;
  if (chord.norm() < 1e-9 * std::max(g.outer, 1.0))
    chord = boundary_point(g, (t0 + t1) / 2.0) - g.center;
  return normalized(chord);
}

inline Vec2 deadlock_direction(int i, int j) {
  std::uint64_t h = (static_cast<std::uint64_t>(i) << 32) ^ static_cast<std::uint32_t>(j);
  h += 0x9E3779B97F4A7C15ull;
  h = (h ^ (h >> 30)) * 0xBF58476D1CE4E5B9ull;
  h = (h ^ (h >> 27)) * 0x94D049BB133111EBull;
  h ^= h >> 31;
  double ang = 2.0 * kPi * (static_cast<double>(h >> 11) * 0x1.0p-53);
  return {std::cos(ang), std::sin(ang)};
}

}  // namespace detail

// Signed torque the link exerts on one of its glyphs: proportional to the
// angle from the attachment-midpoint direction to the link centroid and to
// the boundary fraction the attachment covers.
inline double rotational_force(const std::vector<Glyph>& glyphs, const Link& l, bool on_clique,
                               double c_o) {
  const Glyph& g = glyphs[on_clique ? l.clique : l.rect];
  double t0 = on_clique ? l.cl_t0 : l.re_t0;
  double t1 = on_clique ? l.cl_t1 : l.re_t1;
  Vec2 m_star = link_geometry(glyphs, l).centroid - g.center;
  if (m_star.norm() < 1e-12) return 0.0;
  Vec2 m = detail::attachment_mid_dir(g, t0, t1);
  double beta = detail::attachment_beta(g, t0, t1);
  return c_o * detail::signed_angle(m, m_star) * beta / (2.0 * kPi);
}

// Unit pull toward the link centroid; link size never changes the magnitude.
inline Vec2 attraction_force(const std::vector<Glyph>& glyphs, const Link& l, bool on_clique,
                             double c_a) {
  const Glyph& g = glyphs[on_clique ? l.clique : l.rect];
  Vec2 m = link_geometry(glyphs, l).centroid - g.center;
  return detail::normalized(m) * c_a;
}

// Push on gi away from gj; exceeds c_r inside the mu margin and falls off
// cubically outside it. Coincident centers get a fixed-size deterministic
// shove so stacked glyphs cannot deadlock.
inline Vec2 repulsion_force(const Glyph& gi, const Glyph& gj, int i, int j,
                            const ForceParams& fp) {
  Vec2 m = gi.center - gj.center;
  double dist = m.norm();
  if (dist < 1e-12) {
    Vec2 dir = detail::deadlock_direction(std::min(i, j), std::max(i, j));
    return (i < j ? dir : dir * -1.0) * fp.c_r;
  }
  double ratio = (gi.radius() + gj.radius() + fp.mu) / dist;
  return m * (1.0 / dist) * (fp.c_r * ratio * ratio * ratio);
}

struct LayoutState {
  std::vector<Glyph> glyphs;
  std::vector<Link> links;
  std::vector<int> component;        // link-connectivity component per glyph
  std::vector<std::uint8_t> linked;  // has at least one attached link
  bool converged = false;
  int iterations = 0;
};

inline LayoutState init_layout(const Decomposition& d) {
  LayoutState st;
  st.glyphs = build_glyphs(d);
  st.links = build_links(st.glyphs);
  int n = static_cast<int>(st.glyphs.size());
  st.component.assign(n, -1);
  st.linked.assign(n, 0);
  std::vector<std::vector<int>> adj(n);
  for (const Link& l : st.links) {
    adj[l.clique].push_back(l.rect);
    adj[l.rect].push_back(l.clique);
    st.linked[l.clique] = 1;
    st.linked[l.rect] = 1;
  }
  int comp = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (st.component[s] >= 0) continue;
    st.component[s] = comp;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (st.component[v] < 0) {
          st.component[v] = comp;
          stack.push_back(v);
        }
    }
    ++comp;
  }
  return st;
}

// Gravity: unlinked glyphs pull toward their own start at full strength.
// Linked cliques share one direction per component, from the component's
// average clique center toward the average clique start, so gravity cannot
// tear a linked group apart. Linked bicliques/stars keep a 1/5 own-pull.
namespace detail {

inline std::vector<Vec2> gravity_forces(const LayoutState& st, const ForceParams& fp) {
  int n = static_cast<int>(st.glyphs.size());
  std::vector<Vec2> out(n);
  int comps = 0;
  for (int c : st.component) comps = std::max(comps, c + 1);
  std::vector<Vec2> sum_s(comps), sum_c(comps);
  std::vector<int> cliques(comps, 0);
  for (int i = 0; i < n; ++i) {
    if (!st.linked[i] || st.glyphs[i].pattern.kind != PatternKind::Clique) continue;
    int c = st.component[i];
    sum_s[c] += st.glyphs[i].start;
    sum_c[c] += st.glyphs[i].center;
    ++cliques[c];
  }
  const double eps = 1e-9;
  for (int i = 0; i < n; ++i) {
    const Glyph& g = st.glyphs[i];
    if (!st.linked[i]) {
      out[i] = normalized(g.start - g.center, eps) * fp.c_g;
    } else if (g.pattern.kind == PatternKind::Clique) {
      int c = st.component[i];
      double inv = 1.0 / cliques[c];
      Vec2 m_star = sum_s[c] * inv - sum_c[c] * inv;
      out[i] = normalized(m_star, eps) * fp.c_g;
    } else {
      out[i] = normalized(g.start - g.center, eps) * (fp.c_g / 5.0);
    }
  }
  return out;
}

}  // namespace detail

// One synchronous iteration: every force reads the pre-step state, then all
// rotations and translations apply at once, damped by the glyph radius.
// Returns the largest center displacement.
inline double step(LayoutState& st, const ForceParams& fp) {
  int n = static_cast<int>(st.glyphs.size());
  std::vector<double> torque(n, 0.0);
  std::vector<Vec2> trans = detail::gravity_forces(st, fp);
  for (const Link& l : st.links) {
    torque[l.clique] += rotational_force(st.glyphs, l, true, fp.c_o);
    torque[l.rect] += rotational_force(st.glyphs, l, false, fp.c_o);
    trans[l.clique] += attraction_force(st.glyphs, l, true, fp.c_a);
    trans[l.rect] += attraction_force(st.glyphs, l, false, fp.c_a);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec2 f = repulsion_force(st.glyphs[i], st.glyphs[j], i, j, fp);
      trans[i] += f;
      trans[j] += f * -1.0;
    }
  double max_disp = 0.0;
  for (int i = 0; i < n; ++i) {
    double r = st.glyphs[i].radius();
    st.glyphs[i].rotation += torque[i] / r;
    Vec2 dc = trans[i] * (1.0 / r);
    st.glyphs[i].center += dc;
    max_disp = std::max(max_disp, dc.norm());
  }
  return max_disp;
}

inline LayoutState run_layout(const Decomposition& d, const ForceParams& fp = {}) {
  LayoutState st = init_layout(d);
  if (st.glyphs.empty()) {
    st.converged = true;
    return st;
  }
  for (int it = 0; it < fp.max_iters; ++it) {
    double disp = step(st, fp);
    st.iterations = it + 1;
    if (disp < fp.convergence_eps) {
      st.converged = true;
      break;
    }
  }
  return st;
}

}  // namespace ringmotif
