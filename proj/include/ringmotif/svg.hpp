#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "ringmotif/errors.hpp"
#include "ringmotif/graph.hpp"
#include "ringmotif/layout.hpp"
#include "ringmotif/select.hpp"

namespace ringmotif {

// Shared color constants.  The precision bar uses the gray/red trio; links
// use the link gray at configurable opacity.
inline constexpr const char* kLightGray = "#D3D3D3";
inline constexpr const char* kDarkGray = "#555555";
inline constexpr const char* kRed = "#D62728";
inline constexpr const char* kLinkGray = "#888888";

struct RenderConfig {
  double cell_px = 12.0;     // pixels per matrix cell
  double scale = 10.0;       // model units -> pixels in the motif view
  bool show_labels = true;   // vertex indices along glyph boundaries
  double link_opacity = 0.5; // in (0, 1]
  double stroke_px = 1.0;    // thin outlines (grid, pattern frames)
  double attach_px = 3.0;    // thick outline where a link attaches
  double bar_width_px = 24.0;
  double bar_height_px = 240.0;
};

namespace detail {

inline void check_config(const RenderConfig& cfg) {
  if (!(cfg.cell_px > 0) || !(cfg.scale > 0) || !(cfg.stroke_px > 0) || !(cfg.attach_px > 0) ||
      !(cfg.bar_width_px > 0) || !(cfg.bar_height_px > 0))
    throw ValidationError("render config: dimensions must be positive");
  if (!(cfg.link_opacity > 0.0) || cfg.link_opacity > 1.0)
    throw ValidationError("render config: link opacity must be in (0, 1]");
}

// Fixed 6-decimal formatting keeps output byte-stable across runs.
inline std::string fmt(double v) {
  if (std::abs(v) < 5e-7) v = 0.0;  // no "-0.000000"
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

inline std::string svg_open(double w, double h) {
  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) + "\" height=\"" +
                  fmt(h) + "\" viewBox=\"0 0 " + fmt(w) + " " + fmt(h) + "\">\n";
  return s;
}

inline std::string rect_el(double x, double y, double w, double h, const std::string& attrs) {
  return "<rect x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" width=\"" + fmt(w) + "\" height=\"" +
         fmt(h) + "\" " + attrs + "/>\n";
}

// Two-contour annulus path (outer circle + hole) under the even-odd rule.
// Each circle is a pair of half arcs so the radius appears literally in the
// path data.  A zero-size hole drops the inner contour: a solid disk.
inline std::string annulus_path(const Glyph& g, double ox, double oy, double s) {
  double cx = ox + g.center.x * s, cy = oy + g.center.y * s;
  auto circle = [&](double r) {
    std::string d;
    d += "M " + fmt(cx + r) + " " + fmt(cy) + " ";
    d += "A " + fmt(r) + " " + fmt(r) + " 0 1 0 " + fmt(cx - r) + " " + fmt(cy) + " ";
    d += "A " + fmt(r) + " " + fmt(r) + " 0 1 0 " + fmt(cx + r) + " " + fmt(cy) + " Z";
    return d;
  };
  std::string d = circle(g.outer * s);
  if (g.inner > 1e-12) d += " " + circle(g.inner * s);
  return d;
}

// Diamond annulus as outer and inner squares rotated 45 degrees (plus the
// glyph's own rotation), again joined under the even-odd rule.
inline std::string diamond_path(const Glyph& g, double ox, double oy, double s) {
  double cx = ox + g.center.x * s, cy = oy + g.center.y * s;
  auto ring = [&](double side) {
    double d = side / std::sqrt(2.0) * s;
    double cr = std::cos(g.rotation), sr = std::sin(g.rotation);
    std::array<std::array<double, 2>, 4> base = {{{-d, 0}, {0, -d}, {d, 0}, {0, d}}};
    std::string p;
    for (std::size_t k = 0; k < 4; ++k) {
      double x = base[k][0] * cr - base[k][1] * sr;
      double y = base[k][0] * sr + base[k][1] * cr;
      p += (k == 0 ? "M " : "L ") + fmt(cx + x) + " " + fmt(cy + y) + " ";
    }
    p += "Z";
    return p;
  };
  std::string d = ring(g.outer);
  if (g.inner > 1e-12) d += " " + ring(g.inner);
  return d;
}

// Path following the glyph boundary from parameter t0 to t1: an arc on an
// annulus, a polyline visiting crossed corners on a diamond.
inline std::string boundary_path(const Glyph& g, double t0, double t1, double ox, double oy,
                                 double s) {
  double cx = ox + g.center.x * s, cy = oy + g.center.y * s;
  if (g.shape == GlyphShape::Annulus) {
    double r = g.outer * s;
    double a0 = g.rotation + 2.0 * kPi * t0, a1 = g.rotation + 2.0 * kPi * t1;
    double span = a1 - a0;
    std::string d = "M " + fmt(cx + r * std::cos(a0)) + " " + fmt(cy + r * std::sin(a0)) + " ";
    if (span >= 2.0 * kPi - 1e-12) {
      // Full circle: two half arcs to keep endpoints distinct.
      double am = a0 + kPi;
      d += "A " + fmt(r) + " " + fmt(r) + " 0 1 1 " + fmt(cx + r * std::cos(am)) + " " +
           fmt(cy + r * std::sin(am)) + " ";
      d += "A " + fmt(r) + " " + fmt(r) + " 0 1 1 " + fmt(cx + r * std::cos(a0)) + " " +
           fmt(cy + r * std::sin(a0));
      return d;
    }
    d += "A " + fmt(r) + " " + fmt(r) + " 0 " + (span > kPi ? "1" : "0") + " 1 " +
         fmt(cx + r * std::cos(a1)) + " " + fmt(cy + r * std::sin(a1));
    return d;
  }
  std::string d;
  Vec2 p0 = boundary_point(g, t0);
  d += "M " + fmt(ox + p0.x * s) + " " + fmt(oy + p0.y * s) + " ";
  for (int q = 1; q <= 4; ++q) {  // corners at t = q/4 strictly inside (t0, t1)
    double tc = q * 0.25;
    if (tc > t0 + 1e-12 && tc < t1 - 1e-12) {
      Vec2 pc = boundary_point(g, tc);
      d += "L " + fmt(ox + pc.x * s) + " " + fmt(oy + pc.y * s) + " ";
    }
  }
  Vec2 p1 = boundary_point(g, t1 >= 1.0 ? 1.0 : t1);
  d += "L " + fmt(ox + p1.x * s) + " " + fmt(oy + p1.y * s);
  return d;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

// Matrix view: light grid, black cells, then one tinted frame per pattern in
// selection order (two frames for a biclique/star: rectangle and mirror).
inline std::string render_matrix(const BitMatrix& m, const Decomposition& d,
                                 const RenderConfig& cfg = {}) {
  detail::check_config(cfg);
  using detail::fmt;
  double cp = cfg.cell_px;
  double w = m.n * cp;
  std::string out = detail::svg_open(w, w);
  out += detail::rect_el(0, 0, w, w, "fill=\"#FFFFFF\"");
  std::string grid = "<path d=\"";
  for (int k = 0; k <= m.n; ++k) {
    grid += "M 0 " + fmt(k * cp) + " L " + fmt(w) + " " + fmt(k * cp) + " ";
    grid += "M " + fmt(k * cp) + " 0 L " + fmt(k * cp) + " " + fmt(w) + " ";
  }
  grid += "\" stroke=\"" + std::string(kLightGray) + "\" stroke-width=\"" +
          fmt(cfg.stroke_px * 0.5) + "\" fill=\"none\"/>\n";
  out += grid;
  out += "<g fill=\"#000000\">\n";
  for (int r = 0; r < m.n; ++r)
    for (int c = 0; c < m.n; ++c)
      if (m.at(r, c)) out += detail::rect_el(c * cp, r * cp, cp, cp, "");
  out += "</g>\n";
  for (std::size_t i = 0; i < d.patterns.size(); ++i) {
    const Pattern& p = d.patterns[i];
    std::string color = palette_color(i);
    std::string attrs = "fill=\"" + color + "\" fill-opacity=\"0.15\" stroke=\"" + color +
                        "\" stroke-width=\"" + fmt(cfg.stroke_px * 2.0) + "\"";
    out += detail::rect_el(p.col_lo * cp, p.row_lo * cp, p.cols_len() * cp, p.rows_len() * cp,
                           attrs);
    if (p.kind != PatternKind::Clique)
      out += detail::rect_el(p.row_lo * cp, p.col_lo * cp, p.rows_len() * cp, p.cols_len() * cp,
                             attrs);
  }
  out += "</svg>\n";
  return out;
}

// Motif view: link trapezoids underneath, then glyphs in selection order,
// then thick attachment outlines, then optional vertex labels.
inline std::string render_motifs(const LayoutState& st, const Decomposition& d,
                                 const RenderConfig& cfg = {}) {
  detail::check_config(cfg);
  using detail::fmt;
  (void)d;
  double s = cfg.scale;
  double lo_x = 0, lo_y = 0, hi_x = 1, hi_y = 1;
  bool first = true;
  for (const Glyph& g : st.glyphs) {
    double r = g.radius() + 2.0;
    if (first) {
      lo_x = g.center.x - r, hi_x = g.center.x + r;
      lo_y = g.center.y - r, hi_y = g.center.y + r;
      first = false;
    } else {
      lo_x = std::min(lo_x, g.center.x - r), hi_x = std::max(hi_x, g.center.x + r);
      lo_y = std::min(lo_y, g.center.y - r), hi_y = std::max(hi_y, g.center.y + r);
    }
  }
  double ox = -lo_x * s, oy = -lo_y * s;
  double w = (hi_x - lo_x) * s, h = (hi_y - lo_y) * s;
  std::string out = detail::svg_open(w, h);
  out += detail::rect_el(0, 0, w, h, "fill=\"#FFFFFF\"");

  out += "<g fill=\"" + std::string(kLinkGray) + "\" fill-opacity=\"" + fmt(cfg.link_opacity) +
         "\">\n";
  for (const Link& l : st.links) {
    std::array<Vec2, 4> q = link_corners(st.glyphs, l);
    std::string pts;
    for (const Vec2& v : q) pts += fmt(ox + v.x * s) + "," + fmt(oy + v.y * s) + " ";
    pts.pop_back();
    out += "<polygon points=\"" + pts + "\"/>\n";
  }
  out += "</g>\n";

  for (const Glyph& g : st.glyphs) {
    std::string path = g.shape == GlyphShape::Annulus ? detail::annulus_path(g, ox, oy, s)
                                                      : detail::diamond_path(g, ox, oy, s);
    out += "<path d=\"" + path + "\" fill=\"" + g.color + "\" fill-rule=\"evenodd\"/>\n";
  }

  for (const Link& l : st.links) {
    const Glyph& cl = st.glyphs[static_cast<std::size_t>(l.clique)];
    const Glyph& re = st.glyphs[static_cast<std::size_t>(l.rect)];
    std::string stroke = "\" fill=\"none\" stroke-width=\"" + fmt(cfg.attach_px) + "\" stroke=\"";
    out += "<path d=\"" + detail::boundary_path(cl, l.cl_t0, l.cl_t1, ox, oy, s) + stroke +
           cl.color + "\"/>\n";
    out += "<path d=\"" + detail::boundary_path(re, l.re_t0, l.re_t1, ox, oy, s) + stroke +
           re.color + "\"/>\n";
  }

  if (cfg.show_labels) {
    double font = std::max(8.0, 0.9 * s);
    out += "<g font-family=\"sans-serif\" font-size=\"" + fmt(font) + "\" fill=\"" + kDarkGray +
           "\" text-anchor=\"middle\" dominant-baseline=\"middle\">\n";
    for (const Glyph& g : st.glyphs) {
      for (const BoundarySegment& seg : boundary_map(g)) {
        double tm = 0.5 * (seg.t0 + seg.t1);
        Vec2 p = boundary_point(g, tm);
        Vec2 dir = p - g.center;
        double len = dir.norm();
        if (len < 1e-12) dir = Vec2{1.0, 0.0}, len = 1.0;
        Vec2 at = g.center + dir * ((len + 1.2) / len);
        out += "<text x=\"" + fmt(ox + at.x * s) + "\" y=\"" + fmt(oy + at.y * s) + "\">" +
               std::to_string(seg.vertex) + "</text>\n";
      }
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

// Stacked precision bar: white, light gray, dark gray, red from the top,
// heights proportional to the four cell classes, total height fixed.
inline std::string render_precision_bar(const PrecisionCounts& p, const RenderConfig& cfg = {}) {
  detail::check_config(cfg);
  using detail::fmt;
  long long total = p.white_out + p.white_in + p.black_in + p.black_out;
  if (total <= 0) return "";
  double bw = cfg.bar_width_px, bh = cfg.bar_height_px;
  std::array<std::pair<long long, const char*>, 4> segs = {{{p.white_out, "#FFFFFF"},
                                                            {p.white_in, kLightGray},
                                                            {p.black_in, kDarkGray},
                                                            {p.black_out, kRed}}};
  std::string out = "<g>\n";
  double y = 0.0;
  for (const auto& [count, color] : segs) {
    double hseg = bh * static_cast<double>(count) / static_cast<double>(total);
    if (count > 0)
      out += detail::rect_el(0, y, bw, hseg, "fill=\"" + std::string(color) + "\"");
    y += hseg;
  }
  out += detail::rect_el(0, 0, bw, bh,
                         "fill=\"none\" stroke=\"" + std::string(kDarkGray) + "\" stroke-width=\"" +
                             fmt(cfg.stroke_px) + "\"");
  out += "</g>\n";
  return out;
}

// Wrap a fragment (e.g. the precision bar) into a standalone document.
inline std::string svg_document(double width, double height, const std::string& fragment) {
  return detail::svg_open(width, height) + fragment + "</svg>\n";
}

}  // namespace ringmotif
