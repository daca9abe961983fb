#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringmotif/errors.hpp"
#include "ringmotif/graph.hpp"
#include "ringmotif/layout.hpp"
#include "ringmotif/select.hpp"
#include "ringmotif/synthetic.hpp"

namespace ringmotif {

inline nlohmann::json precision_json(const PrecisionCounts& p) {
  return {{"white_out", p.white_out},
          {"white_in", p.white_in},
          {"black_in", p.black_in},
          {"black_out", p.black_out}};
}

// Decomposition against the matrix it was computed on; pattern row/col
// ranges are positions in that matrix, `vertices` maps them back to vertex
// ids through the ordering.
inline nlohmann::json decomposition_json(const AdjacencyMatrix& m, const Decomposition& d) {
  nlohmann::json patterns = nlohmann::json::array();
  for (std::size_t i = 0; i < d.patterns.size(); ++i) {
    const Pattern& p = d.patterns[i];
    nlohmann::json jp = {{"kind", kind_name(p.kind)},
                         {"row_lo", p.row_lo},
                         {"row_hi", p.row_hi},
                         {"col_lo", p.col_lo},
                         {"col_hi", p.col_hi},
                         {"weight", p.weight},
                         {"cells_total", p.cells_total},
                         {"cells_black", p.cells_black},
                         {"color", palette_color(i)}};
    std::vector<int> rows, cols;
    for (int r = p.row_lo; r <= p.row_hi; ++r) rows.push_back(m.ordering.perm[r]);
    if (p.kind == PatternKind::Clique) {
      jp["vertices"] = rows;
    } else {
      for (int c = p.col_lo; c <= p.col_hi; ++c) cols.push_back(m.ordering.perm[c]);
      jp["row_vertices"] = rows;
      jp["col_vertices"] = cols;
    }
    patterns.push_back(std::move(jp));
  }
  return {{"n", m.n()},
          {"black_cells", m.bits.black_cells()},
          {"ordering", m.ordering.perm},
          {"total_weight", d.total_weight},
          {"precision", precision_json(d.precision)},
          {"patterns", std::move(patterns)}};
}

inline nlohmann::json layout_json(const LayoutState& st) {
  nlohmann::json glyphs = nlohmann::json::array();
  for (const Glyph& g : st.glyphs) {
    glyphs.push_back({{"pattern_index", g.pattern_index},
                      {"shape", g.shape == GlyphShape::Annulus ? "annulus" : "diamond_annulus"},
                      {"outer", g.outer},
                      {"inner", g.inner},
                      {"start", {g.start.x, g.start.y}},
                      {"center", {g.center.x, g.center.y}},
                      {"rotation", g.rotation},
                      {"color", g.color}});
  }
  nlohmann::json links = nlohmann::json::array();
  for (const Link& l : st.links) {
    nlohmann::json corners = nlohmann::json::array();
    for (const Vec2& c : link_corners(st.glyphs, l)) corners.push_back({c.x, c.y});
    links.push_back({{"clique", l.clique},
                     {"rect", l.rect},
                     {"v_lo", l.v_lo},
                     {"v_hi", l.v_hi},
                     {"clique_t", {l.cl_t0, l.cl_t1}},
                     {"rect_t", {l.re_t0, l.re_t1}},
                     {"corners", std::move(corners)}});
  }
  return {{"converged", st.converged},
          {"iterations", st.iterations},
          {"glyphs", std::move(glyphs)},
          {"links", std::move(links)}};
}

inline nlohmann::json truth_json(const SyntheticSpec& spec, std::uint64_t seed,
                                 const SyntheticResult& r) {
  nlohmann::json planted = nlohmann::json::array();
  for (const PlantedTruth& t : r.truth) {
    nlohmann::json jt = {{"kind", kind_name(t.kind)}};
    if (t.kind == PatternKind::Clique) {
      jt["vertices"] = t.a_ids;
    } else {
      jt["row_vertices"] = t.a_ids;
      jt["col_vertices"] = t.b_ids;
    }
    planted.push_back(std::move(jt));
  }
  return {{"n", spec.n},
          {"seed", seed},
          {"background", spec.background},
          {"flip", spec.flip},
          {"shuffle", spec.shuffle},
          {"edges", r.graph.m()},
          {"planted", std::move(planted)}};
}

inline void write_json_file(const nlohmann::json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed for '" + path + "'");
}

inline void write_text_file(const std::string& text, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace ringmotif
