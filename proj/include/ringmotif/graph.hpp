#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ringmotif/errors.hpp"

namespace ringmotif {

// Simple undirected graph: vertices 0..n-1 with string labels, edges stored
// as normalized (u < v) pairs.  No self loops, no multi-edges.
struct Graph {
  int n = 0;
  std::vector<std::string> labels;
  std::set<std::pair<int, int>> edges;

  int m() const { return static_cast<int>(edges.size()); }

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return edges.count({u, v}) > 0;
  }

  void add_edge(int u, int v) {
    if (u == v) throw ValidationError("self loop on vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    edges.insert({u, v});
  }
};

// Permutation of 0..n-1; perm[position] = vertex placed at that position.
struct Ordering {
  std::vector<int> perm;

  int size() const { return static_cast<int>(perm.size()); }

  static Ordering identity(int n) {
    Ordering o;
    o.perm.resize(n);
    std::iota(o.perm.begin(), o.perm.end(), 0);
    return o;
  }

  Ordering inverse() const {
    Ordering inv;
    inv.perm.assign(perm.size(), 0);
    for (int pos = 0; pos < size(); ++pos) inv.perm[perm[pos]] = pos;
    return inv;
  }

  bool valid() const {
    std::vector<char> seen(perm.size(), 0);
    for (int v : perm) {
      if (v < 0 || v >= size() || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }
};

// Dense 0/1 matrix, row major.  Not necessarily symmetric; this is the raw
// cell grid the autocorrelation measures operate on.
struct BitMatrix {
  int n = 0;
  std::vector<std::uint8_t> cells;

  BitMatrix() = default;
  explicit BitMatrix(int size) : n(size), cells(static_cast<std::size_t>(size) * size, 0) {}

  std::uint8_t at(int r, int c) const { return cells[static_cast<std::size_t>(r) * n + c]; }
  void set(int r, int c, bool v) { cells[static_cast<std::size_t>(r) * n + c] = v ? 1 : 0; }

  long long black_cells() const {
    long long b = 0;
    for (auto v : cells) b += v;
    return b;
  }
};

// Symmetric zero-diagonal 0/1 matrix representing a graph under a vertex
// ordering: cell (p, q) = 1 iff the vertices at positions p and q are
// adjacent.
struct AdjacencyMatrix {
  BitMatrix bits;
  Ordering ordering;

  int n() const { return bits.n; }
  std::uint8_t at(int r, int c) const { return bits.at(r, c); }
};

inline AdjacencyMatrix materialize(const Graph& g, const Ordering& o) {
  if (o.size() != g.n || !o.valid())
    throw ValidationError("ordering is not a permutation of the graph's vertices");
  AdjacencyMatrix m;
  m.bits = BitMatrix(g.n);
  m.ordering = o;
  Ordering inv = o.inverse();
  for (const auto& [u, v] : g.edges) {
    int p = inv.perm[u], q = inv.perm[v];
    m.bits.set(p, q, true);
    m.bits.set(q, p, true);
  }
  return m;
}

// Edge-list text: one "labelA labelB" pair per non-empty line, '#' starts a
// comment line.  Vertices are interned in first-seen order.  Duplicate edges
// collapse; self loops are rejected.
inline Graph load_edge_list(std::istream& in) {
  Graph g;
  std::map<std::string, int> index;
  auto intern = [&](const std::string& s) {
    auto [it, inserted] = index.emplace(s, g.n);
    if (inserted) {
      g.labels.push_back(s);
      ++g.n;
    }
    return it->second;
  };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string::size_type hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;
    if (!(ls >> b)) throw ParseError("expected two vertex labels", lineno);
    if (ls >> extra) throw ParseError("trailing token '" + extra + "'", lineno);
    if (a == b) throw ParseError("self loop on '" + a + "'", lineno);
    int ua = intern(a);  // sequenced: argument order must not decide ids
    int ub = intern(b);
    g.add_edge(ua, ub);
  }
  return g;
}

inline Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return load_edge_list(in);
}

// Matrix text: n lines of n characters, each '0' or '1'.  Must be square,
// symmetric and zero on the diagonal.
inline AdjacencyMatrix load_matrix(std::istream& in) {
  std::vector<std::string> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    for (char ch : line)
      if (ch != '0' && ch != '1') throw ParseError(std::string("invalid character '") + ch + "'", lineno);
    rows.push_back(line);
  }
  int n = static_cast<int>(rows.size());
  for (int r = 0; r < n; ++r)
    if (static_cast<int>(rows[r].size()) != n)
      throw ValidationError("matrix is not square: row " + std::to_string(r) + " has " +
                            std::to_string(rows[r].size()) + " cells, expected " + std::to_string(n));
  AdjacencyMatrix m;
  m.bits = BitMatrix(n);
  m.ordering = Ordering::identity(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.bits.set(r, c, rows[r][c] == '1');
  for (int r = 0; r < n; ++r)
    if (m.at(r, r))
      throw ValidationError("nonzero diagonal at cell (" + std::to_string(r) + "," + std::to_string(r) + ")");
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c)
      if (m.at(r, c) != m.at(c, r))
        throw ValidationError("asymmetry at cell (" + std::to_string(r) + "," + std::to_string(c) + ")");
  return m;
}

inline AdjacencyMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return load_matrix(in);
}

inline std::string matrix_to_text(const BitMatrix& m) {
  std::string out;
  out.reserve(static_cast<std::size_t>(m.n) * (m.n + 1));
  for (int r = 0; r < m.n; ++r) {
    for (int c = 0; c < m.n; ++c) out.push_back(m.at(r, c) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

inline void save_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  for (const auto& [u, v] : g.edges) out << g.labels[u] << ' ' << g.labels[v] << '\n';
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace ringmotif
