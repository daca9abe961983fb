#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "ringmotif/errors.hpp"
#include "ringmotif/graph.hpp"
#include "ringmotif/morans.hpp"

namespace ringmotif {

// Complete symmetric TSP instance over the matrix rows plus one virtual
// vertex at index size-1 whose edges all cost zero; a minimal tour through
// it corresponds to a minimal Hamiltonian path over the rows.
struct TspInstance {
  int size = 0;
  int virtual_vertex = -1;
  double shift = 0.0;  // global offset applied to row-row distances
  std::vector<double> d;

  double at(int u, int v) const { return d[static_cast<std::size_t>(u) * size + v]; }
  double& at(int u, int v) { return d[static_cast<std::size_t>(u) * size + v]; }
};

struct Tour {
  std::vector<int> seq;
  double length = 0.0;
};

inline double tour_length(const TspInstance& t, const std::vector<int>& seq) {
  if (seq.size() < 2) return 0.0;
  double len = 0.0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) len += t.at(seq[i], seq[i + 1]);
  len += t.at(seq.back(), seq.front());
  return len;
}

inline TspInstance build_instance(const AdjacencyMatrix& m) {
  int n = m.n();
  MoransConstants k = MoransConstants::from(m.bits);
  TspInstance t;
  t.size = n + 1;
  t.virtual_vertex = n;
  t.d.assign(static_cast<std::size_t>(t.size) * t.size, 0.0);
  double lo = 0.0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double delta = row_distance(m.bits, k, u, v);
      t.at(u, v) = delta;
      t.at(v, u) = delta;
      lo = std::min(lo, delta);
    }
  if (lo < 0.0) {
    t.shift = -lo;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) t.at(u, v) += t.shift;
  }
  return t;
}

namespace detail {

// Vertices with identical distance profiles are interchangeable in any
// tour, so the Held-Karp state only needs per-group counts, not subsets.
// Groups collapse the otherwise 2^n blowup on structured instances.
struct VertexGroups {
  std::vector<std::vector<int>> members;  // ascending within each group
  std::vector<int> group_of;
};

inline VertexGroups group_identical(const TspInstance& t) {
  int s = t.size;
  VertexGroups g;
  g.group_of.assign(s, -1);
  bool symmetric = true;
  for (int u = 0; u < s && symmetric; ++u)
    for (int v = u + 1; v < s; ++v)
      if (t.at(u, v) != t.at(v, u)) {
        symmetric = false;
        break;
      }
  auto same = [&](int u, int v) {
    for (int w = 0; w < s; ++w) {
      if (w == u || w == v) continue;
      if (t.at(u, w) != t.at(v, w) || t.at(w, u) != t.at(w, v)) return false;
    }
    return true;
  };
  for (int u = 0; u < s; ++u) {
    if (symmetric)
      for (std::size_t gi = 0; gi < g.members.size(); ++gi)
        if (same(u, g.members[gi].front())) {
          g.group_of[u] = static_cast<int>(gi);
          g.members[gi].push_back(u);
          break;
        }
    if (g.group_of[u] < 0) {
      g.group_of[u] = static_cast<int>(g.members.size());
      g.members.push_back({u});
    }
  }
  return g;
}

}  // namespace detail

// Exact solver: Held-Karp over count states of identical-vertex groups.
// The cap bounds the reachable state space at 2^cap entries; a fully
// distinct instance of k vertices plus the zero-cost virtual vertex costs
// exactly 2^k states, so the default admits up to 16 matrix rows and
// rejects larger unstructured instances with a CapacityError.
inline Tour solve_exact(const TspInstance& t, int cap = 16) {
  int s = t.size;
  Tour out;
  if (s == 0) return out;
  if (s == 1) {
    out.seq = {0};
    return out;
  }
  detail::VertexGroups vg = detail::group_identical(t);
  int ng = static_cast<int>(vg.members.size());
  int start = t.virtual_vertex >= 0 ? t.virtual_vertex : 0;
  int g0 = vg.group_of[start];

  // mixed-radix encoding of per-group counts
  std::vector<std::uint64_t> weight(ng, 0);
  std::uint64_t full_states = 1;
  std::uint64_t reachable = 1;
  const std::uint64_t budget = 1ULL << std::clamp(cap, 1, 62);
  for (int gi = 0; gi < ng; ++gi) {
    std::uint64_t radix = vg.members[gi].size() + 1;
    std::uint64_t reach = gi == g0 ? radix - 1 : radix;
    if (reachable > budget / reach)
      throw CapacityError("exact solver state space exceeds 2^" + std::to_string(cap) +
                          "; use the heuristic solver for this instance");
    reachable *= reach;
    weight[gi] = full_states;
    full_states *= radix;
  }

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dp(full_states * ng, inf);
  std::vector<std::uint8_t> parent(full_states * ng, 255);

  // distance between (distinct) representatives of two groups
  auto gdist = [&](int a, int b) {
    if (a != b) return t.at(vg.members[a].front(), vg.members[b].front());
    return t.at(vg.members[a][0], vg.members[a][1]);
  };

  std::uint64_t init = weight[g0];
  dp[init * ng + g0] = 0.0;

  std::vector<int> counts(ng);
  std::uint64_t fullmask = 0;
  for (int gi = 0; gi < ng; ++gi) fullmask += weight[gi] * vg.members[gi].size();

  for (std::uint64_t st = init; st <= fullmask; ++st) {
    {  // decode counts; skip states never touched
      std::uint64_t rest = st;
      for (int gi = ng - 1; gi >= 0; --gi) {
        counts[gi] = static_cast<int>(rest / weight[gi]);
        rest %= weight[gi];
      }
    }
    for (int g = 0; g < ng; ++g) {
      double base = dp[st * ng + g];
      if (base == inf) continue;
      for (int h = 0; h < ng; ++h) {
        if (counts[h] >= static_cast<int>(vg.members[h].size())) continue;
        std::uint64_t nst = st + weight[h];
        double cost = base + gdist(g, h);
        double& slot = dp[nst * ng + h];
        if (cost < slot) {
          slot = cost;
          parent[nst * ng + h] = static_cast<std::uint8_t>(g);
        }
      }
    }
  }

  int best_g = -1;
  double best = inf;
  for (int g = 0; g < ng; ++g) {
    double v = dp[fullmask * ng + g];
    if (v == inf) continue;
    double closed = v + (g == g0 && vg.members[g0].size() == 1 ? 0.0 : gdist(g, g0));
    if (closed < best) {
      best = closed;
      best_g = g;
    }
  }

  // walk parents back to the initial state, then hand out concrete ids
  std::vector<int> group_seq;
  std::uint64_t st = fullmask;
  int g = best_g;
  while (st != init) {
    group_seq.push_back(g);
    int pg = parent[st * ng + g];
    st -= weight[g];
    g = pg;
  }
  group_seq.push_back(g0);
  std::reverse(group_seq.begin(), group_seq.end());

  std::vector<std::vector<int>> queue(ng);
  for (int gi = 0; gi < ng; ++gi) {
    queue[gi] = vg.members[gi];
    if (gi == g0) {
      queue[gi].erase(std::find(queue[gi].begin(), queue[gi].end(), start));
      queue[gi].insert(queue[gi].begin(), start);
    }
  }
  std::vector<std::size_t> next(ng, 0);
  for (int gi : group_seq) out.seq.push_back(queue[gi][next[gi]++]);
  out.length = tour_length(t, out.seq);
  return out;
}

namespace detail {

inline std::vector<int> nearest_neighbor(const TspInstance& t, int start) {
  int s = t.size;
  std::vector<int> seq;
  std::vector<char> used(s, 0);
  seq.reserve(s);
  seq.push_back(start);
  used[start] = 1;
  for (int step = 1; step < s; ++step) {
    int cur = seq.back(), pick = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int v = 0; v < s; ++v)
      if (!used[v] && t.at(cur, v) < best) {
        best = t.at(cur, v);
        pick = v;
      }
    seq.push_back(pick);
    used[pick] = 1;
  }
  return seq;
}

constexpr double kImproveEps = 1e-12;

inline bool two_opt_pass(const TspInstance& t, std::vector<int>& seq) {
  int s = static_cast<int>(seq.size());
  bool improved = false;
  for (int i = 0; i < s - 1; ++i)
    for (int j = i + 1; j < s; ++j) {
      if (i == 0 && j == s - 1) continue;
      int a = seq[i == 0 ? s - 1 : i - 1], b = seq[i];
      int c = seq[j], dnext = seq[(j + 1) % s];
      double delta = t.at(a, c) + t.at(b, dnext) - t.at(a, b) - t.at(c, dnext);
      if (delta < -kImproveEps) {
        std::reverse(seq.begin() + i, seq.begin() + j + 1);
        improved = true;
      }
    }
  return improved;
}

inline bool or_opt_pass(const TspInstance& t, std::vector<int>& seq) {
  int s = static_cast<int>(seq.size());
  bool improved = false;
  for (int len = 1; len <= 3; ++len) {
    if (len >= s - 1) break;
    for (int i = 0; i + len <= s; ++i) {
      int prev = seq[(i + s - 1) % s];
      int head = seq[i], tail = seq[i + len - 1];
      int nxt = seq[(i + len) % s];
      double removal = t.at(prev, head) + t.at(tail, nxt) - t.at(prev, nxt);
      int moved = -1;
      double bestDelta = -kImproveEps;
      for (int j = 0; j < s; ++j) {
        if (j >= i - 1 && j < i + len) continue;  // adjacent to or inside segment
        int u = seq[j], v = seq[(j + 1) % s];
        if (u == prev) continue;
        double insertion = t.at(u, head) + t.at(tail, v) - t.at(u, v);
        double delta = insertion - removal;
        if (delta < bestDelta) {
          bestDelta = delta;
          moved = j;
        }
      }
      if (moved >= 0) {
        std::vector<int> segment(seq.begin() + i, seq.begin() + i + len);
        seq.erase(seq.begin() + i, seq.begin() + i + len);
        int at = moved;
        if (at >= i) at -= len;
        seq.insert(seq.begin() + at + 1, segment.begin(), segment.end());
        improved = true;
        i = -1;  // restart this length after structural change
      }
    }
  }
  return improved;
}

inline void improve(const TspInstance& t, std::vector<int>& seq, int budget) {
  int passes = 0;
  bool any = true;
  while (any && passes < budget) {
    any = false;
    while (passes < budget) {
      ++passes;
      if (!two_opt_pass(t, seq)) break;
      any = true;
    }
    while (passes < budget) {
      ++passes;
      if (!or_opt_pass(t, seq)) break;
      any = true;
    }
  }
}

}  // namespace detail

// Heuristic solver: improvement (2-opt, then Or-opt with segment lengths
// 1..3, alternating to convergence under a 50*size pass budget) over a
// deterministic candidate set: nearest-neighbor from the virtual vertex,
// the identity path (so the result never scores worse than the input
// order), and two seeded nearest-neighbor restarts.
inline Tour solve_heuristic(const TspInstance& t, std::uint64_t seed) {
  int s = t.size;
  Tour out;
  if (s == 0) return out;
  if (s == 1) {
    out.seq = {0};
    return out;
  }
  int start = t.virtual_vertex >= 0 ? t.virtual_vertex : 0;
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> candidates;
  candidates.push_back(detail::nearest_neighbor(t, start));
  {
    std::vector<int> ident(s);
    for (int i = 0; i < s; ++i) ident[i] = i;
    candidates.push_back(std::move(ident));
  }
  candidates.push_back(detail::nearest_neighbor(t, static_cast<int>(rng() % s)));
  candidates.push_back(detail::nearest_neighbor(t, static_cast<int>(rng() % s)));

  int budget = 50 * s;
  bool first = true;
  for (auto& seq : candidates) {
    detail::improve(t, seq, budget);
    double len = tour_length(t, seq);
    if (first || len < out.length) {
      out.seq = seq;
      out.length = len;
      first = false;
    }
  }
  return out;
}

// Rotate the tour so the virtual vertex leads, then drop it; what is left
// is the row order.
inline Ordering tour_to_ordering(const Tour& t, int virtual_vertex) {
  auto it = std::find(t.seq.begin(), t.seq.end(), virtual_vertex);
  if (it == t.seq.end()) throw ValidationError("tour does not visit the virtual vertex");
  Ordering o;
  o.perm.reserve(t.seq.size() - 1);
  for (auto p = it + 1; p != t.seq.end(); ++p) o.perm.push_back(*p);
  for (auto p = t.seq.begin(); p != it; ++p) o.perm.push_back(*p);
  return o;
}

inline std::string dump_tsplib(const TspInstance& t, const std::string& name) {
  std::string out;
  out += "NAME: " + name + "\n";
  out += "TYPE: TSP\n";
  out += "COMMENT: row seriation distances (virtual vertex last)\n";
  out += "DIMENSION: " + std::to_string(t.size) + "\n";
  out += "EDGE_WEIGHT_TYPE: EXPLICIT\n";
  out += "EDGE_WEIGHT_FORMAT: FULL_MATRIX\n";
  out += "EDGE_WEIGHT_SECTION\n";
  char buf[32];
  for (int u = 0; u < t.size; ++u) {
    for (int v = 0; v < t.size; ++v) {
      std::snprintf(buf, sizeof buf, "%.9f", t.at(u, v));
      out += buf;
      out.push_back(v + 1 == t.size ? '\n' : ' ');
    }
  }
  out += "EOF\n";
  return out;
}

}  // namespace ringmotif
