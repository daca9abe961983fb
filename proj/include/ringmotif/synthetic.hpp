#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ringmotif/errors.hpp"
#include "ringmotif/graph.hpp"
#include "ringmotif/pattern.hpp"

namespace ringmotif {

// One block to plant: a clique on `a` vertices, a biclique on `a` x `b`
// vertices, or a star (one hub, `b` leaves).
struct PlantedPattern {
  PatternKind kind = PatternKind::Clique;
  int a = 0;
  int b = 0;
};

struct SyntheticSpec {
  int n = 0;
  double background = 0.0;  // edge probability outside the planted blocks
  double flip = 0.0;        // per planted edge: probability of removal
  bool shuffle = true;      // hide blocks behind a random vertex permutation
  std::vector<PlantedPattern> patterns;
};

// Planted ground truth in generated-vertex ids, sorted ascending per side.
struct PlantedTruth {
  PatternKind kind = PatternKind::Clique;
  std::vector<int> a_ids;
  std::vector<int> b_ids;  // empty for cliques
};

struct SyntheticResult {
  Graph graph;
  std::vector<PlantedTruth> truth;
};

namespace detail {

inline int planted_vertices(const PlantedPattern& p) {
  switch (p.kind) {
    case PatternKind::Clique: return p.a;
    case PatternKind::Biclique: return p.a + p.b;
    case PatternKind::Star: return 1 + p.b;
  }
  return 0;
}

inline void check_spec(const SyntheticSpec& spec) {
  if (spec.n < 0) throw ValidationError("synthetic: n must be nonnegative");
  if (spec.background < 0.0 || spec.background > 1.0)
    throw ValidationError("synthetic: background probability must be in [0, 1]");
  if (spec.flip < 0.0 || spec.flip > 1.0)
    throw ValidationError("synthetic: flip probability must be in [0, 1]");
  int needed = 0;
  for (const PlantedPattern& p : spec.patterns) {
    switch (p.kind) {
      case PatternKind::Clique:
        if (p.a < 2) throw ValidationError("synthetic: clique needs at least 2 vertices");
        if (p.b != 0) throw ValidationError("synthetic: clique takes a single size");
        break;
      case PatternKind::Biclique:
        if (p.a < 1 || p.b < 1)
          throw ValidationError("synthetic: biclique needs both sides nonempty");
        break;
      case PatternKind::Star:
        if (p.a != 1) throw ValidationError("synthetic: star has exactly one hub");
        if (p.b < 1) throw ValidationError("synthetic: star needs at least one leaf");
        break;
    }
    needed += planted_vertices(p);
  }
  if (needed > spec.n)
    throw ValidationError("synthetic: planted patterns need " + std::to_string(needed) +
                          " vertices but n = " + std::to_string(spec.n));
}

}  // namespace detail

// Deterministic planted-pattern generator.  Blocks take disjoint vertex sets
// (a random permutation's prefix when shuffling), planted edges survive with
// probability 1 - flip, and every unplanted pair is black with the
// background probability.  Raw mt19937_64 draws keep output platform-stable.
inline SyntheticResult generate_synthetic(const SyntheticSpec& spec, std::uint64_t seed) {
  detail::check_spec(spec);
  std::mt19937_64 rng(seed);
  auto coin = [&](double p) {
    return p > 0.0 && static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
  };

  std::vector<int> ids(static_cast<std::size_t>(spec.n));
  std::iota(ids.begin(), ids.end(), 0);
  if (spec.shuffle)
    for (int i = spec.n - 1; i > 0; --i)
      std::swap(ids[static_cast<std::size_t>(i)], ids[rng() % static_cast<std::uint64_t>(i + 1)]);

  SyntheticResult out;
  out.graph.n = spec.n;
  out.graph.labels.reserve(static_cast<std::size_t>(spec.n));
  for (int v = 0; v < spec.n; ++v) out.graph.labels.push_back(std::to_string(v));

  std::set<std::pair<int, int>> planted;
  auto plant = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    planted.insert({u, v});
  };
  std::size_t cursor = 0;
  for (const PlantedPattern& p : spec.patterns) {
    PlantedTruth t;
    t.kind = p.kind;
    int na = p.kind == PatternKind::Clique ? p.a : (p.kind == PatternKind::Star ? 1 : p.a);
    int nb = p.kind == PatternKind::Clique ? 0 : p.b;
    t.a_ids.assign(ids.begin() + cursor, ids.begin() + cursor + na);
    cursor += static_cast<std::size_t>(na);
    t.b_ids.assign(ids.begin() + cursor, ids.begin() + cursor + nb);
    cursor += static_cast<std::size_t>(nb);
    if (p.kind == PatternKind::Clique) {
      for (std::size_t i = 0; i < t.a_ids.size(); ++i)
        for (std::size_t j = i + 1; j < t.a_ids.size(); ++j) plant(t.a_ids[i], t.a_ids[j]);
    } else {
      for (int u : t.a_ids)
        for (int v : t.b_ids) plant(u, v);
    }
    std::sort(t.a_ids.begin(), t.a_ids.end());
    std::sort(t.b_ids.begin(), t.b_ids.end());
    out.truth.push_back(std::move(t));
  }

  for (const auto& [u, v] : planted)
    if (!coin(spec.flip)) out.graph.add_edge(u, v);
  for (int u = 0; u < spec.n; ++u)
    for (int v = u + 1; v < spec.n; ++v)
      if (!planted.count({u, v}) && coin(spec.background)) out.graph.add_edge(u, v);
  return out;
}

}  // namespace ringmotif
