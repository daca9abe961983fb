#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

#include "ringmotif/graph.hpp"
#include "ringmotif/morans.hpp"
#include "ringmotif/tsp.hpp"
#include "support/oracles.hpp"
#include "support/testutil.hpp"

using namespace ringmotif;
using Catch::Matchers::WithinAbs;

namespace {

TspInstance random_instance(int size, std::uint64_t seed, int virtual_vertex = -1) {
  testutil::Rng rng(seed);
  TspInstance t;
  t.size = size;
  t.virtual_vertex = virtual_vertex;
  t.d.assign(static_cast<std::size_t>(size) * size, 0.0);
  for (int u = 0; u < size; ++u)
    for (int v = u + 1; v < size; ++v) {
      double w = (virtual_vertex >= 0 && (u == virtual_vertex || v == virtual_vertex)) ? 0.0
                                                                                      : 0.05 + rng.u01();
      t.at(u, v) = w;
      t.at(v, u) = w;
    }
  return t;
}

// copy u's distance profile onto v so the two become interchangeable
void duplicate_profile(TspInstance& t, int u, int v, double pair_distance) {
  for (int w = 0; w < t.size; ++w) {
    if (w == u || w == v) continue;
    t.at(v, w) = t.at(u, w);
    t.at(w, v) = t.at(w, u);
  }
  t.at(u, v) = pair_distance;
  t.at(v, u) = pair_distance;
}

}  // namespace

TEST_CASE("instance construction adds a zero-cost virtual vertex") {
  Graph path;
  path.n = 3;
  path.labels = {"a", "b", "c"};
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  AdjacencyMatrix m = materialize(path, Ordering::identity(3));
  TspInstance t = build_instance(m);
  REQUIRE(t.size == 4);
  REQUIRE(t.virtual_vertex == 3);
  CHECK(t.shift == 0.0);
  for (int v = 0; v < 4; ++v) {
    CHECK(t.at(3, v) == 0.0);
    CHECK(t.at(v, 3) == 0.0);
    CHECK(t.at(v, v) == 0.0);
  }
  MoransConstants k = MoransConstants::from(m.bits);
  for (int u = 0; u < 3; ++u)
    for (int v = u + 1; v < 3; ++v) {
      CHECK(t.at(u, v) == t.at(v, u));
      CHECK_THAT(t.at(u, v), WithinAbs(row_distance(m.bits, k, u, v), 1e-15));
    }
}

TEST_CASE("exact solver matches brute force on random instances") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    int size = 5 + static_cast<int>(seed % 5);
    TspInstance t = random_instance(size, seed);
    Tour tour = solve_exact(t);
    REQUIRE(static_cast<int>(tour.seq.size()) == size);
    std::vector<char> seen(size, 0);
    for (int v : tour.seq) seen[v] = 1;
    CHECK(std::count(seen.begin(), seen.end(), 1) == size);
    double best = oracles::brute_force_tour(t);
    CHECK_THAT(tour.length, WithinAbs(best, 1e-9));
    CHECK_THAT(tour_length(t, tour.seq), WithinAbs(tour.length, 1e-12));
  }
}

TEST_CASE("exact solver matches brute force with duplicated profiles") {
  for (std::uint64_t seed = 30; seed <= 40; ++seed) {
    TspInstance t = random_instance(8, seed);
    duplicate_profile(t, 1, 4, 0.01);
    duplicate_profile(t, 2, 6, 0.02);
    Tour tour = solve_exact(t);
    CHECK_THAT(tour.length, WithinAbs(oracles::brute_force_tour(t), 1e-9));
  }
}

TEST_CASE("a zero-distance twin pair stays exactly solvable") {
  TspInstance t = random_instance(7, 123);
  duplicate_profile(t, 2, 5, 0.0);
  Tour tour = solve_exact(t);
  CHECK_THAT(tour.length, WithinAbs(oracles::brute_force_tour(t), 1e-9));
}

TEST_CASE("exact solver is deterministic") {
  TspInstance t = random_instance(8, 77);
  Tour a = solve_exact(t);
  Tour b = solve_exact(t);
  CHECK(a.seq == b.seq);
  CHECK(a.length == b.length);
}

TEST_CASE("capacity errors trigger on unstructured instances over the cap") {
  TspInstance big = random_instance(19, 5, 18);
  CHECK_THROWS_AS(solve_exact(big, 16), CapacityError);
  CHECK_NOTHROW(solve_exact(big, 20));
}

TEST_CASE("identical vertices collapse the state space") {
  // thirty interchangeable vertices: far beyond 2^16 subsets, trivial as groups
  int size = 30;
  TspInstance t;
  t.size = size;
  t.d.assign(static_cast<std::size_t>(size) * size, 0.0);
  for (int u = 0; u < size; ++u)
    for (int v = 0; v < size; ++v)
      if (u != v) t.at(u, v) = 0.25;
  Tour tour = solve_exact(t, 16);
  CHECK_THAT(tour.length, WithinAbs(0.25 * size, 1e-12));
}

TEST_CASE("heuristic returns a zero tour on a zero instance") {
  TspInstance t;
  t.size = 6;
  t.virtual_vertex = 5;
  t.d.assign(36, 0.0);
  Tour tour = solve_heuristic(t, 42);
  CHECK(tour.length == 0.0);
  CHECK(tour.seq.size() == 6);
}

TEST_CASE("heuristic never loses to nearest neighbor or the identity path") {
  for (std::uint64_t seed = 50; seed <= 62; ++seed) {
    int size = 7 + static_cast<int>(seed % 6);
    TspInstance t = random_instance(size, seed, size - 1);
    Tour tour = solve_heuristic(t, seed);
    std::vector<int> nn = {size - 1};
    {
      std::vector<char> used(size, 0);
      used[size - 1] = 1;
      for (int step = 1; step < size; ++step) {
        int cur = nn.back(), pick = -1;
        double best = std::numeric_limits<double>::infinity();
        for (int v = 0; v < size; ++v)
          if (!used[v] && t.at(cur, v) < best) {
            best = t.at(cur, v);
            pick = v;
          }
        nn.push_back(pick);
        used[pick] = 1;
      }
    }
    CHECK(tour.length <= tour_length(t, nn) + 1e-12);
    std::vector<int> ident(size);
    for (int i = 0; i < size; ++i) ident[i] = i;
    CHECK(tour.length <= tour_length(t, ident) + 1e-12);
  }
}

TEST_CASE("heuristic tracks the exact optimum closely on small instances") {
  double worst_ratio = 1.0;
  for (std::uint64_t seed = 70; seed <= 85; ++seed) {
    TspInstance t = random_instance(9, seed, 8);
    Tour h = solve_heuristic(t, 7);
    Tour e = solve_exact(t);
    REQUIRE(h.length >= e.length - 1e-9);
    if (e.length > 0) worst_ratio = std::max(worst_ratio, h.length / e.length);
  }
  INFO("worst heuristic/exact ratio: " << worst_ratio);
  CHECK(worst_ratio < 1.25);
}

TEST_CASE("heuristic is deterministic per seed") {
  TspInstance t = random_instance(12, 91, 11);
  Tour a = solve_heuristic(t, 5);
  Tour b = solve_heuristic(t, 5);
  CHECK(a.seq == b.seq);
  CHECK(a.length == b.length);
}

TEST_CASE("tours convert to orderings by dropping the virtual vertex") {
  Tour t;
  t.seq = {3, 2, 0, 1};
  CHECK(tour_to_ordering(t, 3).perm == std::vector<int>{2, 0, 1});
  t.seq = {2, 0, 3, 1};
  CHECK(tour_to_ordering(t, 3).perm == std::vector<int>{1, 2, 0});
  t.seq = {0, 1, 2};
  CHECK_THROWS_AS(tour_to_ordering(t, 3), ValidationError);
}

TEST_CASE("tour length equals the path cost of the ordering it induces") {
  Graph g = testutil::random_graph(7, 0.4, 404);
  AdjacencyMatrix m = materialize(g, Ordering::identity(g.n));
  TspInstance t = build_instance(m);
  Tour tour = solve_exact(t);
  Ordering o = tour_to_ordering(tour, t.virtual_vertex);
  REQUIRE(o.valid());
  MoransConstants k = MoransConstants::from(m.bits);
  double path = (g.n - 1) * t.shift;  // shift applies to the row-row edges only
  for (int i = 0; i + 1 < g.n; ++i) path += row_distance(m.bits, k, o.perm[i], o.perm[i + 1]);
  CHECK_THAT(tour.length, WithinAbs(path, 1e-12));
}

TEST_CASE("tsplib dump carries the full matrix") {
  TspInstance t = random_instance(4, 7, 3);
  std::string text = dump_tsplib(t, "probe");
  CHECK(text.find("NAME: probe\n") != std::string::npos);
  CHECK(text.find("DIMENSION: 4\n") != std::string::npos);
  CHECK(text.find("EDGE_WEIGHT_FORMAT: FULL_MATRIX\n") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 8 + 4);
}
