#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "ringmotif/graph.hpp"
#include "ringmotif/morans.hpp"
#include "support/oracles.hpp"
#include "support/testutil.hpp"

using namespace ringmotif;
using Catch::Matchers::WithinAbs;

TEST_CASE("constants for the 2x2 checker matrix") {
  BitMatrix m = testutil::matrix_from_rows({"01", "10"});
  MoransConstants k = MoransConstants::from(m);
  CHECK_THAT(k.c_b, WithinAbs(0.5, 1e-15));
  CHECK_THAT(k.c_w, WithinAbs(0.5, 1e-15));
  CHECK_THAT(morans_i_simplified(m), WithinAbs(-1.0, 1e-15));
}

TEST_CASE("simplified formula matches the general definition") {
  int cases = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    int n = 2 + static_cast<int>(seed % 11);
    double p = 0.1 + 0.8 * ((seed * 7) % 10) / 10.0;
    BitMatrix m = testutil::random_bitmatrix(n, p, seed);
    double simplified = morans_i_simplified(m);
    double general = oracles::morans_general(m);
    REQUIRE_THAT(simplified, WithinAbs(general, 1e-10 * std::max(1.0, std::abs(general))));
    ++cases;
  }
  CHECK(cases == 120);
}

TEST_CASE("transpose leaves the score unchanged") {
  for (std::uint64_t seed : {5, 6, 7}) {
    BitMatrix m = testutil::random_bitmatrix(8, 0.35, seed);
    BitMatrix mt(m.n);
    for (int r = 0; r < m.n; ++r)
      for (int c = 0; c < m.n; ++c) mt.set(c, r, m.at(r, c));
    CHECK_THAT(morans_i_simplified(m), WithinAbs(morans_i_simplified(mt), 1e-12));
  }
}

TEST_CASE("degenerate matrices are rejected") {
  BitMatrix white(3);
  CHECK_THROWS_AS(morans_i_simplified(white), DegenerateInputError);
  BitMatrix black(3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) black.set(r, c, true);
  CHECK_THROWS_AS(morans_i_simplified(black), DegenerateInputError);
  BitMatrix tiny(1);
  tiny.set(0, 0, true);
  CHECK_THROWS_AS(morans_i_simplified(tiny), DegenerateInputError);
}

TEST_CASE("row similarity worked examples") {
  SECTION("two all-white rows score c_w per column") {
    // single edge between the first two vertices; rows 2 and 3 are blank
    Graph g;
    g.n = 4;
    g.labels = {"a", "b", "c", "d"};
    g.add_edge(0, 1);
    AdjacencyMatrix m = materialize(g, Ordering::identity(4));
    MoransConstants k = MoransConstants::from(m.bits);
    CHECK_THAT(row_similarity(m, 2, 3), WithinAbs(k.c_w * 4, 1e-15));
  }
  SECTION("complementary rows share nothing") {
    BitMatrix m = testutil::matrix_from_rows({"01", "10"});
    CHECK_THAT(row_similarity(m, 0, 1), WithinAbs(0.0, 1e-15));
  }
  SECTION("mixed rows count both-black and both-white columns") {
    BitMatrix m = testutil::matrix_from_rows({"10110", "10011", "00000", "00000", "00000"});
    MoransConstants k = MoransConstants::from(m);
    CHECK_THAT(row_similarity(m, 0, 1), WithinAbs(2 * k.c_b + k.c_w, 1e-15));
    CHECK_THAT(row_distance(m, 0, 1), WithinAbs(1.0 - (2 * k.c_b + k.c_w), 1e-15));
  }
}

TEST_CASE("row similarity is symmetric") {
  BitMatrix m = testutil::random_bitmatrix(9, 0.4, 31);
  MoransConstants k = MoransConstants::from(m);
  for (int u = 0; u < m.n; ++u)
    for (int v = u + 1; v < m.n; ++v)
      CHECK(row_similarity(m, k, u, v) == row_similarity(m, k, v, u));
}

// The score of a reordered matrix decomposes over consecutive row pairs:
// I = 2 * sum s(rho(i), rho(i+1)) - 1, which is what turns seriation into a
// shortest-path problem.
TEST_CASE("score decomposes over adjacent row pairs for every ordering") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    int n = 3 + static_cast<int>(seed % 4);
    Graph g = testutil::random_graph(n, 0.45, seed * 13);
    AdjacencyMatrix base = materialize(g, Ordering::identity(n));
    MoransConstants k = MoransConstants::from(base.bits);
    Ordering o = Ordering::identity(n);
    std::sort(o.perm.begin(), o.perm.end());
    do {
      double sum = 0.0;
      for (int i = 0; i + 1 < n; ++i) sum += row_similarity(base.bits, k, o.perm[i], o.perm[i + 1]);
      double direct = morans_i_simplified(materialize(g, o));
      REQUIRE_THAT(direct, WithinAbs(2.0 * sum - 1.0, 1e-12));
    } while (std::next_permutation(o.perm.begin(), o.perm.end()));
  }
}
