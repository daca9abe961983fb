#include <catch2/catch_amalgamated.hpp>

#include "ringmotif/prefix.hpp"
#include "support/oracles.hpp"
#include "support/testutil.hpp"

using namespace ringmotif;

TEST_CASE("prefix tables on an all-white matrix are zero everywhere") {
  BitMatrix m(6);
  PrefixTables p = build_prefix(m);
  CHECK(p.black(0, 5, 0, 5) == 0);
  CHECK(p.vertical_pairs(0, 5, 0, 5) == 0);
  CHECK(p.horizontal_pairs(0, 5, 0, 5) == 0);
  CHECK(p.black(2, 3, 1, 4) == 0);
}

TEST_CASE("prefix tables on the 2x2 single-edge matrix") {
  BitMatrix m = testutil::matrix_from_rows({"01", "10"});
  PrefixTables p = build_prefix(m);
  CHECK(p.black(0, 1, 0, 1) == 2);
  CHECK(p.vertical_pairs(0, 1, 0, 1) == 0);
  CHECK(p.horizontal_pairs(0, 1, 0, 1) == 0);
}

TEST_CASE("every rectangle query matches a naive recount") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    int n = 5 + static_cast<int>(seed);
    BitMatrix m = testutil::random_bitmatrix(n, 0.45, seed);
    PrefixTables p = build_prefix(m);
    for (int r1 = 0; r1 < n; ++r1)
      for (int r2 = r1; r2 < n; ++r2)
        for (int c1 = 0; c1 < n; ++c1)
          for (int c2 = c1; c2 < n; ++c2) {
            oracles::RectCounts want = oracles::naive_rect(m, r1, r2, c1, c2);
            REQUIRE(p.black(r1, r2, c1, c2) == want.black);
            REQUIRE(p.vertical_pairs(r1, r2, c1, c2) == want.vertical_bb);
            REQUIRE(p.horizontal_pairs(r1, r2, c1, c2) == want.horizontal_bb);
          }
  }
}

namespace {

// literal row-pair count with the diagonal-column exclusion
long long naive_vertical_bb(const BitMatrix& m, int u, int j, int j2, bool excl) {
  long long k = 0;
  for (int c = j; c <= j2; ++c) {
    if (excl && (c == u || c == u + 1)) continue;
    if (m.at(u, c) && m.at(u + 1, c)) ++k;
  }
  return k;
}

long long naive_horizontal_bb(const BitMatrix& m, int c, int i, int i2, bool excl) {
  long long k = 0;
  for (int r = i; r <= i2; ++r) {
    if (excl && (r == c || r == c + 1)) continue;
    if (m.at(r, c) && m.at(r, c + 1)) ++k;
  }
  return k;
}

BitMatrix pure_clique_block(int n, int lo, int hi) {
  BitMatrix m(n);
  for (int r = lo; r <= hi; ++r)
    for (int c = lo; c <= hi; ++c)
      if (r != c) m.set(r, c, true);
  return m;
}

}  // namespace

TEST_CASE("row-pair queries on a pure clique block give k-2 with the exclusion") {
  int k = 6;
  BitMatrix m = pure_clique_block(10, 2, 2 + k - 1);
  PrefixTables p = build_prefix(m);
  for (int u = 2; u < 2 + k - 1; ++u) {
    CHECK(vertical_bb(p, u, 2, 2 + k - 1, true) == k - 2);
    CHECK(vertical_bb(p, u, 2, 2 + k - 1, true) == naive_vertical_bb(m, u, 2, 2 + k - 1, true));
  }
  for (int c = 2; c < 2 + k - 1; ++c) CHECK(horizontal_bb(p, c, 2, 2 + k - 1, true) == k - 2);
}

TEST_CASE("row-pair queries on a pure biclique give the full width") {
  BitMatrix m(12);
  for (int r = 1; r <= 3; ++r)
    for (int c = 6; c <= 9; ++c) {
      m.set(r, c, true);
      m.set(c, r, true);
    }
  PrefixTables p = build_prefix(m);
  CHECK(vertical_bb(p, 1, 6, 9, false) == 4);
  CHECK(vertical_bb(p, 2, 6, 9, false) == 4);
  CHECK(horizontal_bb(p, 6, 1, 3, false) == 3);
}

TEST_CASE("checkerboard rows have no aligned blacks") {
  BitMatrix m = testutil::matrix_from_rows({"0101", "1010", "0101", "1010"});
  PrefixTables p = build_prefix(m);
  for (int u = 0; u < 3; ++u) CHECK(vertical_bb(p, u, 0, 3, false) == 0);
}

TEST_CASE("diagonal exclusion is exercised on a dense matrix") {
  // all-ones grid: exclusion actually subtracts, unlike on hollow matrices
  BitMatrix m(7);
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) m.set(r, c, true);
  PrefixTables p = build_prefix(m);
  for (int u = 0; u < 6; ++u)
    for (int j = 0; j < 7; ++j)
      for (int j2 = j; j2 < 7; ++j2) {
        CHECK(vertical_bb(p, u, j, j2, true) == naive_vertical_bb(m, u, j, j2, true));
        CHECK(vertical_bb(p, u, j, j2, false) == naive_vertical_bb(m, u, j, j2, false));
      }
  for (int c = 0; c < 6; ++c)
    for (int i = 0; i < 7; ++i)
      for (int i2 = i; i2 < 7; ++i2) {
        CHECK(horizontal_bb(p, c, i, i2, true) == naive_horizontal_bb(m, c, i, i2, true));
        CHECK(horizontal_bb(p, c, i, i2, false) == naive_horizontal_bb(m, c, i, i2, false));
      }
}

TEST_CASE("pair queries with the exclusion match the naive scan on random matrices") {
  for (std::uint64_t seed = 11; seed <= 14; ++seed) {
    BitMatrix m = testutil::random_bitmatrix(9, 0.5, seed);
    PrefixTables p = build_prefix(m);
    for (int u = 0; u < 8; ++u)
      for (int j = 0; j < 9; ++j)
        for (int j2 = j; j2 < 9; ++j2)
          REQUIRE(vertical_bb(p, u, j, j2, true) == naive_vertical_bb(m, u, j, j2, true));
    for (int c = 0; c < 8; ++c)
      for (int i = 0; i < 9; ++i)
        for (int i2 = i; i2 < 9; ++i2)
          REQUIRE(horizontal_bb(p, c, i, i2, true) == naive_horizontal_bb(m, c, i, i2, true));
  }
}
