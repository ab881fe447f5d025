#include <set>

#include "doctest.h"
#include "kss/tableau.hpp"
#include "support.hpp"

using namespace kss;
using kss::testing::T;

namespace {

// Every filling of an r x s rectangle with letters 1..n+1, kept if
// semistandard. Independent of enumerate_kr.
std::set<std::vector<std::vector<Letter>>> brute_force_rectangles(int r, int s, int n) {
  std::set<std::vector<std::vector<Letter>>> out;
  std::vector<Letter> cells(r * s, 1);
  for (;;) {
    bool ok = true;
    for (int i = 0; i < r && ok; ++i)
      for (int j = 0; j < s && ok; ++j) {
        const Letter x = cells[i * s + j];
        if (j + 1 < s && x > cells[i * s + j + 1]) ok = false;
        if (i + 1 < r && x >= cells[(i + 1) * s + j]) ok = false;
      }
    if (ok) {
      std::vector<std::vector<Letter>> rows(r);
      for (int i = 0; i < r; ++i) rows[i].assign(cells.begin() + i * s, cells.begin() + (i + 1) * s);
      out.insert(rows);
    }
    std::size_t k = 0;
    while (k < cells.size() && ++cells[k] > n + 1) cells[k++] = 1;
    if (k == cells.size()) break;
  }
  return out;
}

// Corners of a tableau: the last cell of each row that is longer than the
// next one.
std::vector<Cell> corners(const Tableau& t) {
  std::vector<Cell> out;
  const auto& rows = t.rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (i + 1 == rows.size() || rows[i + 1].size() < rows[i].size())
      out.push_back({static_cast<int>(i) + 1, static_cast<int>(rows[i].size())});
  return out;
}

}  // namespace

TEST_SUITE("tableau") {

TEST_CASE("construction validates semistandardness") {
  CHECK_NOTHROW(T(3, {{1, 1, 2}, {2, 3}}));
  CHECK_THROWS_AS(T(3, {{2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(T(3, {{1, 2}, {1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(T(3, {{1}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(T(2, {{1, 4}}), std::invalid_argument);
  CHECK(Tableau(3).empty());
}

TEST_CASE("row insertion examples") {
  SUBCASE("displaced chain runs into a new bottom row") {
    const auto t = T(5, {{1, 1, 1, 1, 2, 2, 3, 4, 5, 5}, {2, 2, 3, 3, 3, 4, 4, 5}, {3, 4, 5, 5, 6}});
    const auto [u, cell] = insert(t, 2);
    CHECK(u == T(5, {{1, 1, 1, 1, 2, 2, 2, 4, 5, 5}, {2, 2, 3, 3, 3, 3, 4, 5}, {3, 4, 4, 5, 6}, {5}}));
    CHECK(cell == Cell{4, 1});
  }
  SUBCASE("into the empty tableau") {
    const auto [u, cell] = insert(Tableau(5), 5);
    CHECK(u == T(5, {{5}}));
    CHECK(cell == Cell{1, 1});
  }
  SUBCASE("a smaller letter bumps into the second row") {
    const auto [u, cell] = insert(T(2, {{2}}), 1);
    CHECK(u == T(2, {{1}, {2}}));
    CHECK(cell == Cell{2, 1});
  }
  SUBCASE("word insertion") {
    CHECK(insert_word(T(5, {{3, 4}, {4, 5}, {5, 6}}), {2, 4, 1, 1}) ==
          T(5, {{1, 1, 4}, {2, 4}, {3, 5}, {4, 6}, {5}}));
    const auto t = T(3, {{1, 2}, {3, 4}});
    CHECK(insert_word(t, {}) == t);
  }
}

TEST_CASE("inverse insertion examples") {
  const auto [t, x] = inverse_insert(T(5, {{1, 4, 4}, {2, 5}, {3, 6}, {4}, {5}}), {5, 1});
  CHECK(t == T(5, {{2, 4, 4}, {3, 5}, {4, 6}, {5}}));
  CHECK(x == 1);

  const auto [e, y] = inverse_insert(T(5, {{5}}), {1, 1});
  CHECK(e.empty());
  CHECK(y == 5);

  CHECK_THROWS_WITH_AS(inverse_insert(T(3, {{1, 2}, {3, 4}}), {1, 2}), "not a corner",
                       std::invalid_argument);
}

TEST_CASE("row word reconstructs its tableau") {
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= std::min(n, 3); ++r)
      for (int s = 1; s <= 3; ++s)
        for (const auto& t : enumerate_kr(r, s, n)) {
          CAPTURE(t);
          CHECK(insert_word(Tableau(n), row_word(t)) == t);
        }
}

TEST_CASE("insert and inverse_insert are mutually inverse") {
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= std::min(n, 2); ++r)
      for (int s = 1; s <= 2; ++s)
        for (const auto& t : enumerate_kr(r, s, n)) {
          for (Letter x = 1; x <= n + 1; ++x) {
            const auto [u, cell] = insert(t, x);
            CHECK(u.size() == t.size() + 1);
            const auto [back, y] = inverse_insert(u, cell);
            CHECK(back == t);
            CHECK(y == x);
          }
          for (const Cell c : corners(t)) {
            const auto [u, x] = inverse_insert(t, c);
            const auto [again, cell] = insert(u, x);
            CHECK(again == t);
            CHECK(cell == c);
          }
        }
}

TEST_CASE("highest elements") {
  CHECK(highest_element(3, 4, 3) == T(3, {{1, 1, 1, 1}, {2, 2, 2, 2}, {3, 3, 3, 3}}));
  CHECK(highest_element(1, 1, 2) == T(2, {{1}}));
  CHECK(highest_element(2, 1, 2) == T(2, {{1}, {2}}));
  CHECK_THROWS(highest_element(3, 1, 2));
  // Entrywise minimum of B^{a,l}.
  for (int n = 1; n <= 3; ++n)
    for (int a = 1; a <= n; ++a)
      for (int l = 1; l <= 2; ++l) {
        const auto u = highest_element(a, l, n);
        for (const auto& t : enumerate_kr(a, l, n))
          for (int i = 0; i < a; ++i)
            for (int j = 0; j < l; ++j) CHECK(u.rows()[i][j] <= t.rows()[i][j]);
      }
}

TEST_CASE("enumerate_kr") {
  CHECK(enumerate_kr(1, 1, 1) == std::vector{T(1, {{1}}), T(1, {{2}})});
  CHECK(enumerate_kr(2, 1, 1) == std::vector{T(1, {{1}, {2}})});
  // Hook-content formula for shape (2,2) over four letters: 4*5*3*4 / (3*2*2*1).
  CHECK(enumerate_kr(2, 2, 3).size() == 20);

  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= n; ++r)
      for (int s = 1; s <= 6 / r; ++s) {
        CAPTURE(n);
        CAPTURE(r);
        CAPTURE(s);
        const auto all = enumerate_kr(r, s, n);
        std::set<std::vector<std::vector<Letter>>> got;
        for (const auto& t : all) got.insert(t.rows());
        CHECK(got.size() == all.size());
        CHECK(got == brute_force_rectangles(r, s, n));
        for (std::size_t i = 1; i < all.size(); ++i) CHECK(row_word(all[i - 1]) < row_word(all[i]));
      }
}

TEST_CASE("compact form") {
  CHECK(io::compact(T(3, {{1, 1}, {2, 4}})) == "11/24");
  CHECK(io::compact(Tableau(3)) == "()");
  CHECK(io::compact(T(9, {{1, 10}})) == "1,10");
}

}  // TEST_SUITE
