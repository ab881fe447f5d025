#include <optional>

#include "doctest.h"
#include "kss/rmatrix.hpp"
#include "kss/verify.hpp"
#include "support.hpp"

using namespace kss;
using kss::testing::T;

namespace {

// Kashiwara operator f_i on a word by the bracket rule: each i+1 is matched
// with a later unmatched i, and the rightmost unmatched i becomes i+1.
std::optional<Word> lower(Word w, Letter i) {
  std::vector<std::size_t> open;   // unmatched i+1
  std::vector<std::size_t> free_i; // unmatched i
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == i + 1) open.push_back(k);
    if (w[k] == i) {
      if (!open.empty())
        open.pop_back();
      else
        free_i.push_back(k);
    }
  }
  if (free_i.empty()) return std::nullopt;
  w[free_i.back()] = i + 1;
  return w;
}

// Refills the rows of `shape_of` (bottom row first) from w[from, from+size).
Tableau refill(const Tableau& shape_of, const Word& w, std::size_t from) {
  auto rows = shape_of.rows();
  for (std::size_t r = rows.size(); r-- > 0;)
    for (auto& x : rows[r]) x = w[from++];
  return Tableau(shape_of.rank(), std::move(rows));
}

// f_i on b ⊗ b', read through the word row(b') row(b).
std::optional<TensorPair> lower(const TensorPair& p, Letter i) {
  Word w = row_word(p.right);
  const auto left = row_word(p.left);
  w.insert(w.end(), left.begin(), left.end());
  const auto f = lower(w, i);
  if (!f) return std::nullopt;
  return TensorPair{refill(p.left, *f, p.right.size()), refill(p.right, *f, 0)};
}

}  // namespace

TEST_SUITE("rmatrix") {

TEST_CASE("worked example with H = 3") {
  const auto b = T(5, {{1, 1}, {2, 4}});
  const auto b2 = T(5, {{3, 4}, {4, 5}, {5, 6}});
  const auto image = combinatorial_r(b, b2);
  CHECK(image.pair.left == T(5, {{1, 1}, {2, 4}, {3, 5}}));
  CHECK(image.pair.right == T(5, {{4, 4}, {5, 6}}));
  CHECK(image.energy == 3);
  CHECK(energy(b, b2) == 3);
  CHECK(product_tableau(b, b2) == insert_word(b2, row_word(b)));

  const auto [x, y] = apply_affine_r({b, 0}, {b2, 0});
  CHECK(x == AffineElement{T(5, {{1, 1}, {2, 4}, {3, 5}}), -3});
  CHECK(y == AffineElement{T(5, {{4, 4}, {5, 6}}), 3});
}

TEST_CASE("small energies") {
  CHECK(energy(T(1, {{1}}), T(1, {{2}})) == 1);
  CHECK(energy(T(1, {{2}}), T(1, {{1}})) == 0);
}

TEST_CASE("highest elements swap with zero energy") {
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= n; ++r)
      for (int s = 1; s <= 3; ++s)
        for (int r2 = 1; r2 <= n; ++r2)
          for (int s2 = 1; s2 <= 3; ++s2) {
            const auto u = highest_element(r, s, n);
            const auto v = highest_element(r2, s2, n);
            const auto image = combinatorial_r(u, v);
            CHECK(image.energy == 0);
            CHECK(image.pair == TensorPair{v, u});
            const auto [x, y] = apply_affine_r({u, 5}, {v, 7});
            CHECK(x == AffineElement{v, 7});
            CHECK(y == AffineElement{u, 5});
          }
}

TEST_CASE("R on B ⊗ B is the identity") {
  for (int n = 1; n <= 2; ++n)
    for (auto [r, s] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
      if (r > n) continue;
      const auto all = enumerate_kr(r, s, n);
      for (const auto& x : all)
        for (const auto& y : all) CHECK(apply_r({x, y}) == TensorPair{x, y});
    }
}

TEST_CASE("image is the unique pair with the same product tableau") {
  long pairs = 0;
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= std::min(n, 2); ++r)
      for (int s = 1; s <= 2; ++s)
        for (int r2 = 1; r2 <= std::min(n, 2); ++r2)
          for (int s2 = 1; s2 <= 2; ++s2) {
            const auto left = enumerate_kr(r, s, n);
            const auto right = enumerate_kr(r2, s2, n);
            for (const auto& x : left)
              for (const auto& y : right) {
                const auto product = product_tableau(x, y);
                std::vector<TensorPair> candidates;
                for (const auto& y2 : right)
                  for (const auto& x2 : left)
                    if (product_tableau(y2, x2) == product) candidates.push_back({y2, x2});
                REQUIRE(candidates.size() == 1);
                CHECK(apply_r({x, y}) == candidates.front());
                ++pairs;
              }
          }
  CHECK(pairs == 1949);
}

TEST_CASE("R commutes with the lowering operators") {
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= std::min(n, 2); ++r)
      for (int s = 1; s <= 2; ++s)
        for (int r2 = 1; r2 <= std::min(n, 2); ++r2)
          for (int s2 = 1; s2 <= 2; ++s2)
            for (const auto& x : enumerate_kr(r, s, n))
              for (const auto& y : enumerate_kr(r2, s2, n))
                for (Letter i = 1; i <= n; ++i) {
                  const TensorPair p{x, y};
                  const auto fp = lower(p, i);
                  const auto frp = lower(apply_r(p), i);
                  REQUIRE(fp.has_value() == frp.has_value());
                  if (fp) {
                    CHECK(apply_r(*fp) == *frp);
                    CHECK(energy(*fp) == energy(p));
                  }
                }
}

TEST_CASE("involution and conservation") {
  const auto r = verify::run_suite("involution", {2, 4, 2});
  CHECK(r.cases > 0);
  CHECK(r.failed == 0);
}

TEST_CASE("Yang-Baxter with modes") {
  const auto r = verify::run_suite("yang-baxter", {2, 4, 2});
  // n = 1: B^{1,1}, B^{1,2} give 5 elements; n = 2 adds B^{2,1}: 3 + 6 + 3.
  CHECK(r.cases == 5 * 5 * 5 + 12 * 12 * 12);
  CHECK(r.failed == 0);
  // Nonzero modes on every factor.
  const auto x = T(2, {{1, 3}});
  const auto y = T(2, {{1}, {2}});
  const auto z = T(2, {{2}});
  CHECK_FALSE(verify::check_yang_baxter({x, 4}, {y, -1}, {z, 9}));
}

}  // TEST_SUITE
