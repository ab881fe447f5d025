#include <algorithm>

#include "doctest.h"
#include "kss/bijection.hpp"
#include "kss/rigged.hpp"
#include "kss/verify.hpp"
#include "support.hpp"

using namespace kss;

namespace {

RiggedConfiguration example34_rc() { return io::rc_from_json(kss::testing::load("example34_rc.json")); }

}  // namespace

TEST_SUITE("rigged") {

TEST_CASE("vacancy numbers of the three-factor configuration") {
  const auto rc = example34_rc();
  // Hand evaluation of the vacancy formula.
  CHECK(vacancy(rc, 1, 3) == 3 + 0 - 2 * 3 + 4);
  CHECK(vacancy(rc, 1, 3) == 1);
  CHECK(vacancy(rc, 2, 3) == 3 + 3 - 2 * 4 + 3);
  CHECK(vacancy(rc, 2, 1) == 1 + 1 - 2 * 2 + 2);
  CHECK(vacancy(rc, 3, 2) == 2 + 3 - 2 * 3 + 1);
  CHECK(vacancy(rc, 3, 1) == 1 + 2 - 2 * 2 + 1);
  CHECK(vacancy(rc, 4, 1) == 0 + 2 - 2 * 1 + 0);
  CHECK(q_l(rc, 2, 1) == 2);
  CHECK(q_l(rc, 0, 5) == 0);
  CHECK(q_l(rc, 5, 5) == 0);
  CHECK(validate(rc, Validity::restricted).empty());
}

TEST_CASE("singular rows and coriggings") {
  const auto rc = example34_rc();
  CHECK(is_singular(rc, {1, 0}));        // length 3: p = 1, r = 1
  CHECK_FALSE(is_singular(rc, {2, 0}));  // length 3: p = 1, r = 0
  CHECK(corigging(rc, {2, 0}) == 1);
  CHECK(is_singular(rc, {2, 1}));        // length 1: p = 0, r = 0
}

TEST_CASE("validation modes") {
  SUBCASE("empty configuration") {
    const RiggedConfiguration rc(3);
    CHECK(validate(rc, Validity::restricted).empty());
    CHECK(validate(rc, Validity::unrestricted).empty());
  }
  SUBCASE("negative riggings are only unrestricted") {
    const auto rc = io::rc_from_json(kss::testing::load("nonhighest_rc.json"));
    CHECK(validate(rc, Validity::unrestricted).empty());
    CHECK_FALSE(validate(rc, Validity::restricted).empty());
  }
  SUBCASE("rigging above the vacancy number") {
    const auto rc = io::rc_from_json(kss::testing::load("invalid_rc.json"));
    const auto unrestricted = validate(rc, Validity::unrestricted);
    REQUIRE(unrestricted.size() == 1);
    CHECK(validate(rc, Validity::restricted).size() >= 1);
  }
}

TEST_CASE("equality ignores row order inside a configuration") {
  auto a = example34_rc();
  auto b = a;
  std::reverse(b.mu(2).begin(), b.mu(2).end());
  CHECK(a == b);
  b.mu(2).front().rigging += 1;
  CHECK_FALSE(a == b);
}

TEST_CASE("quantum-space order is part of the identity") {
  const std::vector<std::vector<ConfigRow>> empty(2);
  const RiggedConfiguration x(2, {{0, 1, 0}, {1, 1, 1}}, empty);
  const RiggedConfiguration y(2, {{1, 1, 0}, {0, 1, 1}}, empty);
  CHECK_FALSE(x == y);
}

TEST_CASE("vacancy is invariant under permuting equal-length rows") {
  for (const auto& p : verify::two_factor_family({3, 4, 2})) {
    auto rc = phi(p);
    for (int a = 1; a <= rc.rank(); ++a) {
      auto shuffled = rc;
      std::reverse(shuffled.mu(a).begin(), shuffled.mu(a).end());
      for (int l = 1; l <= 4; ++l) CHECK(vacancy(shuffled, a, l) == vacancy(rc, a, l));
    }
  }
}

TEST_CASE("Q_l is concave, non-decreasing and stabilises at |mu|") {
  for (const auto& p : verify::single_box_family({3, 4, 2})) {
    const auto rc = phi(p);
    for (int a = 1; a <= rc.rank(); ++a) {
      int size = 0, longest = 0;
      for (const auto& r : rc.mu(a)) {
        size += r.length;
        longest = std::max(longest, r.length);
      }
      for (int l = 1; l <= longest + 2; ++l) {
        const int d1 = q_l(rc, a, l) - q_l(rc, a, l - 1);
        const int d2 = q_l(rc, a, l + 1) - q_l(rc, a, l);
        CHECK(d1 >= 0);
        CHECK(d2 <= d1);
      }
      CHECK(q_l(rc, a, longest) == size);
    }
  }
}

}  // TEST_SUITE
