#include "doctest.h"
#include "kss/bijection.hpp"
#include "kss/verify.hpp"
#include "support.hpp"

using namespace kss;
using kss::testing::T;

TEST_SUITE("verify") {

TEST_CASE("family sizes") {
  const verify::Bounds b{1, 4, 2};
  CHECK(verify::single_box_family(b).size() == 2 + 4 + 8 + 16);
  // B^{1,1} and B^{1,2} at n = 1 have 2 and 3 elements.
  CHECK(verify::two_factor_family(b).size() == 5 * 5);
  // The roundtrip suite counts the shared B^{1,1} ⊗ B^{1,1} paths once.
  CHECK(verify::run_suite("roundtrip", b).cases == 30 + 25 - 4);
  const verify::Shape shapes[] = {{2, 2}, {1, 1}};
  CHECK(verify::all_paths(3, shapes).size() == 20 * 4);
}

TEST_CASE("energy equals Q_l over the families") {
  const auto r = verify::run_suite("energy-q", {3, 4, 2});
  CHECK(r.failed == 0);
  CHECK_FALSE(verify::check_energy_equals_q(kss::testing::example34_path()));
  CHECK_FALSE(verify::check_energy_equals_q(kss::testing::nonhighest_path()));
}

TEST_CASE("lemma suite") {
  const auto r = verify::lemma_report({3, 4, 2});
  CHECK(r.cases > 0);
  CHECK(r.failed == 0);
  for (const auto& f : r.failures) MESSAGE(f.input << ": " << f.detail);
}

TEST_CASE("linearization on vacuum-padded paths") {
  const auto r = verify::run_suite("linearization", {3, 4, 2});
  CHECK(r.failed == 0);
  CHECK_FALSE(verify::check_linearization(verify::with_vacuum(kss::testing::example34_path(), 2, 3), 2, 3));
}

TEST_CASE("linearization needs the carrier to come back") {
  // T_1 on the single box 2 leaves the carrier holding the 2.
  const Path p(1, {T(1, {{2}})});
  const auto ev = time_evolution(p, 1, 1);
  CHECK(ev.path == Path(1, {T(1, {{1}})}));
  CHECK(ev.carrier == T(1, {{2}}));
  const auto before = phi(p);
  REQUIRE(before.mu(1).size() == 1);
  CHECK(before.mu(1)[0] == ConfigRow{1, -1});
  CHECK(phi(ev.path).mu(1).empty());
  CHECK(verify::check_linearization(p, 1, 1).has_value());
}

TEST_CASE("suite lookup") {
  CHECK(verify::suite_names().size() == 8);
  CHECK_THROWS_AS(verify::run_suite("nope", {}), std::invalid_argument);
}

}  // TEST_SUITE
