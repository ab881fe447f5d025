#include "doctest.h"
#include "kss/bijection.hpp"
#include "kss/io.hpp"
#include "kss/verify.hpp"
#include "support.hpp"

using namespace kss;
using kss::testing::T;

TEST_SUITE("io") {

TEST_CASE("tableau and affine element round trip") {
  for (const auto& t : enumerate_kr(2, 2, 3)) CHECK(io::tableau_from_json(io::to_json(t)) == t);
  const AffineElement x{T(3, {{1, 2}, {3, 4}}), -7};
  CHECK(io::affine_from_json(io::to_json(x)) == x);
  CHECK(io::affine_from_json(io::parse(R"({"n":3,"rows":[[1]]})")).mode == 0);
  CHECK(io::to_json(T(5, {{1, 1}, {2, 4}})).dump() == R"({"n":5,"rows":[[1,1],[2,4]]})");
}

TEST_CASE("path, configuration and LED round trip") {
  for (const auto& p : verify::two_factor_family({3, 4, 2})) {
    CHECK(io::path_from_json(io::to_json(p)) == p);
    const auto rc = phi(p);
    const auto back = io::rc_from_json(io::parse(io::to_json(rc).dump()));
    CHECK(back == rc);
    CHECK(back.quantum_space() == rc.quantum_space());
    const auto led = local_energy_distribution(p);
    CHECK(io::led_from_json(io::to_json(led)) == led);
  }
  const Path empty(2);
  CHECK(io::path_from_json(io::to_json(empty)) == empty);
}

TEST_CASE("configuration without an explicit quantum order") {
  const auto rc = io::rc_from_json(io::parse(
      R"({"n":2,"nu":[[2],[1]],"mu":[{"rows":[[1,0]]},{"rows":[]}]})"));
  REQUIRE(rc.quantum_space().size() == 2);
  CHECK(rc.quantum_space()[0] == QuantumRow{0, 2, 0});
  CHECK(rc.quantum_space()[1] == QuantumRow{1, 1, 1});
}

TEST_CASE("the documented configuration JSON reads as phi of its path") {
  const auto rc = io::rc_from_json(io::parse(
      R"({"n":4, "nu":[[4],[4],[2],[]], "mu":[{"rows":[[3,1]]}, {"rows":[[3,0],[1,0]]}, {"rows":[[2,0],[1,0]]}, {"rows":[[1,0]]}]})"));
  const auto expected = phi(kss::testing::example34_path());
  // Same configuration; only the provenance order of the quantum space differs.
  for (int a = 1; a <= 4; ++a) {
    auto x = rc.mu(a), y = expected.mu(a);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    CHECK(x == y);
  }
}

TEST_CASE("malformed input names its location") {
  SUBCASE("syntax") {
    try {
      io::parse(kss::testing::slurp(kss::testing::data_file("malformed.json")));
      FAIL("expected FormatError");
    } catch (const io::FormatError& e) {
      CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
  }
  SUBCASE("wrong type") {
    try {
      io::path_from_json(kss::testing::load("wrong_type.json"));
      FAIL("expected FormatError");
    } catch (const io::FormatError& e) {
      CHECK(std::string(e.what()).find("/factors/0/0/1") != std::string::npos);
    }
  }
  SUBCASE("missing field") {
    CHECK_THROWS_AS(io::tableau_from_json(io::parse(R"({"n":2})")), io::FormatError);
    CHECK_THROWS_AS(io::rc_from_json(io::parse(R"({"n":1,"nu":[[1]],"mu":[{"rows":[[1]]}]})")),
                    io::FormatError);
  }
}

TEST_CASE("well-formed but invalid content") {
  CHECK_THROWS_AS(io::path_from_json(kss::testing::load("not_semistandard.json")), io::ContentError);
  CHECK_THROWS_AS(io::rc_from_json(io::parse(R"({"n":2,"nu":[[1]],"mu":[{"rows":[]},{"rows":[]}]})")),
                  io::ContentError);
  CHECK_THROWS_AS(io::rc_from_json(io::parse(
                      R"({"n":1,"nu":[[1]],"mu":[{"rows":[]}],"quantum_space":[[0,2]]})")),
                  io::ContentError);
  CHECK_THROWS_AS(io::tableau_from_json(io::parse(R"({"n":0,"rows":[]})")), io::ContentError);
}

TEST_CASE("text renderings") {
  CHECK(io::render(local_energy_distribution(kss::testing::example34_path())) ==
        kss::testing::slurp(std::string(KSS_TEST_GOLDEN) + "/example34_led.txt"));
  CHECK(io::render(phi(kss::testing::example34_path())) ==
        kss::testing::slurp(std::string(KSS_TEST_GOLDEN) + "/example34_rc.txt"));
  CHECK(io::compact(kss::testing::example34_path()) == "1111 (x) 12/23/34 (x) 1124/2235");
  CHECK(io::render(T(3, {{1, 2}, {3, 4}})) == "1 2\n3 4\n");
}

}  // TEST_SUITE
