#include <doctest.h>

#include "property_suite.hpp"
#include "support.hpp"

using namespace nilpot;

namespace {

void check_all(const Analysis& an, const std::string& tag) {
  for (const auto& o : props::all_properties(an)) CHECK_MESSAGE(o.ok, tag << ": " << o.property << ": " << o.detail);
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("fixtures") {
    for (const char* name : testing::kFiniteFixtures) {
      CAPTURE(name);
      check_all(testing::analysis(name), name);
    }
  }

  TEST_CASE("brute-force filtration runs where it should") {
    for (const char* name : {"point", "a2", "a3", "a3_zero", "commuting_square"}) {
      const auto o = props::brute_force_filtration(testing::analysis(name));
      CHECK_MESSAGE(o.ok, name << ": " << o.detail);
      CHECK(o.detail != "skipped");
    }
    CHECK(props::brute_force_filtration(testing::analysis("cyclic3")).detail == "skipped");
  }

  TEST_CASE("twenty random monomial presentations") {
    const auto cases = props::random_monomial_cases(20, 20261016);
    REQUIRE(cases.size() == 20);
    std::size_t brute = 0;
    for (const auto& c : cases) {
      CAPTURE(c.text);
      check_all(*c.analysis, "seed " + std::to_string(c.seed));
      brute += c.analysis->category().size() <= 12;
    }
    CHECK(brute >= 5);
  }

  TEST_CASE("random generation is reproducible") {
    const auto a = props::random_monomial_cases(3, 99);
    const auto b = props::random_monomial_cases(3, 99);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].text == b[i].text);
  }
}
