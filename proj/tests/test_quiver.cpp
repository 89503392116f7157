#include <doctest.h>

#include <algorithm>

#include "nilpot/errors.hpp"
#include "nilpot/path_algebra.hpp"
#include "nilpot/quiver.hpp"
#include "support.hpp"

using namespace nilpot;
using nilpot::testing::fixture;
using nilpot::testing::vertex;

namespace {

bool contains_run(const std::vector<ArrowId>& p, const std::vector<ArrowId>& r) {
  return std::search(p.begin(), p.end(), r.begin(), r.end()) != p.end();
}

// Longest path avoiding every zero-relation as a consecutive run, by plain
// enumeration of arrow sequences.
std::size_t longest_monomial_path(const AlgebraPresentation& pres, std::size_t cap) {
  const Quiver& q = pres.quiver;
  std::vector<std::vector<ArrowId>> zero;
  for (const auto& r : pres.relations) zero.push_back(r.terms.front().path.arrows);
  std::vector<std::vector<ArrowId>> frontier;
  for (ArrowId a = 0; a < q.num_arrows(); ++a) frontier.push_back({a});
  std::size_t best = 0;
  for (std::size_t len = 1; len <= cap && !frontier.empty(); ++len) {
    std::vector<std::vector<ArrowId>> next;
    for (const auto& p : frontier) {
      if (std::any_of(zero.begin(), zero.end(), [&](const auto& z) { return contains_run(p, z); })) continue;
      best = len;
      for (ArrowId a : q.arrows_from(q.arrow(p.back()).target)) {
        auto e = p;
        e.push_back(a);
        next.push_back(std::move(e));
      }
    }
    frontier = std::move(next);
  }
  return best;
}

}  // namespace

TEST_SUITE("quiver") {
  TEST_CASE("cyclic fixture parses to one zero-relation of length three") {
    const auto p = fixture("cyclic3");
    CHECK(p.quiver.num_vertices() == 3);
    CHECK(p.quiver.num_arrows() == 3);
    REQUIRE(p.relations.size() == 1);
    CHECK(p.relations[0].is_zero_relation());
    CHECK(p.relations[0].terms[0].path.length() == 3);
    CHECK(to_traversal(p.quiver, p.relations[0].terms[0].path) == "alpha*beta*alpha");
    CHECK(to_right_to_left(p.quiver, p.relations[0].terms[0].path) == "alpha beta alpha");
  }

  TEST_CASE("vertices alone give a semisimple presentation") {
    const auto p = parse_presentation("vertex x y z\n");
    CHECK(p.quiver.num_vertices() == 3);
    CHECK(p.quiver.num_arrows() == 0);
    CHECK(p.relations.empty());
    CHECK(validate_admissible(p).dimension == 3);
  }

  TEST_CASE("ten-vertex fixture has one commutativity relation and two zero-relations") {
    const auto p = fixture("ten_vertex");
    CHECK(p.quiver.num_vertices() == 10);
    REQUIRE(p.relations.size() == 3);
    CHECK(p.relations[0].terms.size() == 2);
    CHECK(p.relations[1].is_zero_relation());
    CHECK(p.relations[2].is_zero_relation());
  }

  TEST_CASE("coefficients and comments") {
    const auto p = parse_presentation(
        "# square\nvertex 1 2 3 4\narrow a 1 2\narrow b 2 4\narrow c 1 3\narrow d 3 4\nrelation a*b - 3/2*c*d  # scaled\n");
    REQUIRE(p.relations.size() == 1);
    const auto& t = p.relations[0].terms;
    REQUIRE(t.size() == 2);
    CHECK(std::any_of(t.begin(), t.end(), [](const Term& x) { return x.coefficient == Rational(-3, 2); }));
  }

  TEST_CASE("format and parse round trip") {
    for (const char* name : {"cyclic3", "ten_vertex", "toupie_one_zero"}) {
      const auto p = fixture(name);
      const auto again = parse_presentation(format_presentation(p));
      CHECK(format_presentation(again) == format_presentation(p));
      CHECK(again.relations.size() == p.relations.size());
    }
  }

  TEST_CASE("parse errors carry a position") {
    try {
      parse_presentation("vertex 1 2\narrow a 1 3\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 11);
    }
    CHECK_THROWS_AS(parse_presentation("vertex 1\nvertex 1\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("vertex 1 2\narrow a 1 2\narrow a 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("vertex 1 2 3\narrow a 1 2\narrow b 1 3\nrelation a - b\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("vertex 1 2\narrow a 1 2\nrelation a - a\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("edge 1 2\n"), ParseError);
  }

  TEST_CASE("missing file is an I/O failure") {
    CHECK_THROWS_AS(load_presentation("/nonexistent/file.quiver"), std::ios_base::failure);
  }

  TEST_CASE("cyclic algebra is admissible with longest path three") {
    const auto p = fixture("cyclic3");
    const auto rep = validate_admissible(p);
    CHECK(rep.longest_path == longest_monomial_path(p, 10));
    CHECK(rep.longest_path == 3);
    CHECK(rep.nilpotency_degree == 4);
  }

  TEST_CASE("longest path matches enumeration on monomial fixtures") {
    for (const char* name : {"a2", "a3", "a3_zero", "cycle4"}) {
      const auto p = fixture(name);
      CHECK(validate_admissible(p).longest_path == longest_monomial_path(p, 30));
    }
  }

  TEST_CASE("single-arrow relation is not admissible") {
    CHECK_THROWS_AS(validate_admissible(fixture("short_relation")), NotAdmissible);
  }

  TEST_CASE("unbounded loop is not admissible") {
    const auto p = parse_presentation("vertex 1\narrow x 1 1\n");
    CHECK_THROWS_AS(validate_admissible(p), NotAdmissible);
    CHECK_THROWS_AS(validate_admissible(p, 8), NotAdmissible);
  }

  TEST_CASE("endomorphism paths at vertex 1 of the cyclic algebra") {
    const auto p = fixture("cyclic3");
    const auto b = path_basis(p, vertex(p, "1"), vertex(p, "1"));
    REQUIRE(b.size() == 2);
    CHECK(b[0].is_trivial());
    CHECK(to_traversal(p.quiver, b[1]) == "alpha*beta");
  }

  TEST_CASE("no path gives an empty basis") {
    const auto p = fixture("a3");
    CHECK(path_basis(p, vertex(p, "3"), vertex(p, "1")).empty());
  }

  TEST_CASE("commutativity identifies the two paths from 1 to 3") {
    const auto p = fixture("ten_vertex");
    const auto v1 = vertex(p, "1");
    CHECK(path_basis(p, v1, vertex(p, "4")).size() == 1);
    CHECK(path_basis(p, v1, vertex(p, "3")).size() == 1);
    // Without the relation there would be two.
    auto free = p;
    free.relations.erase(free.relations.begin());
    CHECK(path_basis(free, v1, vertex(p, "3")).size() == 2);
  }

  TEST_CASE("normal form of the longer commuting path") {
    const auto p = fixture("ten_vertex");
    const PathAlgebra alg(p);
    const auto& q = p.quiver;
    const Path longer{vertex(p, "1"), {*q.find_arrow("b1"), *q.find_arrow("b2"), *q.find_arrow("b3")}};
    const Path shorter{vertex(p, "1"), {*q.find_arrow("a1"), *q.find_arrow("a2")}};
    CHECK(alg.normal_form(longer) == alg.normal_form(shorter));
  }

  TEST_CASE("sinks and sources") {
    const auto p = fixture("ten_vertex");
    const auto s = sinks_and_sources(p.quiver);
    CHECK(s.sinks == std::set<VertexId>{vertex(p, "7"), vertex(p, "10")});
    CHECK(s.sources == std::set<VertexId>{vertex(p, "1")});
    CHECK(s.inner.size() == 7);

    const auto point = sinks_and_sources(fixture("point").quiver);
    CHECK(point.sinks.size() == 1);
    CHECK(point.sources.size() == 1);
    CHECK(point.inner.empty());

    const auto c = fixture("cyclic3");
    CHECK(sinks_and_sources(c.quiver).inner == std::set<VertexId>{vertex(c, "1"), vertex(c, "2")});
  }

  TEST_CASE("vertices inside zero-relations") {
    const auto c = fixture("cyclic3");
    CHECK(zero_relation_vertices(c) == std::set<VertexId>{vertex(c, "1"), vertex(c, "2")});
    const auto t = fixture("ten_vertex");
    CHECK(zero_relation_vertices(t) == std::set<VertexId>{vertex(t, "6"), vertex(t, "9")});
    CHECK(zero_relation_vertices(fixture("commuting_square")).empty());
  }

  TEST_CASE("classification") {
    const auto t = classify(fixture("toupie_one_zero"));
    CHECK_FALSE(t.is_monomial);
    REQUIRE(t.toupie.has_value());
    REQUIRE(t.toupie->pattern.has_value());
    CHECK(t.toupie->branches.size() == 3);
    CHECK(t.toupie->pattern->n3 == 2);
    CHECK(t.toupie->pattern->t == 2);
    CHECK(t.toupie->pattern->j == 1);

    const auto c = classify(fixture("cyclic3"));
    CHECK(c.is_monomial);
    CHECK_FALSE(c.toupie.has_value());

    const auto ten = classify(fixture("ten_vertex"));
    CHECK_FALSE(ten.is_monomial);
    CHECK_FALSE(ten.toupie.has_value());

    // Two zero-relations on one branch: the quiver is a toupie, the relation pattern is not.
    const auto two = classify(fixture("toupie_two_zero"));
    REQUIRE(two.toupie.has_value());
    CHECK_FALSE(two.toupie->pattern.has_value());
  }

  TEST_CASE("opposite presentation reverses arrows") {
    const auto p = fixture("a3");
    const auto op = p.opposite();
    for (ArrowId a = 0; a < p.quiver.num_arrows(); ++a) {
      CHECK(op.quiver.arrow(a).source == p.quiver.arrow(a).target);
      CHECK(op.quiver.arrow(a).target == p.quiver.arrow(a).source);
    }
  }
}
