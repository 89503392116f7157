#include <doctest.h>

#include <algorithm>

#include "nilpot/errors.hpp"
#include "nilpot/radical.hpp"
#include "support.hpp"

using namespace nilpot;
using nilpot::testing::analysis;
using nilpot::testing::fixture;
using nilpot::testing::r_of;
using nilpot::testing::vertex;

TEST_SUITE("radical") {
  TEST_CASE("A2: rad^2 vanishes") {
    const auto& an = analysis("a2");
    const auto& f = an.filtration();
    CHECK(f.complete());
    CHECK(f.vanishing_power() == 2);
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = 0; y < 3; ++y) CHECK(f.layer(2, x, y).is_zero());
    // The one composable pair S_2 -> P_1 -> S_1 composes to zero.
    const auto s2 = an.node_of_simple(vertex(an, "2"));
    const auto s1 = an.node_of_simple(vertex(an, "1"));
    CHECK(an.category().hom(s2, s1).dim() == 0);
  }

  TEST_CASE("cyclic algebra: rad^14 is nonzero and rad^15 vanishes") {
    const auto& f = analysis("cyclic3").filtration();
    CHECK(f.vanishing_power() == 15);
    CHECK(f.num_layers() == 14);
    const std::size_t n = f.category().size();
    bool nonzero14 = false;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        nonzero14 = nonzero14 || !f.layer(14, x, y).is_zero();
        CHECK(f.layer(15, x, y).is_zero());
      }
    CHECK(nonzero14);
  }

  TEST_CASE("the filtration decreases") {
    for (const char* name : {"cyclic3", "toupie_one_zero"}) {
      const auto& f = analysis(name).filtration();
      const std::size_t n = f.category().size();
      for (std::size_t k = 2; k <= f.num_layers() + 1; ++k)
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y) REQUIRE(subspace_contains(f.layer(k - 1, x, y), f.layer(k, x, y)));
    }
  }

  TEST_CASE("first layer is the radical of the category") {
    const auto& an = analysis("cyclic3");
    const auto& cat = an.category();
    for (std::size_t x = 0; x < cat.size(); ++x)
      for (std::size_t y = 0; y < cat.size(); ++y) {
        if (x == y) CHECK(cat.radical(x, x).dim() + 1 == cat.hom(x, x).dim());
        else CHECK(cat.radical(x, y).dim() == cat.hom(x, y).dim());
        CHECK(an.filtration().layer(1, x, y) == cat.radical(x, y));
      }
  }

  TEST_CASE("morphism lengths") {
    const auto& an = analysis("cyclic3");
    const auto& f = an.filtration();
    const auto& cat = an.category();
    for (std::size_t x = 0; x < cat.size(); ++x) {
      const Vector id = cat.hom(x, x).coordinates(ModuleMorphism::identity(cat.module(x)));
      CHECK(f.morphism_length(x, x, id) == 0);
    }
    for (const auto& e : an.ar().arrows) {
      const Subspace& l1 = f.layer(1, e.from, e.to);
      const Subspace& l2 = f.layer(2, e.from, e.to);
      for (std::size_t k = 0; k < l1.dim(); ++k)
        if (!l2.contains(l1.basis().row(k))) CHECK(f.morphism_length(e.from, e.to, l1.basis_vector(k)) == 1);
    }
    const auto p = an.node_of_projective(0);
    CHECK_THROWS_AS(f.morphism_length(p, p, Vector(cat.hom(p, p).dim())), std::invalid_argument);
  }

  TEST_CASE("composites of irreducible maps are at least as long as the chain") {
    const auto& an = analysis("toupie_one_zero");
    const auto& f = an.filtration();
    const auto& cat = an.category();
    // Walk along irreducible arrows composing representatives.
    for (std::size_t start = 0; start < cat.size(); start += 5) {
      std::size_t at = start;
      Vector acc = cat.hom(at, at).coordinates(ModuleMorphism::identity(cat.module(at)));
      for (std::size_t k = 1; k <= 4; ++k) {
        const ARArrow* step = nullptr;
        for (const auto& e : an.ar().arrows)
          if (e.from == at) {
            step = &e;
            break;
          }
        if (!step) break;
        const Subspace& l1 = f.layer(1, step->from, step->to);
        Vector rep;
        for (std::size_t j = 0; j < l1.dim() && rep.empty(); ++j)
          if (!f.layer(2, step->from, step->to).contains(l1.basis().row(j))) rep = l1.basis_vector(j);
        REQUIRE(!rep.empty());
        acc = cat.compose(start, at, step->to, rep, acc);
        at = step->to;
        if (std::all_of(acc.begin(), acc.end(), [](const Rational& c) { return c.is_zero(); })) break;
        CHECK(f.morphism_length(start, at, acc) >= k);
      }
    }
  }

  TEST_CASE("r values on the cyclic algebra") {
    const auto& an = analysis("cyclic3");
    CHECK(r_of(an, "1") == 14);
    CHECK(r_of(an, "2") == 14);
    CHECK(r_of(an, "3") == 14);
  }

  TEST_CASE("r values on the four-vertex cycle") {
    const auto& an = analysis("cycle4");
    CHECK(r_of(an, "2") == 12);
    CHECK(r_of(an, "3") == 16);
    CHECK(nilpotency_index(an, Method::Direct).r_A == 17);
  }

  TEST_CASE("A2: r_1 = 1") {
    const auto& an = analysis("a2");
    CHECK(r_of(an, "1") == 1);
    CHECK(nilpotency_index(an, Method::Direct).r_A == 2);
  }

  TEST_CASE("every applicable method gives 15 on the cyclic algebra") {
    const auto& an = analysis("cyclic3");
    for (Method m : {Method::Direct, Method::VertexSet, Method::ZeroRelations, Method::OnePerRelation, Method::Auto})
      CHECK(nilpotency_index(an, m, true).r_A == 15);
    CHECK_THROWS_AS(nilpotency_index(an, Method::Toupie), MethodInapplicable);
  }

  TEST_CASE("ten-vertex algebra") {
    const auto& an = analysis("ten_vertex");
    CHECK(nilpotency_index(an, Method::Direct).r_A == 28);
    const auto v = nilpotency_index(an, Method::VertexSet, true);
    CHECK(v.r_A == 28);
    CHECK(v.vertex_set.size() == 7);
    CHECK_THROWS_AS(nilpotency_index(an, Method::ZeroRelations), MethodInapplicable);
    CHECK_THROWS_AS(nilpotency_index(an, Method::OnePerRelation), MethodInapplicable);
    CHECK_THROWS_AS(nilpotency_index(an, Method::Toupie), MethodInapplicable);
  }

  TEST_CASE("single vertex") {
    const auto& an = analysis("point");
    CHECK(nilpotency_index(an, Method::Direct).r_A == 1);
    CHECK(nilpotency_index(an, Method::Auto).r_A == 1);
  }

  TEST_CASE("empty zero-relation set falls back with a note") {
    const auto& an = analysis("a3");
    const auto rep = nilpotency_index(an, Method::ZeroRelations);
    CHECK(rep.r_A == 3);
    CHECK_FALSE(rep.notes.empty());
  }

  TEST_CASE("auto picks the most specific applicable method") {
    CHECK(nilpotency_index(analysis("toupie_one_zero"), Method::Auto).method == "toupie");
    CHECK(nilpotency_index(analysis("cycle4"), Method::Auto).method == "zero-relations");
    CHECK(nilpotency_index(analysis("cyclic3"), Method::Auto).method == "one-per-relation");
    CHECK(nilpotency_index(analysis("ten_vertex"), Method::Auto).method == "v-set");
  }

  TEST_CASE("method names round trip") {
    for (Method m : {Method::Direct, Method::VertexSet, Method::ZeroRelations, Method::OnePerRelation, Method::Toupie,
                     Method::Auto})
      CHECK(parse_method(method_name(m)) == m);
    CHECK_FALSE(parse_method("fastest").has_value());
  }

  TEST_CASE("report JSON") {
    const auto& an = analysis("cyclic3");
    const auto j = to_json(an.presentation().quiver, nilpotency_index(an, Method::ZeroRelations));
    CHECK(j["method"] == "zero-relations");
    CHECK(j["r_A"] == 15);
    CHECK(j["per_vertex"]["1"] == 14);
    CHECK(j["vertex_set"].size() == 2);
    CHECK(j["layers_computed"] == 15);
  }

  TEST_CASE("report invariants") {
    for (const char* name : testing::kFiniteFixtures) {
      const auto& an = analysis(name);
      const auto rep = nilpotency_index(an, Method::Auto);
      CHECK(rep.r_A >= 1);
      for (const auto& [v, r] : rep.per_vertex) CHECK(rep.r_A >= r + 1);
    }
  }
}
