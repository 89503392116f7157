#include <doctest.h>

#include <algorithm>

#include "nilpot/errors.hpp"
#include "nilpot/rep.hpp"
#include "support.hpp"

using namespace nilpot;
using nilpot::testing::fixture;
using nilpot::testing::vertex;

namespace {

// dim Hom(M, N) from the raw intertwiner system f_t M_a = N_a f_s, one
// unknown per matrix entry.
std::size_t naive_hom_dim(const Quiver& q, const Representation& m, const Representation& n) {
  std::vector<std::size_t> offset(q.num_vertices() + 1, 0);
  for (VertexId v = 0; v < q.num_vertices(); ++v) offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
  const std::size_t unknowns = offset.back();
  auto var = [&](VertexId v, std::size_t r, std::size_t c) { return offset[v] + r * m.dim(v) + c; };
  std::vector<Vector> rows;
  for (ArrowId a = 0; a < q.num_arrows(); ++a) {
    const VertexId s = q.arrow(a).source, t = q.arrow(a).target;
    for (std::size_t i = 0; i < n.dim(t); ++i)
      for (std::size_t j = 0; j < m.dim(s); ++j) {
        Vector row(unknowns);
        for (std::size_t k = 0; k < m.dim(t); ++k) row[var(t, i, k)] += m.map(a)(k, j);
        for (std::size_t k = 0; k < n.dim(s); ++k) row[var(s, k, j)] -= n.map(a)(i, k);
        rows.push_back(std::move(row));
      }
  }
  if (rows.empty()) return unknowns;
  return unknowns - rank(RatMatrix::from_rows(rows, unknowns));
}

// Dimension vector of P_a by listing the paths out of a that avoid the
// zero-relations (monomial presentations only).
std::vector<std::size_t> monomial_projective_dims(const AlgebraPresentation& p, VertexId a) {
  const Quiver& q = p.quiver;
  std::vector<std::size_t> d(q.num_vertices(), 0);
  std::vector<std::vector<ArrowId>> frontier{{}};
  d[a] = 1;
  while (!frontier.empty()) {
    std::vector<std::vector<ArrowId>> next;
    for (const auto& path : frontier) {
      const VertexId end = path.empty() ? a : q.arrow(path.back()).target;
      for (ArrowId x : q.arrows_from(end)) {
        auto e = path;
        e.push_back(x);
        bool dead = false;
        for (const auto& r : p.relations) {
          const auto& z = r.terms.front().path.arrows;
          dead = dead || std::search(e.begin(), e.end(), z.begin(), z.end()) != e.end();
        }
        if (dead) continue;
        ++d[q.arrow(x).target];
        next.push_back(std::move(e));
      }
    }
    frontier = std::move(next);
  }
  return d;
}

ModuleMorphism scaled_identity(const Representation& m, int s) { return Rational(s) * ModuleMorphism::identity(m); }

}  // namespace

TEST_SUITE("rep") {
  TEST_CASE("P_1 of the cyclic algebra") {
    const auto p = fixture("cyclic3");
    const Algebra alg(p);
    const auto v1 = vertex(p, "1");
    const auto p1 = projective(alg, v1);
    CHECK(p1.dims() == monomial_projective_dims(p, v1));
    CHECK(p1.dims() == std::vector<std::size_t>{2, 1, 1});
    CHECK(composition_multiplicity(p1, v1) == 2);
  }

  TEST_CASE("projectives of monomial fixtures match path enumeration") {
    for (const char* name : {"a2", "a3", "a3_zero", "cycle4"}) {
      const auto p = fixture(name);
      const Algebra alg(p);
      for (VertexId v = 0; v < p.quiver.num_vertices(); ++v)
        CHECK(projective(alg, v).dims() == monomial_projective_dims(p, v));
    }
  }

  TEST_CASE("every fixture module satisfies its relations") {
    for (const char* name : testing::kFiniteFixtures) {
      const auto p = fixture(name);
      const Algebra alg(p);
      for (VertexId v = 0; v < p.quiver.num_vertices(); ++v) {
        CHECK_NOTHROW(check_module(p, projective(alg, v)));
        CHECK_NOTHROW(check_module(p, injective(alg, v)));
      }
    }
  }

  TEST_CASE("simples are indicator vectors") {
    const auto p = fixture("ten_vertex");
    for (VertexId v = 0; v < p.quiver.num_vertices(); ++v) {
      const auto s = simple(p.quiver, v);
      for (VertexId w = 0; w < p.quiver.num_vertices(); ++w) CHECK(s.dim(w) == (v == w ? 1u : 0u));
    }
  }

  TEST_CASE("projective at the sink of the toupie is simple") {
    const auto p = fixture("toupie_one_zero");
    const Algebra alg(p);
    const auto v4 = vertex(p, "4");
    CHECK(projective(alg, v4) == simple(p.quiver, v4));
  }

  TEST_CASE("endomorphism rings at the cyclic vertices are two-dimensional") {
    const auto p = fixture("cyclic3");
    const Algebra alg(p);
    const auto p1 = projective(alg, vertex(p, "1"));
    const auto i2 = injective(alg, vertex(p, "2"));
    CHECK(hom_space(alg, p1, p1).dim() == 2);
    CHECK(hom_space(alg, i2, i2).dim() == 2);
    CHECK(naive_hom_dim(p.quiver, p1, p1) == 2);
    CHECK(naive_hom_dim(p.quiver, i2, i2) == 2);
  }

  TEST_CASE("Hom between simples") {
    const auto p = fixture("a3");
    const Algebra alg(p);
    for (VertexId a = 0; a < 3; ++a)
      for (VertexId b = 0; b < 3; ++b)
        CHECK(hom_space(alg, simple(p.quiver, a), simple(p.quiver, b)).dim() == (a == b ? 1u : 0u));
  }

  TEST_CASE("Hom dimensions agree with the raw intertwiner system") {
    for (const char* name : {"a3_zero", "cyclic3", "commuting_square", "toupie_one_zero", "cycle4"}) {
      const auto& an = testing::analysis(name);
      const auto& q = an.presentation().quiver;
      const auto& cat = an.category();
      for (std::size_t x = 0; x < cat.size(); ++x)
        for (std::size_t y = 0; y < cat.size(); ++y)
          REQUIRE_MESSAGE(cat.hom(x, y).dim() == naive_hom_dim(q, cat.module(x), cat.module(y)),
                          name << " " << an.ar().nodes[x].label << " -> " << an.ar().nodes[y].label);
    }
  }

  TEST_CASE("Hom basis elements intertwine exactly") {
    const auto& an = testing::analysis("cyclic3");
    const auto& q = an.presentation().quiver;
    const auto& cat = an.category();
    for (std::size_t x = 0; x < cat.size(); ++x)
      for (std::size_t y = 0; y < cat.size(); ++y)
        for (const auto& f : cat.hom(x, y).basis()) REQUIRE(is_morphism(q, cat.module(x), cat.module(y), f));
  }

  TEST_CASE("Hom coordinates round trip") {
    const auto& an = testing::analysis("toupie_one_zero");
    const auto& cat = an.category();
    for (std::size_t x = 0; x < cat.size(); x += 3)
      for (std::size_t y = 0; y < cat.size(); y += 2) {
        const auto& h = cat.hom(x, y);
        for (std::size_t k = 0; k < h.dim(); ++k) {
          Vector c(h.dim());
          c[k] = 1;
          if (k + 1 < h.dim()) c[k + 1] = Rational(-2, 3);
          CHECK(h.coordinates(h.morphism(c)) == c);
        }
      }
  }

  TEST_CASE("top of P_a and socle of I_a are S_a") {
    for (const char* name : {"cyclic3", "ten_vertex", "toupie_one_zero"}) {
      const auto p = fixture(name);
      const Algebra alg(p);
      for (VertexId a = 0; a < p.quiver.num_vertices(); ++a) {
        CHECK(are_isomorphic(alg, top(p.quiver, projective(alg, a)).module, simple(p.quiver, a)));
        CHECK(are_isomorphic(alg, socle(p.quiver, injective(alg, a)).module, simple(p.quiver, a)));
      }
    }
  }

  TEST_CASE("radical and top split the dimension vector") {
    const auto& an = testing::analysis("cyclic3");
    const auto& q = an.presentation().quiver;
    for (const auto& node : an.ar().nodes) {
      const auto r = radical_submodule(q, node.module);
      const auto t = top(q, node.module);
      for (VertexId v = 0; v < q.num_vertices(); ++v) CHECK(r.module.dim(v) + t.module.dim(v) == node.module.dim(v));
      CHECK(is_monomorphism(r.inclusion));
      CHECK(is_epimorphism(t.projection));
    }
  }

  TEST_CASE("projective covers") {
    const auto p = fixture("cyclic3");
    const Algebra alg(p);
    for (VertexId a = 0; a < 3; ++a) {
      const auto c = projective_cover(PreparedModule(alg, simple(p.quiver, a)));
      CHECK(c.summands == std::vector<VertexId>{a});
      CHECK(are_isomorphic(alg, c.projective, projective(alg, a)));
      const auto pa = projective(alg, a);
      const auto self = projective_cover(PreparedModule(alg, pa));
      CHECK(self.summands == std::vector<VertexId>{a});
      CHECK(is_isomorphism(self.epi));
    }
  }

  TEST_CASE("minimal presentation of S_1 over the cyclic algebra is P_2 -> P_1") {
    const auto p = fixture("cyclic3");
    const Algebra alg(p);
    const auto v1 = vertex(p, "1");
    const auto mp = minimal_presentation(PreparedModule(alg, simple(p.quiver, v1)));
    CHECK(mp.cover.summands == std::vector<VertexId>{v1});
    CHECK(mp.syzygy_summands == std::vector<VertexId>{vertex(p, "2")});
    // rad P_1 has top S_2.
    const auto r = radical_submodule(p.quiver, projective(alg, v1)).module;
    CHECK(are_isomorphic(alg, top(p.quiver, r).module, simple(p.quiver, vertex(p, "2"))));
  }

  TEST_CASE("indecomposability") {
    const auto p = fixture("a3");
    const Algebra alg(p);
    for (VertexId a = 0; a < 3; ++a) CHECK(is_indecomposable(alg, simple(p.quiver, a)));
    CHECK_FALSE(is_indecomposable(alg, direct_sum(simple(p.quiver, 0), simple(p.quiver, 0))));
    CHECK_FALSE(is_indecomposable(alg, direct_sum(simple(p.quiver, 0), projective(alg, 1))));
  }

  TEST_CASE("isomorphism tests") {
    const auto p = fixture("cyclic3");
    const Algebra alg(p);
    const auto p1 = projective(alg, 0);
    CHECK(are_isomorphic(alg, p1, p1));
    CHECK_FALSE(are_isomorphic(alg, simple(p.quiver, 0), simple(p.quiver, 1)));
    // Conjugating every map by an invertible base change gives an isomorphic module.
    std::vector<RatMatrix> maps;
    const RatMatrix g(2, 2, {Rational(1), Rational(2), Rational(0), Rational(1)});
    const RatMatrix gi = *inverse(g);
    const auto& q = p.quiver;
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
      RatMatrix m = p1.map(a);
      if (q.arrow(a).target == 0) m = g * m;
      if (q.arrow(a).source == 0) m = m * gi;
      maps.push_back(m);
    }
    const Representation twisted(p1.dims(), maps);
    const auto iso = find_isomorphism(alg, p1, twisted);
    REQUIRE(iso.has_value());
    CHECK(is_isomorphism(*iso));
    CHECK(is_morphism(q, p1, twisted, *iso));
  }

  TEST_CASE("decomposition recovers the summands") {
    const auto& an = testing::analysis("cyclic3");
    const Algebra& alg = an.algebra();
    const auto& nodes = an.ar().nodes;
    const std::vector<std::size_t> pick{3, 11, 17};
    Representation sum = nodes[pick[0]].module;
    for (std::size_t k = 1; k < pick.size(); ++k) sum = direct_sum(sum, nodes[pick[k]].module);
    const auto parts = decompose(alg, sum);
    REQUIRE(parts.size() == pick.size());
    std::vector<bool> used(pick.size(), false);
    for (const auto& part : parts) {
      CHECK(is_indecomposable(alg, part));
      bool matched = false;
      for (std::size_t k = 0; k < pick.size() && !matched; ++k)
        if (!used[k] && are_isomorphic(alg, part, nodes[pick[k]].module)) used[k] = matched = true;
      CHECK(matched);
    }
    CHECK(decompose(alg, nodes[5].module).size() == 1);
  }

  TEST_CASE("morphism arithmetic") {
    const auto p = fixture("a3");
    const Algebra alg(p);
    const auto p1 = projective(alg, 0);
    const auto two = scaled_identity(p1, 2);
    CHECK(compose(two, two) == scaled_identity(p1, 4));
    CHECK((two - two).is_zero());
    CHECK(rank_vector(two) == p1.dims());
  }

  TEST_CASE("JSON round trip") {
    const auto& an = testing::analysis("toupie_one_zero");
    const auto& q = an.presentation().quiver;
    for (const auto& node : an.ar().nodes) {
      const auto j = to_json(q, node.module);
      CHECK(representation_from_json(q, j) == node.module);
    }
    const auto j = to_json(q, an.ar().nodes[0].module);
    CHECK(j.contains("dimension_vector"));
    CHECK(j.contains("arrows"));
  }

  TEST_CASE("duality swaps projectives and injectives") {
    const auto p = fixture("cyclic3");
    const Algebra alg(p);
    const Algebra op = alg.opposite();
    for (VertexId a = 0; a < 3; ++a) CHECK(are_isomorphic(op, dual(injective(alg, a)), projective(op, a)));
  }
}
