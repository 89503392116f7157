#include "nilpot/theorems.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nilpot/errors.hpp"

namespace nilpot {

namespace {

const std::string& vname(const Analysis& an, VertexId v) { return an.presentation().quiver.vertex_name(v); }

bool has_arrow(const Quiver& q, VertexId a, VertexId b) {
  for (ArrowId x = 0; x < q.num_arrows(); ++x)
    if (q.arrow(x).source == a && q.arrow(x).target == b) return true;
  return false;
}

std::vector<std::pair<VertexId, VertexId>> arrow_pairs(const Quiver& q) {
  std::set<std::pair<VertexId, VertexId>> s;
  for (ArrowId x = 0; x < q.num_arrows(); ++x)
    if (q.arrow(x).source != q.arrow(x).target) s.insert({q.arrow(x).source, q.arrow(x).target});
  return {s.begin(), s.end()};
}

/// A basis vector of rad(x, y) outside rad^2(x, y).
std::optional<Vector> irreducible_representative(const Analysis& an, std::size_t x, std::size_t y) {
  const auto& f = an.filtration();
  const Subspace& l1 = f.layer(1, x, y);
  const Subspace& l2 = f.layer(2, x, y);
  for (std::size_t i = 0; i < l1.dim(); ++i)
    if (!l2.contains(l1.basis().row(i))) return l1.basis_vector(i);
  return std::nullopt;
}

Comparison combine(bool b_le_a, bool a_le_b) {
  if (b_le_a && a_le_b) return Comparison::Equal;
  if (b_le_a) return Comparison::BAtMostA;
  if (a_le_b) return Comparison::AAtMostB;
  return Comparison::None;
}

void verify(const Analysis& an, ComparisonFinding& f) {
  f.r_a = an.r(f.a);
  f.r_b = an.r(f.b);
  const bool ok = (f.conclusion != Comparison::BAtMostA && f.conclusion != Comparison::Equal) || f.r_b <= f.r_a;
  const bool ok2 = (f.conclusion != Comparison::AAtMostB && f.conclusion != Comparison::Equal) || f.r_a <= f.r_b;
  if (!ok || !ok2)
    throw Inconsistency(f.rule + " along " + vname(an, f.a) + " -> " + vname(an, f.b) + " concludes " +
                        comparison_string(f.conclusion, vname(an, f.a), vname(an, f.b)) + " but r_" +
                        vname(an, f.a) + " = " + std::to_string(f.r_a) + ", r_" + vname(an, f.b) + " = " +
                        std::to_string(f.r_b));
}

ComparisonFinding profile(const Analysis& an, const std::string& rule, VertexId a, VertexId b) {
  if (!has_arrow(an.presentation().quiver, a, b))
    throw std::invalid_argument("no arrow " + vname(an, a) + " -> " + vname(an, b));
  ComparisonFinding f;
  f.rule = rule;
  f.a = a;
  f.b = b;
  const auto& cat = an.category();
  f.irr_projective = an.filtration().irr_dim(an.node_of_projective(b), an.node_of_projective(a));
  f.irr_injective = an.filtration().irr_dim(an.node_of_injective(b), an.node_of_injective(a));
  f.end_projective_b = cat.hom(an.node_of_projective(b), an.node_of_projective(b)).dim();
  f.end_injective_a = cat.hom(an.node_of_injective(a), an.node_of_injective(a)).dim();
  return f;
}

void require_monomial(const Analysis& an, const std::string& what) {
  if (!classify(an.presentation()).is_monomial)
    throw MethodInapplicable(what + " needs a monomial algebra (every relation a single path)");
}

}  // namespace

std::string comparison_string(Comparison c, const std::string& a, const std::string& b) {
  switch (c) {
    case Comparison::None: return "none";
    case Comparison::BAtMostA: return "r_" + b + " <= r_" + a;
    case Comparison::AAtMostB: return "r_" + a + " <= r_" + b;
    case Comparison::Equal: return "r_" + a + " = r_" + b;
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Comparisons along arrows

ComparisonFinding check_corollary(const Analysis& an, VertexId a, VertexId b) {
  ComparisonFinding f = profile(an, "corollary", a, b);
  f.conclusion = combine(f.irr_projective >= 1 && f.end_projective_b == 1, f.irr_injective >= 1 && f.end_injective_a == 1);
  verify(an, f);
  return f;
}

std::vector<ComparisonFinding> check_corollary(const Analysis& an) {
  std::vector<ComparisonFinding> out;
  for (const auto& [a, b] : arrow_pairs(an.presentation().quiver)) out.push_back(check_corollary(an, a, b));
  return out;
}

bool factors_through_representative(const Analysis& an, std::size_t x, std::size_t y, const Vector& f1,
                                    bool precompose) {
  const auto& cat = an.category();
  const std::size_t target = cat.hom(x, y).dim();
  std::vector<Vector> span;
  if (precompose) {
    // g o f_1 for g in End(y)
    const RatMatrix m = cat.precompose_matrix(x, y, y, f1);
    for (std::size_t c = 0; c < m.cols(); ++c) span.push_back(m.column(c));
  } else {
    // f_1 o g for g in End(x)
    const std::size_t e = cat.hom(x, x).dim();
    for (std::size_t i = 0; i < e; ++i) {
      Vector g(e);
      g[i] = 1;
      span.push_back(cat.compose(x, x, y, f1, g));
    }
  }
  return Subspace::span(span, target).dim() == target;
}

ComparisonFinding check_factorization(const Analysis& an, VertexId a, VertexId b) {
  ComparisonFinding f = profile(an, "factorization", a, b);
  bool p_side = false, i_side = false;
  const std::size_t pb = an.node_of_projective(b), pa = an.node_of_projective(a);
  if (auto f1 = irreducible_representative(an, pb, pa)) {
    f.factors_projective = factors_through_representative(an, pb, pa, *f1, true);
    p_side = *f.factors_projective;
  }
  const std::size_t ib = an.node_of_injective(b), ia = an.node_of_injective(a);
  if (auto g1 = irreducible_representative(an, ib, ia)) {
    f.factors_injective = factors_through_representative(an, ib, ia, *g1, false);
    i_side = *f.factors_injective;
  }
  f.conclusion = combine(p_side, i_side);
  verify(an, f);
  return f;
}

std::vector<ComparisonFinding> check_factorization(const Analysis& an) {
  std::vector<ComparisonFinding> out;
  for (const auto& [a, b] : arrow_pairs(an.presentation().quiver)) out.push_back(check_factorization(an, a, b));
  return out;
}

std::vector<ComparisonFinding> check_zero_relation_membership(const Analysis& an) {
  require_monomial(an, "the zero-relation comparison");
  const auto r0 = zero_relation_vertices(an.presentation());
  std::vector<ComparisonFinding> out;
  for (const auto& [a, b] : arrow_pairs(an.presentation().quiver)) {
    ComparisonFinding f = profile(an, "zero-relations", a, b);
    const bool ain = r0.count(a) > 0, bin = r0.count(b) > 0;
    f.a_in_zero_relation = ain;
    f.b_in_zero_relation = bin;
    if (ain && !bin) f.conclusion = Comparison::BAtMostA;
    else if (!ain && bin) f.conclusion = Comparison::AAtMostB;
    else if (!ain && !bin) f.conclusion = Comparison::Equal;
    verify(an, f);
    out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Vertex-set reductions

namespace {

VertexSetCheck certify(const Analysis& an, NilpotencyReport rep) {
  VertexSetCheck c;
  c.direct_r_A = an.filtration().vanishing_power();
  if (rep.r_A != c.direct_r_A)
    throw Inconsistency(rep.method + " gives r_A = " + std::to_string(rep.r_A) + " but the direct value is " +
                        std::to_string(c.direct_r_A));
  c.certificates.push_back("max over the vertex set equals the direct value " + std::to_string(c.direct_r_A));
  c.report = std::move(rep);
  return c;
}

std::vector<std::vector<VertexId>> zero_relation_interiors(const AlgebraPresentation& pres) {
  std::vector<std::vector<VertexId>> out;
  for (const auto& r : pres.relations) {
    if (!r.is_zero_relation()) continue;
    std::vector<VertexId> vs;
    const auto& arrows = r.terms.front().path.arrows;
    for (std::size_t i = 1; i < arrows.size(); ++i) vs.push_back(pres.quiver.arrow(arrows[i]).source);
    out.push_back(std::move(vs));
  }
  return out;
}

std::string joined(const Analysis& an, const std::vector<VertexId>& vs) {
  std::string s;
  for (VertexId v : vs) s += (s.empty() ? "" : ",") + vname(an, v);
  return s;
}

void require_equal(const Analysis& an, const std::vector<VertexId>& vs, const std::string& what,
                   std::vector<std::string>& certs) {
  if (vs.empty()) return;
  for (VertexId v : vs)
    if (an.r(v) != an.r(vs.front()))
      throw Inconsistency(what + ": r_" + vname(an, vs.front()) + " = " + std::to_string(an.r(vs.front())) +
                          " but r_" + vname(an, v) + " = " + std::to_string(an.r(v)));
  certs.push_back(what + ": r = " + std::to_string(an.r(vs.front())) + " on {" + joined(an, vs) + "}");
}

}  // namespace

VertexSetCheck check_zero_relation_vertices(const Analysis& an) {
  return certify(an, nilpotency_index(an, Method::ZeroRelations));
}

VertexSetCheck check_one_vertex_per_relation(const Analysis& an) {
  VertexSetCheck c = certify(an, nilpotency_index(an, Method::OnePerRelation));
  for (const auto& vs : zero_relation_interiors(an.presentation()))
    require_equal(an, vs, "one zero-relation", c.certificates);
  return c;
}

VertexSetCheck check_toupie(const Analysis& an) {
  VertexSetCheck c = certify(an, nilpotency_index(an, Method::Toupie));
  const auto shape = *classify(an.presentation()).toupie;
  const auto& pat = *shape.pattern;
  const auto& zs = shape.branches[pat.zero_branch].interior;
  const auto r0 = zero_relation_vertices(an.presentation());
  std::vector<VertexId> in, out;
  for (VertexId z : zs) (r0.count(z) ? in : out).push_back(z);
  require_equal(an, shape.branches[pat.commuting_branches[0]].interior, "first commuting branch", c.certificates);
  require_equal(an, shape.branches[pat.commuting_branches[1]].interior, "second commuting branch", c.certificates);
  require_equal(an, in, "zero-relation vertices", c.certificates);
  require_equal(an, out, "zero-relation branch outside the relation", c.certificates);
  for (VertexId z : out)
    for (VertexId h : in)
      if (an.r(z) > an.r(h))
        throw Inconsistency("r_" + vname(an, z) + " exceeds r_" + vname(an, h) + " on the zero-relation branch");
  if (!out.empty() && !in.empty())
    c.certificates.push_back("branch vertices outside the relation have r <= " + std::to_string(an.r(in.front())));
  return c;
}

std::vector<LocalEndomorphisms> check_local_endomorphisms(const Analysis& an) {
  require_monomial(an, "the local endomorphism check");
  const auto r0 = zero_relation_vertices(an.presentation());
  std::vector<LocalEndomorphisms> out;
  const auto& cat = an.category();
  for (VertexId v = 0; v < an.presentation().quiver.num_vertices(); ++v) {
    LocalEndomorphisms e;
    e.vertex = v;
    e.in_zero_relation = r0.count(v) > 0;
    e.end_projective = cat.hom(an.node_of_projective(v), an.node_of_projective(v)).dim();
    e.end_injective = cat.hom(an.node_of_injective(v), an.node_of_injective(v)).dim();
    if (!e.in_zero_relation && (e.end_projective != 1 || e.end_injective != 1))
      throw Inconsistency("vertex " + vname(an, v) + " lies in no zero-relation but dim End(P) = " +
                          std::to_string(e.end_projective) + ", dim End(I) = " + std::to_string(e.end_injective));
    out.push_back(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Maps through simples

std::vector<SimpleFactorization> check_simple_factorization(const Analysis& an) {
  const auto& cat = an.category();
  const std::size_t n = an.presentation().quiver.num_vertices();
  std::vector<SimpleFactorization> out;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      const std::size_t pa = an.node_of_projective(a), ib = an.node_of_injective(b);
      const std::size_t ia = an.node_of_injective(a), pb = an.node_of_projective(b);
      const HomSpace& h = cat.hom(pa, ib);
      for (std::size_t k = 0; k < h.dim(); ++k) {
        Vector f(h.dim());
        f[k] = 1;
        // A map P_a -> I_b through S_a or S_b needs a = b and lies on the composite.
        const bool through_sa = a == b && Subspace::span({an.canonical_composite(a)}, h.dim()).contains(f);
        if (!through_sa) {
          // phi in rad(I_b, I_a) with phi o f a nonzero multiple of the composite at a
          const RatMatrix m = cat.precompose_matrix(pa, ib, ia, f);
          const Subspace& rad = cat.radical(ib, ia);
          std::vector<Vector> imgs;
          for (std::size_t i = 0; i < rad.dim(); ++i) imgs.push_back(m * rad.basis().row(i));
          const Vector target = an.canonical_composite(a);
          std::optional<Vector> sol;
          if (!imgs.empty()) sol = solve(RatMatrix::from_columns(imgs, target.size()), target);
          if (!sol)
            throw Inconsistency("no non-isomorphism I_" + vname(an, b) + " -> I_" + vname(an, a) +
                                " carries a map P_" + vname(an, a) + " -> I_" + vname(an, b) + " onto S_" + vname(an, a));
          Vector phi(cat.hom(ib, ia).dim());
          for (std::size_t i = 0; i < rad.dim(); ++i)
            for (std::size_t c = 0; c < phi.size(); ++c) phi[c] += (*sol)[i] * rad.basis()(i, c);
          out.push_back({a, b, "injective", k, std::move(phi)});
        }
        const bool through_sb = through_sa;
        if (!through_sb) {
          // phi in rad(P_b, P_a) with f o phi a nonzero multiple of the composite at b
          const Subspace& rad = cat.radical(pb, pa);
          std::vector<Vector> imgs;
          for (std::size_t i = 0; i < rad.dim(); ++i) imgs.push_back(cat.compose(pb, pa, ib, f, rad.basis_vector(i)));
          const Vector target = an.canonical_composite(b);
          std::optional<Vector> sol;
          if (!imgs.empty()) sol = solve(RatMatrix::from_columns(imgs, target.size()), target);
          if (!sol)
            throw Inconsistency("no non-isomorphism P_" + vname(an, b) + " -> P_" + vname(an, a) +
                                " carries a map P_" + vname(an, a) + " -> I_" + vname(an, b) + " onto S_" + vname(an, b));
          Vector phi(cat.hom(pb, pa).dim());
          for (std::size_t i = 0; i < rad.dim(); ++i)
            for (std::size_t c = 0; c < phi.size(); ++c) phi[c] += (*sol)[i] * rad.basis()(i, c);
          out.push_back({a, b, "projective", k, std::move(phi)});
        }
      }
    }
  }
  return out;
}

std::vector<CompositeLength> check_composite_lengths(const Analysis& an) {
  const auto& filt = an.filtration();
  std::vector<CompositeLength> out;
  for (VertexId a = 0; a < an.presentation().quiver.num_vertices(); ++a) {
    CompositeLength c;
    c.vertex = a;
    c.r = an.r(a);
    const std::size_t p = an.node_of_projective(a), s = an.node_of_simple(a), i = an.node_of_injective(a);
    c.epi_length = filt.morphism_length(p, s, an.canonical_epi(a));
    c.mono_length = filt.morphism_length(s, i, an.canonical_mono(a));
    if (c.epi_length + c.mono_length != c.r)
      throw Inconsistency("at " + vname(an, a) + " the composite has length " + std::to_string(c.r) + " but its factors " +
                          std::to_string(c.epi_length) + " + " + std::to_string(c.mono_length));
    if (c.r > 0) {
      const Subspace& top = filt.layer(c.r, p, i);
      c.top_layer_dim = top.dim();
      if (top.dim() != 1)
        throw Inconsistency("rad^" + std::to_string(c.r) + "(P_" + vname(an, a) + ", I_" + vname(an, a) +
                            ") has dimension " + std::to_string(top.dim()) + "; some map avoiding S_" + vname(an, a) +
                            " is as long as the composite");
    } else {
      c.top_layer_dim = 1;
    }
    out.push_back(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Toupie witness

namespace {

/// Quotient by the socle part at v: the vectors killed by every arrow out of v.
QuotientRepresentation drop_socle_at(const Quiver& q, const Representation& m, VertexId v) {
  std::vector<Subspace> parts;
  for (VertexId u = 0; u < q.num_vertices(); ++u) parts.push_back(Subspace::zero(m.dim(u)));
  Subspace s = Subspace::full(m.dim(v));
  for (ArrowId x = 0; x < q.num_arrows(); ++x)
    if (q.arrow(x).source == v) s = subspace_intersect(s, kernel(m.map(x)));
  if (s.dim() != 1) throw Inconsistency("socle at " + q.vertex_name(v) + " is not one-dimensional");
  parts[v] = s;
  return quotient(q, m, parts);
}

QuotientRepresentation drop_support(const Quiver& q, const Representation& m, const std::set<VertexId>& support) {
  std::vector<Subspace> parts;
  for (VertexId u = 0; u < q.num_vertices(); ++u)
    parts.push_back(support.count(u) ? Subspace::full(m.dim(u)) : Subspace::zero(m.dim(u)));
  try {
    subrepresentation(q, m, parts);
  } catch (const std::invalid_argument&) {
    throw Inconsistency("the commuting branches do not form a submodule");
  }
  return quotient(q, m, parts);
}

struct Chain {
  std::vector<Representation> modules;
  std::vector<ModuleMorphism> maps;
};

/// M -> ... -> S_{z_i}: socles at z_i .. z_1, then the commuting branches,
/// then socles at z_n .. z_{i+1}. zs lists z_1 .. z_n from the source.
Chain epi_chain(const Quiver& q, const Representation& m, const std::vector<VertexId>& zs, std::size_t i) {
  Chain c;
  c.modules.push_back(m);
  auto step = [&](QuotientRepresentation qr) {
    c.maps.push_back(std::move(qr.projection));
    c.modules.push_back(std::move(qr.module));
  };
  for (std::size_t k = i; k >= 1; --k) step(drop_socle_at(q, c.modules.back(), zs[k - 1]));
  std::set<VertexId> rest;
  for (VertexId v = 0; v < q.num_vertices(); ++v)
    if (std::find(zs.begin(), zs.end(), v) == zs.end()) rest.insert(v);
  step(drop_support(q, c.modules.back(), rest));
  for (std::size_t k = zs.size(); k > i; --k) step(drop_socle_at(q, c.modules.back(), zs[k - 1]));
  return c;
}

ModuleMorphism compose_all(const std::vector<ModuleMorphism>& maps) {
  ModuleMorphism acc = maps.front();
  for (std::size_t k = 1; k < maps.size(); ++k) acc = compose(maps[k], acc);
  return acc;
}

ModuleMorphism inverse_morphism(const ModuleMorphism& f) {
  ModuleMorphism g;
  for (const auto& m : f.maps) g.maps.push_back(m.rows() == 0 ? m : *inverse(m));
  return g;
}

template <typename Pred>
std::optional<ModuleMorphism> search(const HomSpace& h, Pred&& ok) {
  for (const auto& f : h.basis())
    if (ok(f)) return f;
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = i + 1; j < h.dim(); ++j)
      for (int c : {1, -1, 2})
        if (auto f = h[i] + Rational(c) * h[j]; ok(f)) return f;
  return std::nullopt;
}

}  // namespace

ToupieWitness build_toupie_witness(const Analysis& an, std::size_t i) {
  const auto& pres = an.presentation();
  const Quiver& q = pres.quiver;
  const auto cls = classify(pres);
  if (!cls.toupie || !cls.toupie->pattern)
    throw MethodInapplicable("the witness needs a three-branch toupie with one zero-relation");
  const auto& shape = *cls.toupie;
  const auto& pat = *shape.pattern;
  const auto& branch = shape.branches[pat.zero_branch];
  const std::vector<VertexId>& zs = branch.interior;
  const std::size_t n3 = zs.size();
  if (i < pat.j || i + 1 > pat.j + pat.t)
    throw MethodInapplicable("index " + std::to_string(i) + " is outside the zero-relation (" + std::to_string(pat.j) +
                             ".." + std::to_string(pat.j + pat.t - 1) + ")");

  ToupieWitness w;
  w.i = i;
  w.vertex = zs[i - 1];

  // k^2 at z_i, (0 1)^T on the arrow into z_i, (1 0) on the arrow out of z_i.
  std::vector<std::size_t> dims(q.num_vertices(), 1);
  dims[w.vertex] = 2;
  std::vector<RatMatrix> maps;
  for (ArrowId x = 0; x < q.num_arrows(); ++x) {
    RatMatrix m(dims[q.arrow(x).target], dims[q.arrow(x).source]);
    if (x == branch.arrows[i - 1]) m(1, 0) = 1;
    else if (x == branch.arrows[i]) m(0, 0) = 1;
    else m(0, 0) = 1;
    maps.push_back(std::move(m));
  }
  w.module = Representation(std::move(dims), std::move(maps));
  check_module(pres, w.module);
  const Algebra& a = an.algebra();
  w.end_dim = hom_space(a, w.module, w.module).dim();

  // Epimorphisms down to S_{z_i}, and monomorphisms back up as the duals of
  // the same construction over the opposite algebra.
  const Chain down = epi_chain(q, w.module, zs, i);
  const Algebra op = a.opposite();
  const std::vector<VertexId> zs_op(zs.rbegin(), zs.rend());
  const Chain up_op = epi_chain(op.quiver(), dual(w.module), zs_op, n3 + 1 - i);
  w.epi_chain = down.modules;
  for (auto it = up_op.modules.rbegin(); it != up_op.modules.rend(); ++it) w.mono_chain.push_back(dual(*it));
  std::vector<ModuleMorphism> up_maps;
  for (auto it = up_op.maps.rbegin(); it != up_op.maps.rend(); ++it) up_maps.push_back(dual(*it));
  w.steps = down.maps.size() + up_maps.size();

  const Representation& bottom = down.modules.back();
  if (bottom != simple(q, w.vertex) || w.mono_chain.front() != simple(q, w.vertex))
    throw Inconsistency("the chains do not pass through S_" + q.vertex_name(w.vertex));
  for (const auto& m : w.epi_chain)
    if (!is_indecomposable(a, m)) throw Inconsistency("decomposable module in the epimorphism chain");
  for (const auto& m : w.mono_chain)
    if (!is_indecomposable(a, m)) throw Inconsistency("decomposable module in the monomorphism chain");
  for (const auto& f : down.maps)
    if (is_isomorphism(f)) throw Inconsistency("isomorphism in the epimorphism chain");

  w.rho = compose(compose_all(up_maps), compose_all(down.maps));
  if (w.rho.is_zero()) throw Inconsistency("the cycle through S_" + q.vertex_name(w.vertex) + " is zero");
  if (w.steps != 2 * (n3 + 1))
    throw Inconsistency("the cycle has " + std::to_string(w.steps) + " steps, expected " + std::to_string(2 * (n3 + 1)));

  const auto node = an.find_node(w.module);
  if (!node) throw Inconsistency("the witness module is not among the indecomposables");
  w.node = *node;
  const auto& cat = an.category();
  const auto iso = find_isomorphism_local(hom_space(a, w.module, cat.module(w.node)));
  const ModuleMorphism moved = compose(*iso, compose(w.rho, inverse_morphism(*iso)));
  w.length = an.filtration().morphism_length(w.node, w.node, cat.hom(w.node, w.node).coordinates(moved));
  if (w.length < w.steps)
    throw Inconsistency("the cycle has length " + std::to_string(w.length) + " < " + std::to_string(w.steps));

  const Representation p = projective(a, w.vertex);
  auto phi = search(hom_space(a, p, w.module),
                    [&](const ModuleMorphism& f) { return is_monomorphism(f) && !compose(w.rho, f).is_zero(); });
  if (!phi) throw Inconsistency("no monomorphism P -> M survives the cycle");
  w.phi = *phi;
  const Representation inj = injective(a, w.vertex);
  auto psi = search(hom_space(a, w.module, inj),
                    [&](const ModuleMorphism& g) { return is_epimorphism(g) && !compose(g, w.rho).is_zero(); });
  if (!psi) throw Inconsistency("no epimorphism M -> I survives the cycle");
  w.psi = *psi;
  return w;
}

std::vector<ToupieWitness> build_toupie_witnesses(const Analysis& an) {
  const auto cls = classify(an.presentation());
  if (!cls.toupie || !cls.toupie->pattern)
    throw MethodInapplicable("the witness needs a three-branch toupie with one zero-relation");
  std::vector<ToupieWitness> out;
  const auto& pat = *cls.toupie->pattern;
  for (std::size_t i = pat.j; i < pat.j + pat.t; ++i) out.push_back(build_toupie_witness(an, i));
  return out;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const Quiver& q, const ComparisonFinding& f) {
  nlohmann::json j;
  j["rule"] = f.rule;
  j["arrow"] = {q.vertex_name(f.a), q.vertex_name(f.b)};
  j["irr_projective"] = f.irr_projective;
  j["irr_injective"] = f.irr_injective;
  j["end_projective_b"] = f.end_projective_b;
  j["end_injective_a"] = f.end_injective_a;
  if (f.factors_projective) j["factors_projective"] = *f.factors_projective;
  if (f.factors_injective) j["factors_injective"] = *f.factors_injective;
  if (f.a_in_zero_relation) j["a_in_zero_relation"] = *f.a_in_zero_relation;
  if (f.b_in_zero_relation) j["b_in_zero_relation"] = *f.b_in_zero_relation;
  j["conclusion"] = comparison_string(f.conclusion, q.vertex_name(f.a), q.vertex_name(f.b));
  j["r"] = {{q.vertex_name(f.a), f.r_a}, {q.vertex_name(f.b), f.r_b}};
  return j;
}

nlohmann::json to_json(const Quiver& q, const VertexSetCheck& c) {
  return {{"report", to_json(q, c.report)}, {"direct_r_A", c.direct_r_A}, {"certificates", c.certificates}};
}

nlohmann::json to_json(const Quiver& q, const LocalEndomorphisms& e) {
  return {{"vertex", q.vertex_name(e.vertex)},
          {"in_zero_relation", e.in_zero_relation},
          {"end_projective", e.end_projective},
          {"end_injective", e.end_injective}};
}

nlohmann::json to_json(const Quiver& q, const SimpleFactorization& s) {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& x : s.witness) w.push_back(x.to_string());
  return {{"a", q.vertex_name(s.a)}, {"b", q.vertex_name(s.b)}, {"side", s.side}, {"basis_index", s.basis_index},
          {"witness", w}};
}

nlohmann::json to_json(const Quiver& q, const CompositeLength& c) {
  return {{"vertex", q.vertex_name(c.vertex)}, {"r", c.r}, {"epi_length", c.epi_length},
          {"mono_length", c.mono_length}, {"top_layer_dim", c.top_layer_dim}};
}

nlohmann::json to_json(const Quiver& q, const ToupieWitness& w) {
  nlohmann::json chain = nlohmann::json::array();
  for (const auto& m : w.epi_chain) chain.push_back(m.dims());
  for (std::size_t k = 1; k < w.mono_chain.size(); ++k) chain.push_back(w.mono_chain[k].dims());
  return {{"i", w.i},
          {"vertex", q.vertex_name(w.vertex)},
          {"module", to_json(q, w.module)},
          {"end_dim", w.end_dim},
          {"cycle", chain},
          {"steps", w.steps},
          {"length", w.length}};
}

}  // namespace nilpot
