#include "property_suite.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "nilpot/errors.hpp"

namespace nilpot::props {

namespace {

std::string node_name(const Analysis& an, std::size_t i) { return an.ar().nodes[i].label; }

Outcome fail(Outcome o, std::string why) {
  o.ok = false;
  o.detail = std::move(why);
  return o;
}

}  // namespace

Outcome multiplicity_law(const Analysis& an) {
  Outcome o{"multiplicity law", true, {}};
  const auto& cat = an.category();
  const auto& q = an.presentation().quiver;
  for (std::size_t m = 0; m < cat.size(); ++m) {
    for (VertexId a = 0; a < q.num_vertices(); ++a) {
      const std::size_t d = cat.module(m).dim(a);
      const std::size_t into_i = cat.hom(m, an.node_of_injective(a)).dim();
      const std::size_t from_p = cat.hom(an.node_of_projective(a), m).dim();
      if (into_i != d || from_p != d) {
        std::ostringstream s;
        s << node_name(an, m) << " at " << q.vertex_name(a) << ": d = " << d << ", Hom(M, I) = " << into_i
          << ", Hom(P, M) = " << from_p;
        return fail(o, s.str());
      }
    }
  }
  return o;
}

Outcome mesh_identity(const Analysis& an) {
  Outcome o{"mesh identity", true, {}};
  const auto& ar = an.ar();
  const std::size_t nv = an.presentation().quiver.num_vertices();
  for (std::size_t y = 0; y < ar.nodes.size(); ++y) {
    const auto& node = ar.nodes[y];
    if (node.projective) continue;
    if (!node.tau) return fail(o, node.label + " is not projective but has no translate");
    std::vector<std::size_t> lhs(nv), rhs(nv, 0);
    for (VertexId v = 0; v < nv; ++v) lhs[v] = node.module.dim(v) + ar.nodes[*node.tau].module.dim(v);
    for (std::size_t z = 0; z < ar.nodes.size(); ++z) {
      const std::size_t k = an.filtration().irr_dim(z, y);
      for (VertexId v = 0; v < nv; ++v) rhs[v] += k * ar.nodes[z].module.dim(v);
    }
    if (lhs != rhs) return fail(o, "mesh ending at " + node.label + " does not balance");
  }
  return o;
}

Outcome trivial_valuation(const Analysis& an) {
  Outcome o{"trivial valuation", true, {}};
  const std::size_t n = an.category().size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (an.filtration().irr_dim(x, y) > 1)
        return fail(o, "dim Irr(" + node_name(an, x) + ", " + node_name(an, y) + ") = " +
                           std::to_string(an.filtration().irr_dim(x, y)));
  return o;
}

Outcome cross_method(const Analysis& an) {
  Outcome o{"cross-method agreement", true, {}};
  const std::size_t direct = nilpotency_index(an, Method::Direct).r_A;
  if (direct != an.filtration().vanishing_power()) return fail(o, "direct report disagrees with the filtration");
  for (Method m : {Method::VertexSet, Method::ZeroRelations, Method::OnePerRelation, Method::Toupie, Method::Auto}) {
    try {
      const auto rep = nilpotency_index(an, m);
      if (rep.r_A != direct)
        return fail(o, method_name(m) + " gives " + std::to_string(rep.r_A) + ", direct gives " + std::to_string(direct));
    } catch (const MethodInapplicable&) {
    }
  }
  return o;
}

Outcome length_additivity(const Analysis& an) {
  Outcome o{"length additivity", true, {}};
  const auto& f = an.filtration();
  const auto& q = an.presentation().quiver;
  for (VertexId a = 0; a < q.num_vertices(); ++a) {
    const std::size_t p = an.node_of_projective(a), s = an.node_of_simple(a), i = an.node_of_injective(a);
    const std::size_t n = f.morphism_length(p, s, an.canonical_epi(a));
    const std::size_t m = f.morphism_length(s, i, an.canonical_mono(a));
    const std::size_t total = f.morphism_length(p, i, an.canonical_composite(a));
    if (n + m != total) {
      std::ostringstream msg;
      msg << "vertex " << q.vertex_name(a) << ": " << n << " + " << m << " != " << total;
      return fail(o, msg.str());
    }
  }
  return o;
}

Outcome brute_force_filtration(const Analysis& an, std::size_t max_nodes) {
  Outcome o{"brute-force filtration", true, {}};
  const auto& cat = an.category();
  const std::size_t n = cat.size();
  if (n > max_nodes) {
    o.detail = "skipped";
    return o;
  }
  const std::size_t top = an.filtration().vanishing_power();

  // Radical basis morphisms out of each node, as actual module maps.
  struct Edge {
    std::size_t to;
    ModuleMorphism map;
  };
  std::vector<std::vector<Edge>> out(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z) {
      const Subspace& r = cat.radical(x, z);
      for (std::size_t k = 0; k < r.dim(); ++k) out[x].push_back({z, cat.hom(x, z).morphism(r.basis_vector(k))});
    }

  for (std::size_t x = 0; x < n; ++x) {
    // chains[k] = every nonzero composite of n radical basis maps starting at x
    std::vector<Edge> chains = out[x];
    for (std::size_t len = 1; len <= top; ++len) {
      std::vector<std::vector<Vector>> spans(n);
      for (const auto& c : chains) spans[c.to].push_back(cat.hom(x, c.to).coordinates(c.map));
      for (std::size_t y = 0; y < n; ++y) {
        const Subspace got = Subspace::span(spans[y], cat.hom(x, y).dim());
        if (!(got == an.filtration().layer(len, x, y))) {
          std::ostringstream s;
          s << "rad^" << len << "(" << node_name(an, x) << ", " << node_name(an, y) << "): chains span " << got.dim()
            << ", filtration has " << an.filtration().layer(len, x, y).dim();
          return fail(o, s.str());
        }
      }
      if (len == top) break;
      std::vector<Edge> next;
      for (const auto& c : chains)
        for (const auto& e : out[c.to]) {
          ModuleMorphism g = compose(e.map, c.map);
          if (g.is_zero()) continue;
          const bool seen = std::any_of(next.begin(), next.end(),
                                        [&](const Edge& d) { return d.to == e.to && d.map == g; });
          if (!seen) next.push_back({e.to, std::move(g)});
        }
      chains = std::move(next);
    }
  }
  return o;
}

std::vector<Outcome> all_properties(const Analysis& an) {
  return {multiplicity_law(an), mesh_identity(an),  trivial_valuation(an),
          cross_method(an),     length_additivity(an), brute_force_filtration(an)};
}

namespace {

std::string random_presentation(std::mt19937& rng, std::size_t max_vertices) {
  auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  const std::size_t n = uniform(2, max_vertices);
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t u = uniform(0, v - 1);
    if (uniform(0, 1)) arrows.push_back({u, v});
    else arrows.push_back({v, u});
  }
  for (std::size_t extra = uniform(0, 2); extra > 0; --extra) {
    const std::size_t s = uniform(0, n - 1), t = uniform(0, n - 1);
    if (s != t) arrows.push_back({s, t});
  }

  std::ostringstream text;
  text << "vertex";
  for (std::size_t v = 1; v <= n; ++v) text << ' ' << v;
  text << '\n';
  for (std::size_t k = 0; k < arrows.size(); ++k)
    text << "arrow a" << k << ' ' << arrows[k].first + 1 << ' ' << arrows[k].second + 1 << '\n';

  std::set<std::vector<std::size_t>> rels;
  for (std::size_t tries = uniform(0, 3); tries > 0; --tries) {
    std::vector<std::size_t> path{uniform(0, arrows.size() - 1)};
    const std::size_t want = uniform(2, 3);
    while (path.size() < want) {
      std::vector<std::size_t> next;
      for (std::size_t k = 0; k < arrows.size(); ++k)
        if (arrows[k].first == arrows[path.back()].second) next.push_back(k);
      if (next.empty()) break;
      path.push_back(next[uniform(0, next.size() - 1)]);
    }
    if (path.size() >= 2) rels.insert(path);
  }
  for (const auto& p : rels) {
    text << "relation ";
    for (std::size_t k = 0; k < p.size(); ++k) text << (k ? "*" : "") << 'a' << p[k];
    text << '\n';
  }
  return text.str();
}

}  // namespace

std::vector<RandomCase> random_monomial_cases(std::size_t count, std::uint32_t seed, std::size_t max_vertices) {
  std::mt19937 rng(seed);
  std::vector<RandomCase> out;
  std::set<std::string> seen;
  const EnumerationLimits limits{300, 3000};
  for (std::size_t attempt = 0; attempt < 20000 && out.size() < count; ++attempt) {
    const std::uint32_t case_seed = static_cast<std::uint32_t>(rng());
    std::mt19937 case_rng(case_seed);
    std::string text = random_presentation(case_rng, max_vertices);
    if (!seen.insert(text).second) continue;
    try {
      const auto pres = parse_presentation(text);
      validate_admissible(pres);
      auto an = std::make_unique<Analysis>(pres, limits);
      out.push_back({case_seed, std::move(text), std::move(an)});
    } catch (const NotAdmissible&) {
    } catch (const LimitsExceeded&) {
    }
  }
  return out;
}

}  // namespace nilpot::props
