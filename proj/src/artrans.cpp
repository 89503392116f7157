#include "nilpot/artrans.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nilpot/errors.hpp"
#include "nilpot/radical.hpp"

namespace nilpot {

Representation transpose(const Algebra& a, const Representation& m) {
  if (m.is_zero()) throw std::invalid_argument("transpose of the zero module");
  PreparedModule pm(a, m);
  const Algebra op = a.opposite();
  const PathAlgebra& pa = a.paths();
  const PathAlgebra& po = op.paths();
  const Quiver& q = op.quiver();
  const std::size_t n = q.num_vertices();
  const auto& gens = pm.top_generators();
  const auto& syz = pm.kernel_generators();

  // Target (+)_l P^op_{b_l}, source (+)_k P^op_{a_k}.
  std::vector<std::size_t> dims(n, 0);
  std::vector<std::vector<std::size_t>> offset(n, std::vector<std::size_t>(syz.size() + 1, 0));
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t l = 0; l < syz.size(); ++l)
      offset[v][l + 1] = offset[v][l] + po.basis(syz[l].vertex, v).size();
    dims[v] = offset[v].back();
  }
  Representation target = Representation::zero(q);
  for (const auto& s : syz) target = direct_sum(target, projective(op, s.vertex));

  // The generator of P^op_{a_k} maps to (reverse of kappa_{l,k})_l; a path p
  // from a_k then acts on the right.
  std::vector<Subspace> img(n);
  for (VertexId v = 0; v < n; ++v) {
    std::vector<Vector> cols;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      for (const auto& p : po.basis(gens[k].vertex, v)) {
        Vector col(dims[v]);
        for (std::size_t l = 0; l < syz.size(); ++l) {
          const Vector& kappa = syz[l].components[k];
          const auto& paths = pa.basis(gens[k].vertex, syz[l].vertex);
          for (std::size_t c = 0; c < kappa.size(); ++c) {
            if (kappa[c].is_zero()) continue;
            Path x = compose(q, reversed(a.quiver(), paths[c]), p);
            Vector nf = po.normal_form(x);
            for (std::size_t r = 0; r < nf.size(); ++r)
              if (!nf[r].is_zero()) col[offset[v][l] + r] += kappa[c] * nf[r];
          }
        }
        cols.push_back(std::move(col));
      }
    }
    img[v] = Subspace::span(cols, dims[v]);
  }
  return quotient(q, target, img).module;
}

bool is_projective_module(const Algebra& a, const Representation& m) { return PreparedModule(a, m).is_projective(); }

bool is_injective_module(const Algebra& a, const Representation& m) {
  return PreparedModule(a.opposite(), dual(m)).is_projective();
}

std::optional<Representation> ar_translate(const Algebra& a, const Representation& m) {
  if (is_projective_module(a, m)) return std::nullopt;
  return dual(transpose(a, m));
}

std::optional<Representation> ar_translate_inverse(const Algebra& a, const Representation& m) {
  const Algebra op = a.opposite();
  Representation dm = dual(m);
  if (is_projective_module(op, dm)) return std::nullopt;
  return transpose(op, dm);
}

std::size_t ARQuiver::irr_dim(std::size_t from, std::size_t to) const {
  auto it = std::lower_bound(arrows.begin(), arrows.end(), std::make_pair(from, to),
                             [](const ARArrow& x, const std::pair<std::size_t, std::size_t>& k) {
                               return std::make_pair(x.from, x.to) < k;
                             });
  return it != arrows.end() && it->from == from && it->to == to ? it->irr_dim : 0;
}

std::string dimension_vector_string(const Representation& m) {
  std::string s = "[";
  for (std::size_t v = 0; v < m.num_vertices(); ++v) {
    if (v) s += ',';
    s += std::to_string(m.dim(v));
  }
  return s + "]";
}

Representation almost_split_middle_term(const Algebra& a, const Representation& y, const Representation& tau_y) {
  const Quiver& q = a.quiver();
  const PreparedModule py(a, y);
  if (py.is_projective()) throw std::invalid_argument("no almost split sequence ends in a projective module");
  const ProjectiveCover pc = projective_cover(py);
  const Subrepresentation syz = kernel(q, pc.projective, pc.epi);

  // Ext^1(Y, tau Y) = Hom(syz, tau Y) / (maps extending to P_0).
  const PreparedModule pk(a, syz.module), pn(a, tau_y), p0(a, pc.projective);
  const HomSpace hkn = hom_space(pk, pn);
  const std::size_t h = hkn.dim();
  const HomSpace h0n = hom_space(p0, pn);
  std::vector<Vector> extending;
  for (const auto& f : h0n.basis()) extending.push_back(hkn.coordinates(compose(f, syz.inclusion)));
  const Subspace split = Subspace::span(extending, h);
  const Subspace annihilator = kernel(split.basis());

  // Socle of Ext^1 as an End(tau Y)-module: classes killed by rad End(tau Y).
  const HomSpace end = hom_space(pn, pn);
  const Subspace rad = endomorphism_radical(end);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < rad.dim(); ++i) {
    const ModuleMorphism e = end.morphism(rad.basis_vector(i));
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < h; ++c) cols.push_back(hkn.coordinates(compose(e, hkn[c])));
    const RatMatrix act = RatMatrix::from_columns(cols, h);
    for (std::size_t w = 0; w < annihilator.dim(); ++w) {
      Vector row(h);
      auto wv = annihilator.basis().row(w);
      for (std::size_t r = 0; r < h; ++r)
        if (!wv[r].is_zero())
          for (std::size_t c = 0; c < h; ++c) row[c] += wv[r] * act(r, c);
      rows.push_back(std::move(row));
    }
  }
  const Subspace socle = rows.empty() ? Subspace::full(h) : kernel(RatMatrix::from_rows(rows, h));
  std::optional<Vector> eps;
  for (std::size_t i = 0; i < socle.dim() && !eps; ++i)
    if (!split.contains(socle.basis().row(i))) eps = socle.basis_vector(i);
  if (!eps) throw Inconsistency("Ext^1(Y, tau Y) has no non-split class");
  const ModuleMorphism f = hkn.morphism(*eps);

  // Pushout of 0 -> syz -> P_0 -> Y -> 0 along f.
  const Representation sum = direct_sum(tau_y, pc.projective);
  std::vector<Subspace> parts;
  for (VertexId v = 0; v < q.num_vertices(); ++v) {
    std::vector<Vector> gens;
    for (std::size_t x = 0; x < syz.module.dim(v); ++x) {
      Vector g(sum.dim(v));
      for (std::size_t r = 0; r < tau_y.dim(v); ++r) g[r] = f.maps[v](r, x);
      for (std::size_t r = 0; r < pc.projective.dim(v); ++r) g[tau_y.dim(v) + r] = -syz.inclusion.maps[v](r, x);
      gens.push_back(std::move(g));
    }
    parts.push_back(Subspace::span(gens, sum.dim(v)));
  }
  return quotient(q, sum, parts).module;
}

namespace {

class Enumerator {
 public:
  Enumerator(const Algebra& a, const EnumerationLimits& limits) : a_(a), limits_(limits) {}

  ARQuiver run() {
    const Quiver& q = a_.quiver();
    const std::size_t n = q.num_vertices();
    ar_.projective_node.resize(n);
    ar_.injective_node.resize(n);
    ar_.simple_node.resize(n);
    for (VertexId v = 0; v < n; ++v) ar_.projective_node[v] = add(projective(a_, v));
    for (VertexId v = 0; v < n; ++v) ar_.injective_node[v] = add(injective(a_, v));
    for (VertexId v = 0; v < n; ++v) ar_.simple_node[v] = add(simple(q, v));

    // Translates first: they are cheap, and on a representation-infinite
    // input they run into the limits before any middle term is decomposed.
    // Every irreducible map X -> Z has Z in the middle term of the sequence
    // starting at X, or in X / soc X when X is injective, so the neighbour
    // search reaches every node of a connected component.
    for (;;) {
      while (translated_ < ar_.nodes.size()) translate(translated_++);
      if (expanded_ == ar_.nodes.size()) break;
      expand(expanded_++);
    }

    // Checked only once the enumeration has closed up, so that a
    // representation-infinite input hits the limits before any expensive
    // endomorphism computation on large modules.
    for (const auto& node : ar_.nodes)
      if (!is_indecomposable(a_, node.module)) throw Inconsistency("translate produced a decomposable module");
    label();
    return std::move(ar_);
  }

 private:
  /// Index of the node isomorphic to m, adding it when new.
  std::size_t add(const Representation& m) {
    // Checked before the isomorphism search, which is the expensive part on
    // the ever larger modules of a representation-infinite algebra.
    if (m.total_dim() > limits_.max_module_dim)
      throw LimitsExceeded("an indecomposable of dimension " + std::to_string(m.total_dim()) +
                           " appeared; the algebra looks representation-infinite");
    if (total_ + m.total_dim() > limits_.max_total_dim)
      throw LimitsExceeded("indecomposables found so far exceed total dimension " +
                           std::to_string(limits_.max_total_dim) + "; the algebra looks representation-infinite");
    for (std::size_t i = 0; i < ar_.nodes.size(); ++i) {
      if (ar_.nodes[i].module.dims() != m.dims()) continue;
      if (find_isomorphism_local(hom_space(a_, ar_.nodes[i].module, m))) return i;
    }
    if (ar_.nodes.size() + 1 > limits_.max_modules)
      throw LimitsExceeded("more than " + std::to_string(limits_.max_modules) +
                           " indecomposables; the algebra looks representation-infinite");
    total_ += m.total_dim();
    ARNode node;
    node.module = m;
    node.projective = is_projective_module(a_, m);
    node.injective = is_injective_module(a_, m);
    ar_.nodes.push_back(std::move(node));
    return ar_.nodes.size() - 1;
  }

  void translate(std::size_t i) {
    if (!ar_.nodes[i].projective && !ar_.nodes[i].tau) {
      const std::size_t t = add(*ar_translate(a_, ar_.nodes[i].module));
      ar_.nodes[i].tau = t;
      ar_.nodes[t].tau_inverse = i;
    }
    if (!ar_.nodes[i].injective && !ar_.nodes[i].tau_inverse) {
      const std::size_t t = add(*ar_translate_inverse(a_, ar_.nodes[i].module));
      ar_.nodes[i].tau_inverse = t;
      ar_.nodes[t].tau = i;
    }
  }

  void expand(std::size_t i) {
    const Quiver& q = a_.quiver();
    const Representation m = ar_.nodes[i].module;
    std::vector<Representation> found;
    if (ar_.nodes[i].projective) {
      found = decompose(a_, radical_submodule(q, m).module);
    } else {
      const Representation tau = ar_.nodes[*ar_.nodes[i].tau].module;
      found = decompose(a_, almost_split_middle_term(a_, m, tau));
    }
    if (ar_.nodes[i].injective) {
      auto more = decompose(a_, cokernel(q, m, socle(q, m).inclusion).module);
      found.insert(found.end(), more.begin(), more.end());
    }
    for (const auto& z : found) add(z);
  }

  /// P_a, I_a (not projective), S_a (neither), then tau^{-k} P_a or
  /// tau^k I_a along the orbit; orbits meeting neither get N_i.
  void label() {
    const Quiver& q = a_.quiver();
    const std::size_t count = ar_.nodes.size();
    std::vector<std::string> names(count);
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
      const std::size_t s = ar_.simple_node[v];
      if (!ar_.nodes[s].projective && !ar_.nodes[s].injective) names[s] = "S_" + q.vertex_name(v);
    }
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
      const std::size_t i = ar_.injective_node[v];
      if (!ar_.nodes[i].projective) names[i] = "I_" + q.vertex_name(v);
    }
    for (VertexId v = 0; v < q.num_vertices(); ++v) names[ar_.projective_node[v]] = "P_" + q.vertex_name(v);

    auto name_orbit = [&](std::size_t start, bool forward, const std::string& base) {
      std::size_t cur = start;
      for (std::size_t k = 1;; ++k) {
        const auto& next = forward ? ar_.nodes[cur].tau_inverse : ar_.nodes[cur].tau;
        if (!next || *next == start) return;
        cur = *next;
        if (names[cur].empty())
          names[cur] = (forward ? "τ^{-" : "τ^{") + std::to_string(k) + "}" + base;
      }
    };
    for (VertexId v = 0; v < q.num_vertices(); ++v)
      name_orbit(ar_.projective_node[v], true, "P_" + q.vertex_name(v));
    for (VertexId v = 0; v < q.num_vertices(); ++v)
      name_orbit(ar_.injective_node[v], false, "I_" + q.vertex_name(v));
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
      const std::size_t s = ar_.simple_node[v];
      name_orbit(s, true, "S_" + q.vertex_name(v));
      name_orbit(s, false, "S_" + q.vertex_name(v));
    }
    std::size_t free = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (!names[i].empty()) continue;
      const std::string base = "N_" + std::to_string(++free);
      names[i] = base;
      name_orbit(i, true, base);
      name_orbit(i, false, base);
    }
    for (std::size_t i = 0; i < count; ++i) ar_.nodes[i].label = std::move(names[i]);
  }

  const Algebra& a_;
  EnumerationLimits limits_;
  ARQuiver ar_;
  std::size_t total_ = 0;
  std::size_t translated_ = 0;
  std::size_t expanded_ = 0;
};

std::vector<std::size_t> add_dims(std::vector<std::size_t> acc, const std::vector<std::size_t>& d, std::size_t times) {
  for (std::size_t v = 0; v < acc.size(); ++v) acc[v] += times * d[v];
  return acc;
}

std::string dims_string(const std::vector<std::size_t>& d) {
  std::string s = "[";
  for (std::size_t v = 0; v < d.size(); ++v) s += (v ? "," : "") + std::to_string(d[v]);
  return s + "]";
}

}  // namespace

ARQuiver enumerate_ar_nodes(const Algebra& a, const EnumerationLimits& limits) {
  return Enumerator(a, limits).run();
}

std::vector<Representation> enumerate_indecomposables(const Algebra& a, const EnumerationLimits& limits) {
  std::vector<Representation> out;
  for (auto& node : enumerate_ar_nodes(a, limits).nodes) out.push_back(std::move(node.module));
  return out;
}

ARQuiver ar_quiver(const Algebra& a, const EnumerationLimits& limits) {
  ARQuiver ar = enumerate_ar_nodes(a, limits);
  std::vector<Representation> mods;
  for (const auto& node : ar.nodes) mods.push_back(node.module);
  ModuleCategory cat(a, std::move(mods));
  RadicalFiltration filt(cat, 2);
  ar.arrows = irreducible_arrows(filt);
  auto defects = check_closure(a, ar);
  if (!defects.empty())
    throw Inconsistency("enumeration is not closed at node " + ar.nodes[defects.front().node].label + ": " +
                        defects.front().what);
  return ar;
}

std::vector<ClosureDefect> check_closure(const Algebra& a, const ARQuiver& ar) {
  const Quiver& q = a.quiver();
  const std::size_t n = q.num_vertices();
  const std::size_t count = ar.nodes.size();
  std::vector<std::vector<std::size_t>> in(count, std::vector<std::size_t>(n, 0));
  std::vector<std::vector<std::size_t>> out(count, std::vector<std::size_t>(n, 0));
  for (const auto& e : ar.arrows) {
    in[e.to] = add_dims(in[e.to], ar.nodes[e.from].module.dims(), e.irr_dim);
    out[e.from] = add_dims(out[e.from], ar.nodes[e.to].module.dims(), e.irr_dim);
  }
  std::vector<ClosureDefect> defects;
  for (std::size_t y = 0; y < count; ++y) {
    const ARNode& node = ar.nodes[y];
    const auto& d = node.module.dims();
    std::vector<std::size_t> want_in, want_out;
    if (node.projective) {
      want_in = radical_submodule(q, node.module).module.dims();
    } else if (node.tau) {
      want_in = add_dims(d, ar.nodes[*node.tau].module.dims(), 1);
    } else {
      defects.push_back({y, "non-projective node without a translate"});
      continue;
    }
    if (node.injective) {
      // d(I / soc I) = d(rad DI)
      want_out = radical_submodule(q.opposite(), dual(node.module)).module.dims();
    } else if (node.tau_inverse) {
      want_out = add_dims(d, ar.nodes[*node.tau_inverse].module.dims(), 1);
    } else {
      defects.push_back({y, "non-injective node without an inverse translate"});
      continue;
    }
    if (in[y] != want_in)
      defects.push_back({y, "incoming irreducible maps give " + dims_string(in[y]) + ", expected " + dims_string(want_in)});
    if (out[y] != want_out)
      defects.push_back({y, "outgoing irreducible maps give " + dims_string(out[y]) + ", expected " + dims_string(want_out)});
  }
  return defects;
}

std::string to_dot(const Quiver& q, const ARQuiver& ar) {
  (void)q;
  std::vector<std::size_t> order(ar.nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const auto& dx = ar.nodes[x].module.dims();
    const auto& dy = ar.nodes[y].module.dims();
    if (dx != dy) return dx < dy;
    return ar.nodes[x].label < ar.nodes[y].label;
  });
  std::vector<std::size_t> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  std::ostringstream out;
  out << "digraph AR {\n  rankdir=LR;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < order.size(); ++i) {
    const ARNode& node = ar.nodes[order[i]];
    out << "  n" << i << " [label=\"" << node.label << ' ' << dimension_vector_string(node.module) << "\"];\n";
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : ar.arrows) edges.emplace_back(rank[e.from], rank[e.to]);
  std::sort(edges.begin(), edges.end());
  for (const auto& [f, t] : edges) out << "  n" << f << " -> n" << t << ";\n";
  std::vector<std::pair<std::size_t, std::size_t>> taus;
  for (std::size_t y = 0; y < ar.nodes.size(); ++y)
    if (ar.nodes[y].tau) taus.emplace_back(rank[y], rank[*ar.nodes[y].tau]);
  std::sort(taus.begin(), taus.end());
  for (const auto& [f, t] : taus) out << "  n" << f << " -> n" << t << " [style=dashed, constraint=false];\n";
  out << "}\n";
  return out.str();
}

}  // namespace nilpot
