#include "nilpot/radical.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nilpot/errors.hpp"

namespace nilpot {

// ---------------------------------------------------------------------------
// ModuleCategory

ModuleCategory::ModuleCategory(const Algebra& a, std::vector<Representation> nodes) : algebra_(a) {
  prepared_.reserve(nodes.size());
  for (auto& m : nodes) prepared_.emplace_back(algebra_, std::move(m));
  const std::size_t n = prepared_.size();
  homs_.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) homs_.push_back(hom_space(prepared_[x], prepared_[y]));
  rad_.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      rad_.push_back(x == y ? endomorphism_radical(hom(x, x)) : Subspace::full(hom(x, y).dim()));
}

RatMatrix ModuleCategory::precompose_matrix(std::size_t x, std::size_t z, std::size_t y, const Vector& f) const {
  const HomSpace& hxz = hom(x, z);
  const HomSpace& hzy = hom(z, y);
  const HomSpace& hxy = hom(x, y);
  const Subspace& gxz = hxz.generator_space();
  Vector values(gxz.ambient());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    auto row = gxz.basis().row(i);
    for (std::size_t c = 0; c < values.size(); ++c)
      if (!row[c].is_zero()) values[c] += f[i] * row[c];
  }
  const auto& verts = hxz.generator_vertices();
  const auto& off_z = hxz.generator_offsets();
  const auto& off_y = hxy.generator_offsets();
  RatMatrix out(hxy.dim(), hzy.dim());
  for (std::size_t j = 0; j < hzy.dim(); ++j) {
    Vector g(off_y.back());
    for (std::size_t k = 0; k < verts.size(); ++k) {
      std::span<const Rational> yk(values.data() + off_z[k], off_z[k + 1] - off_z[k]);
      Vector img = hzy[j].maps[verts[k]] * yk;
      std::copy(img.begin(), img.end(), g.begin() + off_y[k]);
    }
    Vector c = hxy.coordinates_of_values(g);
    for (std::size_t r = 0; r < c.size(); ++r) out(r, j) = c[r];
  }
  return out;
}

Vector ModuleCategory::compose(std::size_t x, std::size_t z, std::size_t y, const Vector& g, const Vector& f) const {
  return precompose_matrix(x, z, y, f) * g;
}

// ---------------------------------------------------------------------------
// RadicalFiltration

RadicalFiltration::RadicalFiltration(const ModuleCategory& cat, std::size_t max_power) : cat_(&cat) {
  const std::size_t n = cat.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) zero_.push_back(Subspace::zero(cat.hom(x, y).dim()));

  auto all_zero = [&](const std::vector<Subspace>& layer) {
    return std::all_of(layer.begin(), layer.end(), [](const Subspace& s) { return s.is_zero(); });
  };
  std::vector<Subspace> first;
  for (std::size_t i = 0; i < n * n; ++i) first.push_back(cat.radical(i / n, i % n));
  if (all_zero(first)) {
    complete_ = true;
    return;
  }
  layers_.push_back(std::move(first));

  // Precomposition with each basis vector of rad(X, Z), cached per (X, Z, Y).
  std::unordered_map<std::size_t, std::vector<RatMatrix>> cache;
  auto precompose = [&](std::size_t x, std::size_t z, std::size_t y) -> const std::vector<RatMatrix>& {
    const std::size_t key = (x * n + z) * n + y;
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<RatMatrix> mats;
    const Subspace& r = cat.radical(x, z);
    for (std::size_t i = 0; i < r.dim(); ++i) mats.push_back(cat.precompose_matrix(x, z, y, r.basis_vector(i)));
    return cache.emplace(key, std::move(mats)).first->second;
  };

  while (layers_.size() < max_power) {
    const auto& prev = layers_.back();
    std::vector<Subspace> next;
    next.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const Subspace& cur = prev[x * n + y];
        Subspace acc = Subspace::zero(cur.ambient());
        if (!cur.is_zero()) {
          for (std::size_t z = 0; z < n && acc.dim() < cur.dim(); ++z) {
            const Subspace& g = prev[z * n + y];
            if (g.is_zero() || cat.radical(x, z).is_zero()) continue;
            for (const auto& m : precompose(x, z, y)) {
              for (std::size_t i = 0; i < g.dim() && acc.dim() < cur.dim(); ++i) {
                Vector v = m * g.basis().row(i);
                if (!acc.contains(v)) acc = subspace_sum(acc, Subspace::span({v}, v.size()));
              }
            }
          }
        }
        next.push_back(std::move(acc));
      }
    }
    if (all_zero(next)) {
      complete_ = true;
      return;
    }
    layers_.push_back(std::move(next));
  }
}

std::size_t RadicalFiltration::vanishing_power() const {
  if (!complete_) throw std::logic_error("radical filtration was truncated");
  return layers_.size() + 1;
}

const Subspace& RadicalFiltration::layer(std::size_t n, std::size_t x, std::size_t y) const {
  if (n == 0) throw std::invalid_argument("radical powers start at 1");
  const std::size_t idx = x * cat_->size() + y;
  if (n <= layers_.size()) return layers_[n - 1][idx];
  if (!complete_ && n > layers_.size()) throw std::out_of_range("radical power beyond the computed range");
  return zero_[idx];
}

std::size_t RadicalFiltration::irr_dim(std::size_t x, std::size_t y) const {
  const std::size_t d1 = layer(1, x, y).dim();
  const std::size_t d2 = (layers_.size() >= 2 || complete_) ? layer(2, x, y).dim() : 0;
  return d1 - d2;
}

std::size_t RadicalFiltration::morphism_length(std::size_t x, std::size_t y, const Vector& coords) const {
  if (std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c.is_zero(); }))
    throw std::invalid_argument("the zero morphism has no length");
  std::size_t n = 0;
  while (n < layers_.size() && layer(n + 1, x, y).contains(coords)) ++n;
  return n;
}

std::vector<ARArrow> irreducible_arrows(const RadicalFiltration& filt) {
  std::vector<ARArrow> out;
  const std::size_t n = filt.category().size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (std::size_t d = filt.irr_dim(x, y); d > 0) out.push_back({x, y, d});
  return out;
}

// ---------------------------------------------------------------------------
// Analysis

Analysis::Analysis(const AlgebraPresentation& pres, const EnumerationLimits& limits) : algebra_(pres) {
  ar_ = enumerate_ar_nodes(algebra_, limits);
  std::vector<Representation> mods;
  for (const auto& node : ar_.nodes) mods.push_back(node.module);
  cat_ = std::make_unique<ModuleCategory>(algebra_, std::move(mods));
  filt_ = std::make_unique<RadicalFiltration>(*cat_);
  ar_.arrows = irreducible_arrows(*filt_);
  auto defects = check_closure(algebra_, ar_);
  if (!defects.empty())
    throw Inconsistency("enumeration is not closed at node " + ar_.nodes[defects.front().node].label + ": " +
                        defects.front().what);
}

std::optional<std::size_t> Analysis::find_node(const Representation& m) const {
  for (std::size_t i = 0; i < cat_->size(); ++i) {
    if (cat_->module(i).dims() != m.dims()) continue;
    if (find_isomorphism_local(hom_space(algebra_, cat_->module(i), m))) return i;
  }
  return std::nullopt;
}

Vector Analysis::canonical_epi(VertexId a) const {
  const auto& h = cat_->hom(node_of_projective(a), node_of_simple(a));
  if (h.dim() != 1) throw Inconsistency("Hom(P_a, S_a) is not one-dimensional");
  return Vector{Rational(1)};
}

Vector Analysis::canonical_mono(VertexId a) const {
  const auto& h = cat_->hom(node_of_simple(a), node_of_injective(a));
  if (h.dim() != 1) throw Inconsistency("Hom(S_a, I_a) is not one-dimensional");
  return Vector{Rational(1)};
}

Vector Analysis::canonical_composite(VertexId a) const {
  return cat_->compose(node_of_projective(a), node_of_simple(a), node_of_injective(a), canonical_mono(a),
                       canonical_epi(a));
}

std::size_t Analysis::r(VertexId a) const {
  if (auto it = r_cache_.find(a); it != r_cache_.end()) return it->second;
  Vector c = canonical_composite(a);
  if (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.is_zero(); }))
    throw Inconsistency("P_a -> S_a -> I_a composes to zero");
  const std::size_t len = filt_->morphism_length(node_of_projective(a), node_of_injective(a), c);
  r_cache_[a] = len;
  return len;
}

// ---------------------------------------------------------------------------
// Nilpotency index

std::string method_name(Method m) {
  switch (m) {
    case Method::Direct: return "direct";
    case Method::VertexSet: return "v-set";
    case Method::ZeroRelations: return "zero-relations";
    case Method::OnePerRelation: return "one-per-relation";
    case Method::Toupie: return "toupie";
    case Method::Auto: return "auto";
  }
  return "?";
}

std::optional<Method> parse_method(const std::string& s) {
  for (Method m : {Method::Direct, Method::VertexSet, Method::ZeroRelations, Method::OnePerRelation, Method::Toupie,
                   Method::Auto})
    if (method_name(m) == s) return m;
  return std::nullopt;
}

namespace {

NilpotencyReport max_over(const Analysis& an, const std::string& method, const std::vector<VertexId>& vertices) {
  NilpotencyReport rep;
  rep.method = method;
  rep.vertex_set = vertices;
  for (VertexId v : vertices) {
    const std::size_t r = an.r(v);
    rep.per_vertex[v] = r;
    rep.r_A = std::max(rep.r_A, r + 1);
  }
  rep.layers_computed = an.filtration().num_layers() + 1;
  return rep;
}

std::string vname(const Analysis& an, VertexId v) { return an.presentation().quiver.vertex_name(v); }

void require_monomial(const Analysis& an, const std::string& method) {
  const auto& rels = an.presentation().relations;
  for (std::size_t i = 0; i < rels.size(); ++i)
    if (!rels[i].is_zero_relation())
      throw MethodInapplicable(method + " needs a monomial algebra, but relation " + std::to_string(i + 1) +
                               " has " + std::to_string(rels[i].terms.size()) + " terms");
}

NilpotencyReport vertex_set_method(const Analysis& an) {
  const auto ss = sinks_and_sources(an.presentation().quiver);
  if (ss.inner.empty()) throw MethodInapplicable("v-set: every vertex is a sink or a source");
  return max_over(an, "v-set", {ss.inner.begin(), ss.inner.end()});
}

NilpotencyReport direct_method(const Analysis& an);

/// No zero-relation vertex: the inner vertices decide, or every vertex when
/// the quiver has none.
NilpotencyReport fallback(const Analysis& an, const std::string& method) {
  NilpotencyReport rep;
  if (sinks_and_sources(an.presentation().quiver).inner.empty()) {
    rep = direct_method(an);
    rep.notes.push_back("no zero-relation vertex and no inner vertex; used the direct computation");
  } else {
    rep = vertex_set_method(an);
    rep.notes.push_back("no zero-relation vertex; used the vertices that are neither sinks nor sources");
  }
  rep.method = method;
  return rep;
}

/// Interior vertices s(a_i), i >= 2, of each zero-relation.
std::vector<std::vector<VertexId>> relation_vertices(const AlgebraPresentation& pres) {
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

void certify_equal(const Analysis& an, const std::vector<VertexId>& vs, NilpotencyReport& rep) {
  for (VertexId v : vs) {
    const std::size_t r = an.r(v);
    rep.per_vertex[v] = r;
    if (r != an.r(vs.front()))
      throw Inconsistency("vertices " + vname(an, vs.front()) + " and " + vname(an, v) +
                          " of one zero-relation have different r: " + std::to_string(an.r(vs.front())) + " and " +
                          std::to_string(r));
  }
}

NilpotencyReport zero_relations_method(const Analysis& an) {
  require_monomial(an, "zero-relations");
  const auto r0 = zero_relation_vertices(an.presentation());
  if (r0.empty()) return fallback(an, "zero-relations");
  return max_over(an, "zero-relations", {r0.begin(), r0.end()});
}

NilpotencyReport one_per_relation_method(const Analysis& an) {
  require_monomial(an, "one-per-relation");
  const auto rels = relation_vertices(an.presentation());
  std::map<VertexId, std::size_t> seen;
  for (const auto& vs : rels)
    for (VertexId v : vs) ++seen[v];
  for (const auto& [v, count] : seen)
    if (count != 1)
      throw MethodInapplicable("one-per-relation: vertex " + vname(an, v) + " occurs " + std::to_string(count) +
                               " times among the zero-relations");
  if (seen.empty()) return fallback(an, "one-per-relation");
  std::vector<VertexId> reps;
  for (const auto& vs : rels)
    if (!vs.empty()) reps.push_back(vs.front());
  auto rep = max_over(an, "one-per-relation", reps);
  for (const auto& vs : rels)
    if (!vs.empty()) certify_equal(an, vs, rep);
  return rep;
}

NilpotencyReport toupie_method(const Analysis& an) {
  const auto cls = classify(an.presentation());
  if (!cls.toupie) throw MethodInapplicable("toupie: the quiver does not have a unique source, a unique sink and linear branches");
  if (!cls.toupie->pattern)
    throw MethodInapplicable("toupie: the relations are not one zero-relation on one of three branches plus one "
                             "commutativity relation between the other two");
  const auto rels = relation_vertices(an.presentation());
  const auto& vs = rels.front();
  auto rep = max_over(an, "toupie", {vs.front()});
  certify_equal(an, vs, rep);
  return rep;
}

NilpotencyReport direct_method(const Analysis& an) {
  std::vector<VertexId> all(an.presentation().quiver.num_vertices());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  auto rep = max_over(an, "direct", all);
  rep.r_A = an.filtration().vanishing_power();
  for (const auto& [v, r] : rep.per_vertex)
    if (r + 1 > rep.r_A) throw Inconsistency("r_" + vname(an, v) + " + 1 exceeds the nilpotency index");
  return rep;
}

Method choose(const Analysis& an) {
  const auto cls = classify(an.presentation());
  if (cls.toupie && cls.toupie->pattern) return Method::Toupie;
  if (cls.is_monomial && !zero_relation_vertices(an.presentation()).empty()) {
    std::map<VertexId, std::size_t> seen;
    for (const auto& vs : relation_vertices(an.presentation()))
      for (VertexId v : vs) ++seen[v];
    const bool once = std::all_of(seen.begin(), seen.end(), [](const auto& kv) { return kv.second == 1; });
    return once ? Method::OnePerRelation : Method::ZeroRelations;
  }
  if (!sinks_and_sources(an.presentation().quiver).inner.empty()) return Method::VertexSet;
  return Method::Direct;
}

}  // namespace

NilpotencyReport nilpotency_index(const Analysis& an, Method method) {
  switch (method) {
    case Method::Direct: return direct_method(an);
    case Method::VertexSet: return vertex_set_method(an);
    case Method::ZeroRelations: return zero_relations_method(an);
    case Method::OnePerRelation: return one_per_relation_method(an);
    case Method::Toupie: return toupie_method(an);
    case Method::Auto: {
      auto rep = nilpotency_index(an, choose(an));
      rep.notes.push_back("method chosen automatically");
      return rep;
    }
  }
  throw std::logic_error("unknown method");
}

NilpotencyReport nilpotency_index(const Analysis& an, Method method, bool verify) {
  auto rep = nilpotency_index(an, method);
  if (verify && rep.method != "direct") {
    const std::size_t direct = an.filtration().vanishing_power();
    if (direct != rep.r_A)
      throw Inconsistency(rep.method + " gives " + std::to_string(rep.r_A) + " but the direct computation gives " +
                          std::to_string(direct));
    rep.notes.push_back("agrees with the direct computation");
  }
  return rep;
}

nlohmann::json to_json(const Quiver& q, const NilpotencyReport& r) {
  nlohmann::json j;
  j["method"] = r.method;
  j["r_A"] = r.r_A;
  nlohmann::json pv = nlohmann::json::object();
  for (const auto& [v, val] : r.per_vertex) pv[q.vertex_name(v)] = val;
  j["per_vertex"] = std::move(pv);
  nlohmann::json vs = nlohmann::json::array();
  for (VertexId v : r.vertex_set) vs.push_back(q.vertex_name(v));
  j["vertex_set"] = std::move(vs);
  j["layers_computed"] = r.layers_computed;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

}  // namespace nilpot
