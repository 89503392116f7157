#include "nilpot/rep.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "nilpot/errors.hpp"

namespace nilpot {

namespace {

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

Vector concat(const std::vector<Vector>& parts) {
  Vector out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

bool is_zero_vector(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

/// Subspace spanned by the columns of m.
Subspace column_space(const RatMatrix& m) { return Subspace::span(m.transpose()); }

}  // namespace

// ---------------------------------------------------------------------------
// Representation and morphisms

Representation Representation::zero(const Quiver& q) {
  std::vector<RatMatrix> maps(q.num_arrows());
  return Representation(std::vector<std::size_t>(q.num_vertices(), 0), std::move(maps));
}

std::size_t Representation::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

RatMatrix path_action(const Quiver& q, const Representation& m, const Path& p) {
  RatMatrix acc = RatMatrix::identity(m.dim(p.start));
  for (ArrowId a : p.arrows) acc = m.map(a) * acc;
  (void)q;
  return acc;
}

void check_module(const AlgebraPresentation& pres, const Representation& m) {
  const Quiver& q = pres.quiver;
  if (m.num_vertices() != q.num_vertices() || m.maps().size() != q.num_arrows())
    throw std::invalid_argument("representation does not match the quiver");
  for (ArrowId a = 0; a < q.num_arrows(); ++a) {
    const auto& arr = q.arrow(a);
    if (m.map(a).rows() != m.dim(arr.target) || m.map(a).cols() != m.dim(arr.source))
      throw std::invalid_argument("matrix of arrow '" + arr.name + "' has the wrong shape");
  }
  for (const auto& r : pres.relations) {
    RatMatrix sum(m.dim(r.end(q)), m.dim(r.start()));
    for (const auto& t : r.terms) sum = sum + t.coefficient * path_action(q, m, t.path);
    if (!sum.is_zero()) throw std::invalid_argument("a relation does not act as zero");
  }
}

ModuleMorphism ModuleMorphism::zero(const Representation& from, const Representation& to) {
  ModuleMorphism f;
  for (VertexId v = 0; v < from.num_vertices(); ++v) f.maps.emplace_back(to.dim(v), from.dim(v));
  return f;
}

ModuleMorphism ModuleMorphism::identity(const Representation& m) {
  ModuleMorphism f;
  for (VertexId v = 0; v < m.num_vertices(); ++v) f.maps.push_back(RatMatrix::identity(m.dim(v)));
  return f;
}

bool ModuleMorphism::is_zero() const {
  return std::all_of(maps.begin(), maps.end(), [](const RatMatrix& m) { return m.is_zero(); });
}

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
  if (g.maps.size() != f.maps.size()) throw ShapeError("composition of morphisms over different quivers");
  ModuleMorphism h;
  h.maps.reserve(f.maps.size());
  for (std::size_t v = 0; v < f.maps.size(); ++v) h.maps.push_back(g.maps[v] * f.maps[v]);
  return h;
}

ModuleMorphism operator+(const ModuleMorphism& a, const ModuleMorphism& b) {
  ModuleMorphism h;
  for (std::size_t v = 0; v < a.maps.size(); ++v) h.maps.push_back(a.maps[v] + b.maps[v]);
  return h;
}

ModuleMorphism operator-(const ModuleMorphism& a, const ModuleMorphism& b) {
  ModuleMorphism h;
  for (std::size_t v = 0; v < a.maps.size(); ++v) h.maps.push_back(a.maps[v] - b.maps[v]);
  return h;
}

ModuleMorphism operator*(const Rational& s, const ModuleMorphism& f) {
  ModuleMorphism h;
  for (const auto& m : f.maps) h.maps.push_back(s * m);
  return h;
}

bool is_morphism(const Quiver& q, const Representation& from, const Representation& to, const ModuleMorphism& f) {
  if (f.maps.size() != q.num_vertices()) return false;
  for (VertexId v = 0; v < q.num_vertices(); ++v)
    if (f.maps[v].rows() != to.dim(v) || f.maps[v].cols() != from.dim(v)) return false;
  for (ArrowId a = 0; a < q.num_arrows(); ++a) {
    const auto& arr = q.arrow(a);
    if (!(f.maps[arr.target] * from.map(a) == to.map(a) * f.maps[arr.source])) return false;
  }
  return true;
}

std::vector<std::size_t> rank_vector(const ModuleMorphism& f) {
  std::vector<std::size_t> r;
  for (const auto& m : f.maps) r.push_back(rank(m));
  return r;
}

bool is_isomorphism(const ModuleMorphism& f) {
  for (const auto& m : f.maps)
    if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
  return true;
}

bool is_monomorphism(const ModuleMorphism& f) {
  for (const auto& m : f.maps)
    if (rank(m) != m.cols()) return false;
  return true;
}

bool is_epimorphism(const ModuleMorphism& f) {
  for (const auto& m : f.maps)
    if (rank(m) != m.rows()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Standard modules

Representation projective(const Algebra& a, VertexId v) {
  const PathAlgebra& pa = a.paths();
  const Quiver& q = a.quiver();
  std::vector<std::size_t> dims(q.num_vertices());
  for (VertexId u = 0; u < q.num_vertices(); ++u) dims[u] = pa.basis(v, u).size();
  std::vector<RatMatrix> maps;
  for (ArrowId al = 0; al < q.num_arrows(); ++al) {
    const auto& arr = q.arrow(al);
    const auto& from = pa.basis(v, arr.source);
    std::vector<Vector> cols;
    for (const auto& p : from) {
      Path e = p;
      e.arrows.push_back(al);
      cols.push_back(pa.normal_form(e));
    }
    maps.push_back(RatMatrix::from_columns(cols, dims[arr.target]));
  }
  return Representation(std::move(dims), std::move(maps));
}

Representation injective(const Algebra& a, VertexId v) { return dual(projective(a.opposite(), v)); }

Representation simple(const Quiver& q, VertexId v) {
  std::vector<std::size_t> dims(q.num_vertices(), 0);
  dims[v] = 1;
  std::vector<RatMatrix> maps;
  for (const auto& arr : q.arrows()) maps.emplace_back(dims[arr.target], dims[arr.source]);
  return Representation(std::move(dims), std::move(maps));
}

Representation dual(const Representation& m) {
  std::vector<RatMatrix> maps;
  for (const auto& x : m.maps()) maps.push_back(x.transpose());
  return Representation(m.dims(), std::move(maps));
}

ModuleMorphism dual(const ModuleMorphism& f) {
  ModuleMorphism d;
  for (const auto& x : f.maps) d.maps.push_back(x.transpose());
  return d;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  std::vector<std::size_t> dims(a.num_vertices());
  for (VertexId v = 0; v < dims.size(); ++v) dims[v] = a.dim(v) + b.dim(v);
  std::vector<RatMatrix> maps;
  for (std::size_t k = 0; k < a.maps().size(); ++k) {
    const RatMatrix& x = a.map(k);
    const RatMatrix& y = b.map(k);
    RatMatrix s(x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c) s(r, c) = x(r, c);
    for (std::size_t r = 0; r < y.rows(); ++r)
      for (std::size_t c = 0; c < y.cols(); ++c) s(x.rows() + r, x.cols() + c) = y(r, c);
    maps.push_back(std::move(s));
  }
  return Representation(std::move(dims), std::move(maps));
}

std::size_t composition_multiplicity(const Representation& m, VertexId v) { return m.dim(v); }

// ---------------------------------------------------------------------------
// Sub- and quotient modules

Subrepresentation subrepresentation(const Quiver& q, const Representation& m, const std::vector<Subspace>& parts) {
  std::vector<std::size_t> dims;
  for (const auto& s : parts) dims.push_back(s.dim());
  std::vector<RatMatrix> maps;
  for (ArrowId a = 0; a < q.num_arrows(); ++a) {
    const auto& arr = q.arrow(a);
    const Subspace& from = parts[arr.source];
    const Subspace& to = parts[arr.target];
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < from.dim(); ++i) {
      Vector img = m.map(a) * from.basis().row(i);
      if (!to.contains(img)) throw std::invalid_argument("subspaces are not closed under the arrows");
      cols.push_back(to.coordinates(img));
    }
    maps.push_back(RatMatrix::from_columns(cols, to.dim()));
  }
  ModuleMorphism inc;
  for (const auto& s : parts) inc.maps.push_back(s.basis().transpose());
  return {Representation(std::move(dims), std::move(maps)), std::move(inc)};
}

QuotientRepresentation quotient(const Quiver& q, const Representation& m, const std::vector<Subspace>& parts) {
  const std::size_t n = q.num_vertices();
  std::vector<std::vector<std::size_t>> free(n);
  std::vector<std::size_t> dims(n);
  ModuleMorphism proj;
  for (VertexId v = 0; v < n; ++v) {
    free[v] = parts[v].free_columns();
    dims[v] = free[v].size();
    RatMatrix p(dims[v], m.dim(v));
    for (std::size_t c = 0; c < m.dim(v); ++c) {
      Vector r = parts[v].reduce(unit(m.dim(v), c));
      for (std::size_t k = 0; k < dims[v]; ++k) p(k, c) = r[free[v][k]];
    }
    proj.maps.push_back(std::move(p));
  }
  std::vector<RatMatrix> maps;
  for (ArrowId a = 0; a < q.num_arrows(); ++a) {
    const auto& arr = q.arrow(a);
    RatMatrix x(dims[arr.target], dims[arr.source]);
    for (std::size_t k = 0; k < dims[arr.source]; ++k) {
      Vector img = proj.maps[arr.target] * m.map(a).column(free[arr.source][k]);
      for (std::size_t r = 0; r < img.size(); ++r) x(r, k) = img[r];
    }
    maps.push_back(std::move(x));
  }
  return {Representation(std::move(dims), std::move(maps)), std::move(proj)};
}

namespace {

std::vector<Subspace> radical_parts(const Quiver& q, const Representation& m) {
  std::vector<Subspace> parts;
  for (VertexId v = 0; v < q.num_vertices(); ++v) {
    Subspace s = Subspace::zero(m.dim(v));
    for (ArrowId a : q.arrows_to(v)) s = subspace_sum(s, column_space(m.map(a)));
    parts.push_back(std::move(s));
  }
  return parts;
}

}  // namespace

Subrepresentation radical_submodule(const Quiver& q, const Representation& m) {
  return subrepresentation(q, m, radical_parts(q, m));
}

QuotientRepresentation top(const Quiver& q, const Representation& m) { return quotient(q, m, radical_parts(q, m)); }

Subrepresentation socle(const Quiver& q, const Representation& m) {
  std::vector<Subspace> parts;
  for (VertexId v = 0; v < q.num_vertices(); ++v) {
    Subspace s = Subspace::full(m.dim(v));
    for (ArrowId a : q.arrows_from(v)) s = subspace_intersect(s, kernel(m.map(a)));
    parts.push_back(std::move(s));
  }
  return subrepresentation(q, m, parts);
}

Subrepresentation kernel(const Quiver& q, const Representation& m, const ModuleMorphism& f) {
  std::vector<Subspace> parts;
  for (VertexId v = 0; v < q.num_vertices(); ++v) parts.push_back(kernel(f.maps[v]));
  return subrepresentation(q, m, parts);
}

Subrepresentation image(const Quiver& q, const Representation& n, const ModuleMorphism& f) {
  std::vector<Subspace> parts;
  for (VertexId v = 0; v < q.num_vertices(); ++v) parts.push_back(column_space(f.maps[v]));
  return subrepresentation(q, n, parts);
}

QuotientRepresentation cokernel(const Quiver& q, const Representation& n, const ModuleMorphism& f) {
  std::vector<Subspace> parts;
  for (VertexId v = 0; v < q.num_vertices(); ++v) parts.push_back(column_space(f.maps[v]));
  return quotient(q, n, parts);
}

// ---------------------------------------------------------------------------
// Prepared modules: path actions and the minimal presentation

PreparedModule::PreparedModule(const Algebra& algebra, Representation m)
    : algebra_(algebra), rep_(std::move(m)), n_(algebra.num_vertices()) {
  const PathAlgebra& pa = algebra_.paths();
  const Quiver& q = algebra_.quiver();
  check_module(algebra_.presentation(), rep_);

  actions_.resize(n_ * n_);
  for (VertexId i = 0; i < n_; ++i)
    for (VertexId j = 0; j < n_; ++j)
      for (const auto& p : pa.basis(i, j)) actions_[i * n_ + j].push_back(path_action(q, rep_, p));

  // Top generators: standard vectors completing rad M.
  const auto rad = radical_parts(q, rep_);
  for (VertexId v = 0; v < n_; ++v)
    for (std::size_t c : rad[v].free_columns()) gens_.push_back({v, unit(rep_.dim(v), c)});

  // P_0 = (+)_k P_{a_k}, pi and a section at every vertex.
  const std::size_t g = gens_.size();
  cover_offsets_.assign(n_, std::vector<std::size_t>(g + 1, 0));
  for (VertexId v = 0; v < n_; ++v)
    for (std::size_t k = 0; k < g; ++k)
      cover_offsets_[v][k + 1] = cover_offsets_[v][k] + pa.basis(gens_[k].vertex, v).size();
  for (VertexId v = 0; v < n_; ++v) {
    RatMatrix pi(rep_.dim(v), cover_dim(v));
    for (std::size_t k = 0; k < g; ++k) {
      const auto& acts = actions(gens_[k].vertex, v);
      for (std::size_t c = 0; c < acts.size(); ++c) {
        Vector img = acts[c] * gens_[k].element;
        for (std::size_t r = 0; r < img.size(); ++r) pi(r, cover_offset(v, k) + c) = img[r];
      }
    }
    // Right inverse: invert pi on its pivot columns, zero elsewhere.
    const auto piv = rref(pi).pivots;
    if (piv.size() != rep_.dim(v)) throw Inconsistency("top generators do not generate the module");
    RatMatrix square(rep_.dim(v), rep_.dim(v));
    for (std::size_t r = 0; r < rep_.dim(v); ++r)
      for (std::size_t c = 0; c < piv.size(); ++c) square(r, c) = pi(r, piv[c]);
    const RatMatrix inv = *inverse(square);
    RatMatrix s(cover_dim(v), rep_.dim(v));
    for (std::size_t c = 0; c < piv.size(); ++c)
      for (std::size_t i = 0; i < rep_.dim(v); ++i) s(piv[c], i) = inv(c, i);
    pi_.push_back(std::move(pi));
    section_.push_back(std::move(s));
  }

  // Kernel K of pi and its minimal generators.
  std::vector<Subspace> ker(n_);
  for (VertexId v = 0; v < n_; ++v) ker[v] = kernel(pi_[v]);
  auto cover_arrow = [&](ArrowId al) {
    const auto& arr = q.arrow(al);
    RatMatrix x(cover_dim(arr.target), cover_dim(arr.source));
    for (std::size_t k = 0; k < g; ++k) {
      const auto& from = pa.basis(gens_[k].vertex, arr.source);
      for (std::size_t c = 0; c < from.size(); ++c) {
        Path e = from[c];
        e.arrows.push_back(al);
        Vector nf = pa.normal_form(e);
        for (std::size_t r = 0; r < nf.size(); ++r) x(cover_offset(arr.target, k) + r, cover_offset(arr.source, k) + c) = nf[r];
      }
    }
    return x;
  };
  std::vector<Subspace> rad_ker(n_);
  for (VertexId v = 0; v < n_; ++v) rad_ker[v] = Subspace::zero(cover_dim(v));
  for (ArrowId al = 0; al < q.num_arrows(); ++al) {
    const auto& arr = q.arrow(al);
    if (ker[arr.source].is_zero()) continue;
    RatMatrix x = cover_arrow(al);
    std::vector<Vector> imgs;
    for (std::size_t i = 0; i < ker[arr.source].dim(); ++i) imgs.push_back(x * ker[arr.source].basis().row(i));
    rad_ker[arr.target] = subspace_sum(rad_ker[arr.target], Subspace::span(imgs, cover_dim(arr.target)));
  }
  for (VertexId v = 0; v < n_; ++v) {
    Subspace running = rad_ker[v];
    for (std::size_t i = 0; i < ker[v].dim(); ++i) {
      auto row = ker[v].basis().row(i);
      if (running.contains(row)) continue;
      running = subspace_sum(running, Subspace::span({Vector(row.begin(), row.end())}, cover_dim(v)));
      Syzygy s{v, {}};
      for (std::size_t k = 0; k < g; ++k)
        s.components.emplace_back(row.begin() + cover_offset(v, k), row.begin() + cover_offset(v, k + 1));
      syzygies_.push_back(std::move(s));
    }
  }
}

RatMatrix PreparedModule::element_action(VertexId i, VertexId j, const Vector& coords) const {
  RatMatrix acc(rep_.dim(j), rep_.dim(i));
  const auto& acts = actions(i, j);
  for (std::size_t c = 0; c < coords.size(); ++c)
    if (!coords[c].is_zero()) acc = acc + coords[c] * acts[c];
  return acc;
}

// ---------------------------------------------------------------------------
// Hom spaces

HomSpace hom_space(const PreparedModule& m, const PreparedModule& n) {
  const Representation& M = m.rep();
  const Representation& N = n.rep();
  const std::size_t nv = M.num_vertices();
  HomSpace h;
  for (VertexId v = 0; v < nv; ++v) h.ambient_ += M.dim(v) * N.dim(v);
  h.target_dims_ = N.dims();
  h.source_dims_ = M.dims();

  const auto& gens = m.top_generators();
  h.gen_offsets_.assign(1, 0);
  for (const auto& g : gens) {
    h.gen_vertices_.push_back(g.vertex);
    h.gen_elements_.push_back(g.element);
    h.gen_offsets_.push_back(h.gen_offsets_.back() + N.dim(g.vertex));
  }
  const std::size_t gdim = h.gen_offsets_.back();

  // sum_k N(kappa_{l,k}) y_k = 0 for every kernel generator l
  std::size_t rows = 0;
  for (const auto& s : m.kernel_generators()) rows += N.dim(s.vertex);
  RatMatrix c(rows, gdim);
  std::size_t r0 = 0;
  for (const auto& s : m.kernel_generators()) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (is_zero_vector(s.components[k])) continue;
      RatMatrix act = n.element_action(gens[k].vertex, s.vertex, s.components[k]);
      for (std::size_t r = 0; r < act.rows(); ++r)
        for (std::size_t cc = 0; cc < act.cols(); ++cc) c(r0 + r, h.gen_offsets_[k] + cc) = act(r, cc);
    }
    r0 += N.dim(s.vertex);
  }
  h.space_ = m.kernel_generators().empty() ? Subspace::full(gdim) : kernel(c);

  for (std::size_t b = 0; b < h.space_.dim(); ++b) {
    auto y = h.space_.basis().row(b);
    ModuleMorphism f;
    for (VertexId v = 0; v < nv; ++v) {
      RatMatrix big(N.dim(v), m.cover_dim(v));
      for (std::size_t k = 0; k < gens.size(); ++k) {
        std::span<const Rational> yk = y.subspan(h.gen_offsets_[k], N.dim(gens[k].vertex));
        if (is_zero_vector(yk)) continue;
        const auto& acts = n.actions(gens[k].vertex, v);
        for (std::size_t cc = 0; cc < acts.size(); ++cc) {
          Vector img = acts[cc] * yk;
          for (std::size_t r = 0; r < img.size(); ++r) big(r, m.cover_offset(v, k) + cc) = img[r];
        }
      }
      f.maps.push_back(big * m.section(v));
    }
    h.basis_.push_back(std::move(f));
  }
  return h;
}

HomSpace hom_space(const Algebra& a, const Representation& m, const Representation& n) {
  return hom_space(PreparedModule(a, m), PreparedModule(a, n));
}

Vector HomSpace::generator_values(const ModuleMorphism& f) const {
  Vector out;
  out.reserve(gen_offsets_.back());
  for (std::size_t k = 0; k < gen_vertices_.size(); ++k) {
    Vector img = f.maps[gen_vertices_[k]] * gen_elements_[k];
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Vector HomSpace::coordinates(const ModuleMorphism& f) const {
  Vector g = generator_values(f);
  if (!space_.contains(g)) throw std::invalid_argument("not a morphism between these modules");
  return space_.coordinates(g);
}

ModuleMorphism HomSpace::morphism(std::span<const Rational> coords) const {
  if (coords.size() != dim()) throw ShapeError("coordinate vector has the wrong length");
  ModuleMorphism f;
  for (VertexId v = 0; v < target_dims_.size(); ++v) f.maps.emplace_back(target_dims_[v], source_dims_[v]);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) f = f + coords[i] * basis_[i];
  return f;
}

std::vector<std::vector<Vector>> endomorphism_structure(const HomSpace& end) {
  const std::size_t d = end.dim();
  std::vector<std::vector<Vector>> s(d, std::vector<Vector>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) s[i][j] = end.coordinates(compose(end[i], end[j]));
  return s;
}

Subspace endomorphism_radical(const HomSpace& end) { return algebra_radical(endomorphism_structure(end)); }

// ---------------------------------------------------------------------------
// Projective covers

ProjectiveCover projective_cover(const PreparedModule& m) {
  const Algebra& a = m.algebra();
  ProjectiveCover pc;
  Representation sum = Representation::zero(a.quiver());
  for (const auto& g : m.top_generators()) {
    pc.summands.push_back(g.vertex);
    sum = direct_sum(sum, projective(a, g.vertex));
  }
  pc.projective = std::move(sum);
  for (VertexId v = 0; v < a.num_vertices(); ++v) pc.epi.maps.push_back(m.cover_map(v));
  return pc;
}

MinimalPresentation minimal_presentation(const PreparedModule& m) {
  const Algebra& a = m.algebra();
  const Quiver& q = a.quiver();
  const PathAlgebra& pa = a.paths();
  MinimalPresentation mp;
  mp.cover = projective_cover(m);
  Representation p1 = Representation::zero(q);
  for (const auto& s : m.kernel_generators()) {
    mp.syzygy_summands.push_back(s.vertex);
    p1 = direct_sum(p1, projective(a, s.vertex));
  }
  // Generator e_{b_l} goes to kappa_l; a path p from b_l acts on it.
  for (VertexId v = 0; v < q.num_vertices(); ++v) {
    std::vector<Vector> cols;
    for (const auto& s : m.kernel_generators()) {
      Vector kappa = concat(s.components);
      for (const auto& p : pa.basis(s.vertex, v)) cols.push_back(path_action(q, mp.cover.projective, p) * kappa);
    }
    mp.map.maps.push_back(RatMatrix::from_columns(cols, mp.cover.projective.dim(v)));
  }
  mp.syzygy_cover = std::move(p1);
  return mp;
}

// ---------------------------------------------------------------------------
// Decomposition

namespace {

/// Characteristic polynomial coefficients c_0..c_n (monic) by Faddeev-LeVerrier.
Vector characteristic_polynomial(const RatMatrix& a) {
  const std::size_t n = a.rows();
  Vector c(n + 1);
  c[n] = 1;
  RatMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    RatMatrix am = a * mk;
    Rational tr;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<std::int64_t>(k));
  }
  return c;
}

std::vector<std::int64_t> divisors(std::int64_t x) {
  std::vector<std::int64_t> out;
  if (x < 0) x = -x;
  if (x == 0 || x > 1'000'000'000'000LL) return out;
  for (std::int64_t d = 1; d * d <= x; ++d) {
    if (x % d) continue;
    out.push_back(d);
    if (d != x / d) out.push_back(x / d);
  }
  return out;
}

std::vector<Rational> rational_roots(Vector poly) {
  std::vector<Rational> roots;
  while (poly.size() > 1 && poly.front().is_zero()) {
    poly.erase(poly.begin());
    if (std::find(roots.begin(), roots.end(), Rational(0)) == roots.end()) roots.push_back(0);
  }
  if (poly.size() <= 1) return roots;
  std::int64_t l = 1;
  for (const auto& c : poly) l = std::lcm(l, c.den());
  std::vector<std::int64_t> ints;
  for (const auto& c : poly) ints.push_back((c * Rational(l)).num());
  for (std::int64_t p : divisors(ints.front()))
    for (std::int64_t qd : divisors(ints.back()))
      for (int sign : {1, -1}) {
        const Rational x(sign * p, qd);
        try {
          Rational acc;
          for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
          if (acc.is_zero() && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
        } catch (const std::overflow_error&) {
        }
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

struct Split {
  Representation first;
  Representation second;
};

std::optional<Split> fitting_split(const Quiver& q, const Representation& m, const ModuleMorphism& f) {
  std::vector<Rational> eigen;
  for (const auto& block : f.maps) {
    if (block.rows() == 0) continue;
    for (const auto& r : rational_roots(characteristic_polynomial(block)))
      if (std::find(eigen.begin(), eigen.end(), r) == eigen.end()) eigen.push_back(r);
  }
  std::sort(eigen.begin(), eigen.end());
  const std::size_t power = *std::max_element(m.dims().begin(), m.dims().end());
  for (const auto& lambda : eigen) {
    ModuleMorphism g = f - lambda * ModuleMorphism::identity(m);
    ModuleMorphism gp = ModuleMorphism::identity(m);
    for (std::size_t i = 0; i < power; ++i) gp = compose(g, gp);
    auto ranks = rank_vector(gp);
    const std::size_t r = std::accumulate(ranks.begin(), ranks.end(), std::size_t{0});
    if (r == 0 || r == m.total_dim()) continue;
    return Split{kernel(q, m, gp).module, image(q, m, gp).module};
  }
  return std::nullopt;
}

/// Endomorphisms worth trying: the basis, then small combinations of pairs.
template <typename Visit>
bool for_each_candidate(const HomSpace& end, Visit&& visit) {
  const std::size_t d = end.dim();
  for (std::size_t i = 0; i < d; ++i)
    if (visit(end[i])) return true;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (int c : {1, -1, 2, -2, 3})
        if (visit(end[i] + Rational(c) * end[j])) return true;
  if (d > 2) {
    Vector coeffs(d);
    for (std::size_t i = 0; i < d; ++i) coeffs[i] = Rational(static_cast<std::int64_t>(i * i % 7) + 1);
    if (visit(end.morphism(coeffs))) return true;
  }
  return false;
}

std::optional<Split> find_split(const Algebra& a, const Representation& m, const HomSpace& end) {
  std::optional<Split> found;
  for_each_candidate(end, [&](const ModuleMorphism& f) {
    found = fitting_split(a.quiver(), m, f);
    return found.has_value();
  });
  return found;
}

}  // namespace

bool is_indecomposable(const Algebra& a, const Representation& m) {
  if (m.is_zero()) return false;
  HomSpace end = hom_space(a, m, m);
  const Subspace rad = endomorphism_radical(end);
  if (end.dim() - rad.dim() == 1) return true;
  if (find_split(a, m, end)) return false;
  throw SplitFieldNeeded("End(M)/rad End(M) has dimension " + std::to_string(end.dim() - rad.dim()) +
                         " but no idempotent was found over the rationals");
}

std::vector<Representation> decompose(const Algebra& a, const Representation& m) {
  if (m.is_zero()) return {};
  HomSpace end = hom_space(a, m, m);
  const Subspace rad = endomorphism_radical(end);
  if (end.dim() - rad.dim() == 1) return {m};
  auto split = find_split(a, m, end);
  if (!split)
    throw SplitFieldNeeded("End(M)/rad End(M) has dimension " + std::to_string(end.dim() - rad.dim()) +
                           " but no idempotent was found over the rationals");
  auto left = decompose(a, split->first);
  auto right = decompose(a, split->second);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

// ---------------------------------------------------------------------------
// Isomorphism

std::optional<ModuleMorphism> find_isomorphism_local(const HomSpace& hom) {
  for (const auto& f : hom.basis())
    if (is_isomorphism(f)) return f;
  return std::nullopt;
}

bool are_isomorphic(const Algebra& a, const Representation& m, const Representation& n) {
  if (m.dims() != n.dims()) return false;
  if (m.is_zero()) return true;
  HomSpace hom = hom_space(a, m, n);
  if (hom.dim() == 0) return false;
  if (find_isomorphism_local(hom)) return true;
  if (is_indecomposable(a, m)) return false;
  // Krull-Schmidt: compare the multisets of indecomposable summands.
  auto dm = decompose(a, m);
  auto dn = decompose(a, n);
  if (dm.size() != dn.size()) return false;
  std::vector<bool> used(dn.size(), false);
  for (const auto& x : dm) {
    bool matched = false;
    for (std::size_t j = 0; j < dn.size() && !matched; ++j) {
      if (used[j] || x.dims() != dn[j].dims()) continue;
      if (find_isomorphism_local(hom_space(a, x, dn[j]))) used[j] = matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

std::optional<ModuleMorphism> find_isomorphism(const Algebra& a, const Representation& m, const Representation& n) {
  if (!are_isomorphic(a, m, n)) return std::nullopt;
  if (m.is_zero()) return ModuleMorphism::zero(m, n);
  HomSpace hom = hom_space(a, m, n);
  std::optional<ModuleMorphism> found;
  for_each_candidate(hom, [&](const ModuleMorphism& f) {
    if (is_isomorphism(f)) found = f;
    return found.has_value();
  });
  if (found) return found;
  // The determinant of a generic element is a nonzero polynomial, so random
  // integer points miss its zero set quickly.
  std::mt19937_64 rng(0x5eed);
  for (std::int64_t bound = 8; bound <= 4096; bound *= 2) {
    std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
    for (int attempt = 0; attempt < 8; ++attempt) {
      Vector coeffs(hom.dim());
      for (auto& c : coeffs) c = dist(rng);
      ModuleMorphism f = hom.morphism(coeffs);
      if (is_isomorphism(f)) return f;
    }
  }
  throw Inconsistency("isomorphic modules but no isomorphism was found");
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const Quiver& q, const Representation& m) {
  nlohmann::json j;
  j["dimension_vector"] = m.dims();
  nlohmann::json arrows = nlohmann::json::object();
  for (ArrowId a = 0; a < q.num_arrows(); ++a) {
    nlohmann::json rows = nlohmann::json::array();
    const RatMatrix& x = m.map(a);
    for (std::size_t r = 0; r < x.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < x.cols(); ++c) row.push_back(x(r, c).to_string());
      rows.push_back(std::move(row));
    }
    arrows[q.arrow(a).name] = std::move(rows);
  }
  j["arrows"] = std::move(arrows);
  return j;
}

Representation representation_from_json(const Quiver& q, const nlohmann::json& j) {
  auto dims = j.at("dimension_vector").get<std::vector<std::size_t>>();
  if (dims.size() != q.num_vertices()) throw std::invalid_argument("dimension vector has the wrong length");
  std::vector<RatMatrix> maps;
  for (const auto& arr : q.arrows()) {
    const std::size_t rows = dims[arr.target];
    const std::size_t cols = dims[arr.source];
    RatMatrix x(rows, cols);
    const auto& jm = j.at("arrows").at(arr.name);
    if (jm.size() != rows) throw std::invalid_argument("matrix of '" + arr.name + "' has the wrong row count");
    for (std::size_t r = 0; r < rows; ++r) {
      if (jm[r].size() != cols) throw std::invalid_argument("matrix of '" + arr.name + "' has the wrong column count");
      for (std::size_t c = 0; c < cols; ++c) x(r, c) = Rational::parse(jm[r][c].get<std::string>());
    }
    maps.push_back(std::move(x));
  }
  return Representation(std::move(dims), std::move(maps));
}

}  // namespace nilpot
