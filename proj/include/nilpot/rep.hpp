#pragma once

// Finite-dimensional modules as quiver representations.
//
// Convention: the matrix of an arrow alpha: s -> t has shape d(t) x d(s) and
// maps the s-component to the t-component. The action of a path a_1*...*a_m
// (traversal order) is M_{a_m} ... M_{a_1}.

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "nilpot/linalg.hpp"
#include "nilpot/path_algebra.hpp"
#include "nilpot/quiver.hpp"

namespace nilpot {

class Representation {
 public:
  Representation() = default;
  Representation(std::vector<std::size_t> dims, std::vector<RatMatrix> maps)
      : dims_(std::move(dims)), maps_(std::move(maps)) {}
  /// The zero module of a quiver.
  static Representation zero(const Quiver& q);

  std::size_t num_vertices() const { return dims_.size(); }
  std::size_t dim(VertexId v) const { return dims_[v]; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  const RatMatrix& map(ArrowId a) const { return maps_[a]; }
  const std::vector<RatMatrix>& maps() const { return maps_; }

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::vector<RatMatrix> maps_;
};

/// Throws std::invalid_argument unless the shapes match the quiver and every
/// relation acts as zero.
void check_module(const AlgebraPresentation& pres, const Representation& m);

RatMatrix path_action(const Quiver& q, const Representation& m, const Path& p);

/// Per-vertex linear maps f_v : M_v -> N_v.
struct ModuleMorphism {
  std::vector<RatMatrix> maps;

  static ModuleMorphism zero(const Representation& from, const Representation& to);
  static ModuleMorphism identity(const Representation& m);

  bool is_zero() const;
  friend bool operator==(const ModuleMorphism&, const ModuleMorphism&) = default;
};

/// g after f.
ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f);
ModuleMorphism operator+(const ModuleMorphism& a, const ModuleMorphism& b);
ModuleMorphism operator-(const ModuleMorphism& a, const ModuleMorphism& b);
ModuleMorphism operator*(const Rational& s, const ModuleMorphism& f);

bool is_morphism(const Quiver& q, const Representation& from, const Representation& to, const ModuleMorphism& f);
bool is_isomorphism(const ModuleMorphism& f);
bool is_monomorphism(const ModuleMorphism& f);
bool is_epimorphism(const ModuleMorphism& f);
/// Dimension vector of the image.
std::vector<std::size_t> rank_vector(const ModuleMorphism& f);

/// A module with cached path actions and a minimal projective presentation
///   P_1 -> P_0 -> M -> 0,  P_0 = (+)_k P_{a_k},  P_1 = (+)_l P_{b_l}.
class PreparedModule {
 public:
  struct Generator {
    VertexId vertex;
    Vector element;  // in M_vertex
  };
  struct Syzygy {
    VertexId vertex;
    std::vector<Vector> components;  // component k in the basis of paths a_k -> vertex
  };

  PreparedModule(const Algebra& algebra, Representation m);

  const Algebra& algebra() const { return algebra_; }
  const Representation& rep() const { return rep_; }

  /// Matrices of the basis paths from i to j, in the order of PathAlgebra::basis(i, j).
  const std::vector<RatMatrix>& actions(VertexId i, VertexId j) const { return actions_[i * n_ + j]; }
  /// Action of an element of e_j A e_i given by basis coordinates.
  RatMatrix element_action(VertexId i, VertexId j, const Vector& coords) const;

  /// Minimal generators: a basis of M/rad M lifted to M.
  const std::vector<Generator>& top_generators() const { return gens_; }
  /// Minimal generators of the kernel of P_0 -> M.
  const std::vector<Syzygy>& kernel_generators() const { return syzygies_; }
  bool is_projective() const { return syzygies_.empty(); }

  /// Columns indexed by (k, path in basis(a_k, v)).
  const RatMatrix& cover_map(VertexId v) const { return pi_[v]; }
  /// Right inverse of cover_map(v).
  const RatMatrix& section(VertexId v) const { return section_[v]; }
  /// Offset of the block of generator k inside (P_0)_v.
  std::size_t cover_offset(VertexId v, std::size_t k) const { return cover_offsets_[v][k]; }
  std::size_t cover_dim(VertexId v) const { return cover_offsets_[v].back(); }

 private:
  Algebra algebra_;
  Representation rep_;
  std::size_t n_ = 0;
  std::vector<std::vector<RatMatrix>> actions_;
  std::vector<Generator> gens_;
  std::vector<Syzygy> syzygies_;
  std::vector<std::vector<std::size_t>> cover_offsets_;  // per vertex, k -> offset, plus total
  std::vector<RatMatrix> pi_;
  std::vector<RatMatrix> section_;
};

/// Basis of Hom(M, N).
///
/// A morphism is determined by the images of the top generators of M, so
/// Hom(M, N) is stored as a subspace of G = (+)_k N_{a_k}: the vectors killed
/// by every kernel generator of M. Coordinates are read off at the pivots.
class HomSpace {
 public:
  HomSpace() = default;

  std::size_t dim() const { return basis_.size(); }
  const std::vector<ModuleMorphism>& basis() const { return basis_; }
  const ModuleMorphism& operator[](std::size_t i) const { return basis_[i]; }
  /// Sum over v of d_M(v) * d_N(v).
  std::size_t ambient_dim() const { return ambient_; }

  /// Images of the top generators of M.
  Vector generator_values(const ModuleMorphism& f) const;
  /// Coordinates of a morphism M -> N.
  Vector coordinates(const ModuleMorphism& f) const;
  /// Coordinates from a vector of generator images.
  Vector coordinates_of_values(std::span<const Rational> values) const { return space_.coordinates(values); }
  ModuleMorphism morphism(std::span<const Rational> coords) const;

  const Subspace& generator_space() const { return space_; }
  const std::vector<VertexId>& generator_vertices() const { return gen_vertices_; }
  /// Offset of generator k inside G (size = gen count + 1).
  const std::vector<std::size_t>& generator_offsets() const { return gen_offsets_; }

 private:
  friend HomSpace hom_space(const PreparedModule& m, const PreparedModule& n);

  std::vector<ModuleMorphism> basis_;
  std::size_t ambient_ = 0;
  Subspace space_;
  std::vector<VertexId> gen_vertices_;
  std::vector<Vector> gen_elements_;
  std::vector<std::size_t> gen_offsets_;
  std::vector<std::size_t> source_dims_;
  std::vector<std::size_t> target_dims_;
};

HomSpace hom_space(const PreparedModule& m, const PreparedModule& n);
HomSpace hom_space(const Algebra& a, const Representation& m, const Representation& n);

/// Structure constants of End(M) in the given basis: entry [i][j] holds the
/// coordinates of basis[i] after basis[j].
std::vector<std::vector<Vector>> endomorphism_structure(const HomSpace& end);
/// rad End(M) as a subspace of End(M) coordinates.
Subspace endomorphism_radical(const HomSpace& end);

Representation projective(const Algebra& a, VertexId v);
Representation injective(const Algebra& a, VertexId v);
Representation simple(const Quiver& q, VertexId v);
/// Vector space dual: a module over the opposite quiver (same arrow ids).
Representation dual(const Representation& m);
ModuleMorphism dual(const ModuleMorphism& f);

Representation direct_sum(const Representation& a, const Representation& b);

struct Subrepresentation {
  Representation module;
  ModuleMorphism inclusion;
};
struct QuotientRepresentation {
  Representation module;
  ModuleMorphism projection;
};

/// Throws std::invalid_argument if the subspaces are not closed under the arrows.
Subrepresentation subrepresentation(const Quiver& q, const Representation& m, const std::vector<Subspace>& parts);
QuotientRepresentation quotient(const Quiver& q, const Representation& m, const std::vector<Subspace>& parts);

Subrepresentation radical_submodule(const Quiver& q, const Representation& m);
QuotientRepresentation top(const Quiver& q, const Representation& m);
Subrepresentation socle(const Quiver& q, const Representation& m);
Subrepresentation kernel(const Quiver& q, const Representation& m, const ModuleMorphism& f);
Subrepresentation image(const Quiver& q, const Representation& n, const ModuleMorphism& f);
QuotientRepresentation cokernel(const Quiver& q, const Representation& n, const ModuleMorphism& f);

std::size_t composition_multiplicity(const Representation& m, VertexId v);

struct ProjectiveCover {
  Representation projective;
  std::vector<VertexId> summands;  // P_0 = (+) P_{summands[k]}
  ModuleMorphism epi;
};
ProjectiveCover projective_cover(const PreparedModule& m);

struct MinimalPresentation {
  ProjectiveCover cover;
  Representation syzygy_cover;     // P_1
  std::vector<VertexId> syzygy_summands;
  ModuleMorphism map;              // P_1 -> P_0
};
MinimalPresentation minimal_presentation(const PreparedModule& m);

/// dim End(M) - dim rad End(M) == 1. Throws SplitFieldNeeded when End(M)
/// is not local but no idempotent is found over the rationals.
bool is_indecomposable(const Algebra& a, const Representation& m);
/// Krull-Schmidt decomposition into indecomposable summands.
std::vector<Representation> decompose(const Algebra& a, const Representation& m);

std::optional<ModuleMorphism> find_isomorphism(const Algebra& a, const Representation& m, const Representation& n);
bool are_isomorphic(const Algebra& a, const Representation& m, const Representation& n);
/// Faster test when M is known to be indecomposable: End(M) is local, so
/// M and N are isomorphic iff some basis element of Hom(M, N) is invertible.
std::optional<ModuleMorphism> find_isomorphism_local(const HomSpace& hom);

/// {"dimension_vector": [...], "arrows": {name: [[ "p/q", ...], ...]}}
nlohmann::json to_json(const Quiver& q, const Representation& m);
Representation representation_from_json(const Quiver& q, const nlohmann::json& j);

}  // namespace nilpot
