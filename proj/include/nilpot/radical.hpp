#pragma once

// Powers of the radical of mod A restricted to a complete list of
// indecomposables, morphism lengths, and the nilpotency index.

#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "nilpot/artrans.hpp"
#include "nilpot/rep.hpp"

namespace nilpot {

/// Hom spaces between a fixed list of pairwise non-isomorphic indecomposables,
/// with composition in coordinates.
class ModuleCategory {
 public:
  ModuleCategory(const Algebra& a, std::vector<Representation> nodes);

  const Algebra& algebra() const { return algebra_; }
  std::size_t size() const { return prepared_.size(); }
  const Representation& module(std::size_t i) const { return prepared_[i].rep(); }
  const PreparedModule& prepared(std::size_t i) const { return prepared_[i]; }
  const HomSpace& hom(std::size_t x, std::size_t y) const { return homs_[x * size() + y]; }
  /// rad(X, Y): all of Hom for X != Y, rad End(X) on the diagonal.
  const Subspace& radical(std::size_t x, std::size_t y) const { return rad_[x * size() + y]; }

  /// Coordinates in Hom(X, Y) of g after f, for f in Hom(X, Z) and g in Hom(Z, Y).
  Vector compose(std::size_t x, std::size_t z, std::size_t y, const Vector& g, const Vector& f) const;
  /// Matrix taking Hom(Z, Y) coordinates g to Hom(X, Y) coordinates of g after f.
  RatMatrix precompose_matrix(std::size_t x, std::size_t z, std::size_t y, const Vector& f) const;

 private:
  Algebra algebra_;
  std::vector<PreparedModule> prepared_;
  std::vector<HomSpace> homs_;
  std::vector<Subspace> rad_;
};

inline constexpr std::size_t kAllPowers = std::numeric_limits<std::size_t>::max();

/// rad^n(X, Y) for every ordered pair of nodes, as subspaces of Hom(X, Y)
/// coordinates, computed from
///   rad^{n+1}(X, Y) = sum_Z rad^n(Z, Y) o rad(X, Z).
class RadicalFiltration {
 public:
  /// Stops after rad^{max_power} when given; otherwise until every pair is zero.
  explicit RadicalFiltration(const ModuleCategory& cat, std::size_t max_power = kAllPowers);

  const ModuleCategory& category() const { return *cat_; }
  /// True when the last computed power is zero everywhere.
  bool complete() const { return complete_; }
  /// Number of nonzero powers computed; rad^n for n > this is zero when complete().
  std::size_t num_layers() const { return layers_.size(); }
  /// Minimal m >= 1 with rad^m = 0 (requires complete()).
  std::size_t vanishing_power() const;

  /// rad^n(X, Y), n >= 1.
  const Subspace& layer(std::size_t n, std::size_t x, std::size_t y) const;
  std::size_t irr_dim(std::size_t x, std::size_t y) const;

  /// Largest n with f in rad^n(X, Y); 0 when f lies outside rad(X, Y).
  /// Throws std::invalid_argument for the zero morphism.
  std::size_t morphism_length(std::size_t x, std::size_t y, const Vector& coords) const;

 private:
  const ModuleCategory* cat_;
  std::vector<std::vector<Subspace>> layers_;  // layers_[n-1][x * N + y]
  std::vector<Subspace> zero_;
  bool complete_ = false;
};

/// Arrows X -> Y with dim Irr(X, Y) > 0, sorted by (X, Y). Needs rad^2.
std::vector<ARArrow> irreducible_arrows(const RadicalFiltration& filt);

/// Enumeration, Hom spaces and the full radical filtration of one algebra.
class Analysis {
 public:
  explicit Analysis(const AlgebraPresentation& pres, const EnumerationLimits& limits = {});

  const Algebra& algebra() const { return algebra_; }
  const AlgebraPresentation& presentation() const { return algebra_.presentation(); }
  const ARQuiver& ar() const { return ar_; }
  const ModuleCategory& category() const { return *cat_; }
  const RadicalFiltration& filtration() const { return *filt_; }

  /// r_a: length of the composite P_a -> S_a -> I_a.
  std::size_t r(VertexId a) const;
  /// Hom(P_a, I_a) coordinates of that composite.
  Vector canonical_composite(VertexId a) const;
  /// Canonical generators of Hom(P_a, S_a) and Hom(S_a, I_a) (each 1-dimensional).
  Vector canonical_epi(VertexId a) const;
  Vector canonical_mono(VertexId a) const;

  std::size_t node_of_projective(VertexId a) const { return ar_.projective_node[a]; }
  std::size_t node_of_injective(VertexId a) const { return ar_.injective_node[a]; }
  std::size_t node_of_simple(VertexId a) const { return ar_.simple_node[a]; }
  /// Node isomorphic to m.
  std::optional<std::size_t> find_node(const Representation& m) const;

 private:
  Algebra algebra_;
  ARQuiver ar_;
  std::unique_ptr<ModuleCategory> cat_;
  std::unique_ptr<RadicalFiltration> filt_;
  mutable std::map<VertexId, std::size_t> r_cache_;
};

enum class Method { Direct, VertexSet, ZeroRelations, OnePerRelation, Toupie, Auto };

std::string method_name(Method m);
std::optional<Method> parse_method(const std::string& s);

struct NilpotencyReport {
  std::string method;
  std::size_t r_A = 0;
  std::map<VertexId, std::size_t> per_vertex;
  std::vector<VertexId> vertex_set;
  std::size_t layers_computed = 0;
  std::vector<std::string> notes;
};

/// Throws MethodInapplicable naming the violated hypothesis, and
/// Inconsistency when a certified equality fails.
NilpotencyReport nilpotency_index(const Analysis& an, Method method);
/// Runs the method and, when verify is set, compares with the direct value.
NilpotencyReport nilpotency_index(const Analysis& an, Method method, bool verify);

nlohmann::json to_json(const Quiver& q, const NilpotencyReport& r);

}  // namespace nilpot
