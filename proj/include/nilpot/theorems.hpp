#pragma once

// Executable checks of the vertex-reduction results: each checker tests its
// hypotheses on the computed module category, states the conclusion it
// licenses, and verifies that conclusion against the computed r values.
// A verified conclusion that fails throws Inconsistency.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilpot/radical.hpp"

namespace nilpot {

enum class Comparison { None, BAtMostA, AAtMostB, Equal };

std::string comparison_string(Comparison c, const std::string& a, const std::string& b);

/// Outcome of comparing r_a and r_b along an arrow a -> b.
struct ComparisonFinding {
  std::string rule;  // "corollary", "factorization" or "zero-relations"
  VertexId a = 0;
  VertexId b = 0;
  std::size_t irr_projective = 0;  // dim Irr(P_b, P_a)
  std::size_t irr_injective = 0;   // dim Irr(I_b, I_a)
  std::size_t end_projective_b = 0;
  std::size_t end_injective_a = 0;
  std::optional<bool> factors_projective;  // Hom(P_b, P_a) = End(P_a) f_1
  std::optional<bool> factors_injective;   // Hom(I_b, I_a) = g_1 End(I_b)
  std::optional<bool> a_in_zero_relation;
  std::optional<bool> b_in_zero_relation;
  Comparison conclusion = Comparison::None;
  std::size_t r_a = 0;
  std::size_t r_b = 0;
};

/// Arrow a -> b: an irreducible map P_b -> P_a with End(P_b) = k gives
/// r_b <= r_a; an irreducible map I_b -> I_a with End(I_a) = k gives r_a <= r_b.
/// Throws std::invalid_argument when there is no arrow a -> b.
ComparisonFinding check_corollary(const Analysis& an, VertexId a, VertexId b);
std::vector<ComparisonFinding> check_corollary(const Analysis& an);

/// Arrow a -> b: when every map P_b -> P_a is mu f_1 with mu in End(P_a) and
/// f_1 irreducible, r_b <= r_a; dually every I_b -> I_a equal to g_1 mu with
/// mu in End(I_b) gives r_a <= r_b.
ComparisonFinding check_factorization(const Analysis& an, VertexId a, VertexId b);
std::vector<ComparisonFinding> check_factorization(const Analysis& an);

/// Whether Hom(x, y) = span{g o f_1 : g in Hom(y, y)} (precompose = true) or
/// span{f_1 o g : g in Hom(x, x)} for the given representative f_1.
bool factors_through_representative(const Analysis& an, std::size_t x, std::size_t y, const Vector& f1,
                                    bool precompose);

/// Monomial algebras: along every arrow a -> b, zero-relation membership
/// decides the comparison (a in, b out: r_b <= r_a; a out, b in: r_a <= r_b;
/// both out: equal; both in: nothing). Throws MethodInapplicable otherwise.
std::vector<ComparisonFinding> check_zero_relation_membership(const Analysis& an);

/// A reduction of r_A to a vertex set, certified against the direct value.
struct VertexSetCheck {
  NilpotencyReport report;
  std::size_t direct_r_A = 0;
  std::vector<std::string> certificates;
};

/// Monomial: max over zero-relation vertices equals the direct value.
VertexSetCheck check_zero_relation_vertices(const Analysis& an);
/// Monomial, every zero-relation vertex used once: equal r within each relation.
VertexSetCheck check_one_vertex_per_relation(const Analysis& an);
/// Three-branch toupie with one zero-relation: equal r on the zero-relation
/// vertices, the branch equalities and inequalities, and one representative
/// giving the direct value.
VertexSetCheck check_toupie(const Analysis& an);

struct LocalEndomorphisms {
  VertexId vertex = 0;
  bool in_zero_relation = false;
  std::size_t end_projective = 0;
  std::size_t end_injective = 0;
};

/// Monomial: dim End(P_b) = dim End(I_b) = 1 for every b outside the
/// zero-relation vertices. All vertices are reported.
std::vector<LocalEndomorphisms> check_local_endomorphisms(const Analysis& an);

/// For f: P_a -> I_b not factoring through S_a, some non-isomorphism
/// phi: I_b -> I_a has phi o f nonzero and through S_a (side "injective"),
/// and dually some non-isomorphism phi: P_b -> P_a has f o phi nonzero and
/// through S_b (side "projective").
struct SimpleFactorization {
  VertexId a = 0;
  VertexId b = 0;
  std::string side;
  std::size_t basis_index = 0;
  Vector witness;  // coordinates of phi in Hom
};
std::vector<SimpleFactorization> check_simple_factorization(const Analysis& an);

/// rad^{r_a}(P_a, I_a) is spanned by the composite through S_a, so every
/// other map P_a -> I_a is shorter; and the composite's length is the sum of
/// the lengths of P_a -> S_a and S_a -> I_a.
struct CompositeLength {
  VertexId vertex = 0;
  std::size_t r = 0;
  std::size_t epi_length = 0;
  std::size_t mono_length = 0;
  std::size_t top_layer_dim = 0;  // dim rad^{r_a}(P_a, I_a)
};
std::vector<CompositeLength> check_composite_lengths(const Analysis& an);

/// The module M with k^2 at z_i on the zero-relation branch and its cycle
/// rho: M -> S_{z_i} -> M, a composite of 2(n_3 + 1) non-isomorphisms.
struct ToupieWitness {
  std::size_t i = 0;
  VertexId vertex = 0;
  Representation module;
  std::size_t end_dim = 0;
  std::vector<Representation> epi_chain;   // M, ..., S_{z_i}
  std::vector<Representation> mono_chain;  // S_{z_i}, ..., M
  ModuleMorphism rho;
  ModuleMorphism phi;  // P_{z_i} -> M, mono, rho o phi != 0
  ModuleMorphism psi;  // M -> I_{z_i}, epi, psi o rho != 0
  std::size_t steps = 0;
  std::size_t node = 0;
  std::size_t length = 0;  // morphism length of rho
};

/// i is 1-based along the zero-relation branch with j <= i <= j + t - 1.
/// Throws MethodInapplicable for a wrong shape or index, Inconsistency when
/// an invariant fails.
ToupieWitness build_toupie_witness(const Analysis& an, std::size_t i);
std::vector<ToupieWitness> build_toupie_witnesses(const Analysis& an);

nlohmann::json to_json(const Quiver& q, const ComparisonFinding& f);
nlohmann::json to_json(const Quiver& q, const VertexSetCheck& c);
nlohmann::json to_json(const Quiver& q, const LocalEndomorphisms& e);
nlohmann::json to_json(const Quiver& q, const SimpleFactorization& s);
nlohmann::json to_json(const Quiver& q, const CompositeLength& c);
nlohmann::json to_json(const Quiver& q, const ToupieWitness& w);

}  // namespace nilpot
