#pragma once

// Auslander-Reiten translate and enumeration of indecomposable modules.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nilpot/rep.hpp"

namespace nilpot {

/// Tr M as a module over the opposite algebra: the cokernel of
/// Hom(P_0, A) -> Hom(P_1, A) for the minimal presentation of M.
Representation transpose(const Algebra& a, const Representation& m);

/// D Tr M; nullopt iff M is projective.
std::optional<Representation> ar_translate(const Algebra& a, const Representation& m);
/// Tr D M; nullopt iff M is injective.
std::optional<Representation> ar_translate_inverse(const Algebra& a, const Representation& m);

/// Middle term E of the almost split sequence 0 -> tau Y -> E -> Y -> 0,
/// built as a pushout along a class in the socle of Ext^1(Y, tau Y).
Representation almost_split_middle_term(const Algebra& a, const Representation& y, const Representation& tau_y);

bool is_projective_module(const Algebra& a, const Representation& m);
bool is_injective_module(const Algebra& a, const Representation& m);

struct EnumerationLimits {
  std::size_t max_modules = 10000;
  std::size_t max_total_dim = 10000;  // summed over all modules found plus the candidate
  std::size_t max_module_dim = 500;   // any single module
};

struct ARNode {
  Representation module;
  std::string label;
  bool projective = false;
  bool injective = false;
  std::optional<std::size_t> tau;          // node index of tau(X)
  std::optional<std::size_t> tau_inverse;  // node index of tau^{-1}(X)
};

struct ARArrow {
  std::size_t from;
  std::size_t to;
  std::size_t irr_dim;  // dim rad(X,Y)/rad^2(X,Y)
};

struct ARQuiver {
  std::vector<ARNode> nodes;
  std::vector<ARArrow> arrows;                 // sorted by (from, to)
  std::vector<std::size_t> projective_node;    // vertex -> node of P_a
  std::vector<std::size_t> injective_node;     // vertex -> node of I_a
  std::vector<std::size_t> simple_node;        // vertex -> node of S_a

  std::size_t irr_dim(std::size_t from, std::size_t to) const;
};

/// Closure of the projectives, injectives and simples under tau, tau^{-1}
/// and almost split neighbours. Every node is checked to be indecomposable
/// and new. Throws LimitsExceeded when the limits are hit.
ARQuiver enumerate_ar_nodes(const Algebra& a, const EnumerationLimits& limits = {});
std::vector<Representation> enumerate_indecomposables(const Algebra& a, const EnumerationLimits& limits = {});

/// Enumeration plus arrows weighted by dim Irr(X, Y). Throws Inconsistency
/// when check_closure reports a defect.
ARQuiver ar_quiver(const Algebra& a, const EnumerationLimits& limits = {});

/// A mismatch found by check_closure.
struct ClosureDefect {
  std::size_t node;
  std::string what;
};

/// Mesh identity d(tau Y) + d(Y) = sum_Z dim Irr(Z, Y) d(Z) at non-projective
/// Y, and its boundary forms sum_Z dim Irr(Z, P) d(Z) = d(rad P) and
/// sum_Z dim Irr(I, Z) d(Z) = d(I / soc I). Empty result means every almost
/// split sequence is accounted for, so no indecomposable is missing.
std::vector<ClosureDefect> check_closure(const Algebra& a, const ARQuiver& ar);

/// Deterministic DOT rendering: nodes sorted by dimension vector then label,
/// dashed edges for the translate.
std::string to_dot(const Quiver& q, const ARQuiver& ar);

std::string dimension_vector_string(const Representation& m);

}  // namespace nilpot
