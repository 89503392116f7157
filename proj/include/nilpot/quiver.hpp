#pragma once

// Quivers, paths, relations and bound quiver presentations.
//
// Paths are stored in traversal order: arrows[0] is traversed first. The
// right-to-left convention "a_m ... a_1" is available for display through
// to_right_to_left().

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nilpot/rational.hpp"

namespace nilpot {

using VertexId = std::size_t;
using ArrowId = std::size_t;

struct Arrow {
  std::string name;
  VertexId source;
  VertexId target;
};

class Quiver {
 public:
  Quiver() = default;

  VertexId add_vertex(std::string name);
  ArrowId add_arrow(std::string name, VertexId source, VertexId target);

  std::size_t num_vertices() const { return vertex_names_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<ArrowId> find_arrow(std::string_view name) const;

  const std::vector<ArrowId>& arrows_from(VertexId v) const { return out_.at(v); }
  const std::vector<ArrowId>& arrows_to(VertexId v) const { return in_.at(v); }

  /// Same vertices, every arrow reversed (names kept).
  Quiver opposite() const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<ArrowId>> out_;
  std::vector<std::vector<ArrowId>> in_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, ArrowId> arrow_index_;
};

/// A path; the empty arrow list is the trivial path at `start`.
struct Path {
  VertexId start = 0;
  std::vector<ArrowId> arrows;

  std::size_t length() const { return arrows.size(); }
  bool is_trivial() const { return arrows.empty(); }
  VertexId end(const Quiver& q) const { return arrows.empty() ? start : q.arrow(arrows.back()).target; }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// Checks that consecutive arrows compose.
bool is_valid_path(const Quiver& q, const Path& p);
/// First `first`, then `then`; throws std::invalid_argument when they do not meet.
Path compose(const Quiver& q, const Path& first, const Path& then);
/// Same path read in the opposite quiver.
Path reversed(const Quiver& q, const Path& p);
/// "a*b*c" in traversal order, "e_v" for trivial paths.
std::string to_traversal(const Quiver& q, const Path& p);
/// Right-to-left notation "c b a".
std::string to_right_to_left(const Quiver& q, const Path& p);

struct Term {
  Rational coefficient;
  Path path;
};

/// Linear combination of parallel paths lying in the ideal.
struct Relation {
  std::vector<Term> terms;

  bool is_zero_relation() const { return terms.size() == 1; }
  VertexId start() const { return terms.front().path.start; }
  VertexId end(const Quiver& q) const { return terms.front().path.end(q); }
};

/// A quiver together with generators of an admissible ideal; the algebra kQ/I
/// over the rationals.
struct AlgebraPresentation {
  Quiver quiver;
  std::vector<Relation> relations;

  AlgebraPresentation opposite() const;
};

/// Parses the text format:
///   vertex 1 2 3
///   arrow alpha 1 2
///   relation alpha*beta*alpha
///   relation b1*b2 - 3/2*g1*g2
/// `#` starts a comment. Paths are written in traversal order.
AlgebraPresentation parse_presentation(std::string_view text);
AlgebraPresentation load_presentation(const std::string& path);
/// Inverse of parse_presentation (up to whitespace and comments).
std::string format_presentation(const AlgebraPresentation& pres);

struct SinksAndSources {
  std::set<VertexId> sinks;
  std::set<VertexId> sources;
  std::set<VertexId> inner;  // neither sink nor source
};

SinksAndSources sinks_and_sources(const Quiver& q);

/// Vertices s(a_i), i >= 2, of every zero-relation a_m ... a_1.
std::set<VertexId> zero_relation_vertices(const AlgebraPresentation& pres);

struct ToupieBranch {
  std::vector<ArrowId> arrows;     // from the source to the sink
  std::vector<VertexId> interior;  // vertices strictly between
};

/// Parameters of the three-branch shape with one zero-relation branch
/// (arrows c_1 .. c_{n+1}, relation c_{t+j} ... c_j) and a commutativity
/// relation between the two remaining branches.
struct ToupieRelationPattern {
  std::size_t zero_branch = 0;                    // index into branches
  std::size_t commuting_branches[2] = {0, 0};
  std::size_t j = 0;                              // 1-based first arrow of the relation
  std::size_t t = 0;                              // relation has t + 1 arrows
  std::size_t n1 = 0, n2 = 0, n3 = 0;             // interior sizes: commuting, commuting, zero
};

struct ToupieShape {
  VertexId source = 0;
  VertexId sink = 0;
  std::vector<ToupieBranch> branches;
  std::optional<ToupieRelationPattern> pattern;
};

struct Classification {
  bool is_monomial = false;
  std::optional<ToupieShape> toupie;
};

Classification classify(const AlgebraPresentation& pres);

}  // namespace nilpot
