#pragma once

// The finite-dimensional algebra kQ/I as a vector space of path classes.

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "nilpot/linalg.hpp"
#include "nilpot/quiver.hpp"

namespace nilpot {

inline constexpr std::size_t kDefaultMaxPathLength = 64;

/// Path classes modulo the ideal, grouped by (start, end).
///
/// All paths up to `max_len` that avoid every zero-relation are enumerated;
/// the span of the multiples u*r*q of the remaining relations is put in
/// reduced echelon form with longer paths first, and the non-pivot paths form
/// the basis. Paths longer than `max_len` are treated as zero, which is exact
/// whenever the ideal contains all paths of length max_len.
class PathAlgebra {
 public:
  explicit PathAlgebra(const AlgebraPresentation& pres, std::size_t max_len = kDefaultMaxPathLength);

  const AlgebraPresentation& presentation() const { return pres_; }
  const Quiver& quiver() const { return pres_.quiver; }

  /// Basis of e_j A e_i: the surviving paths from i to j.
  const std::vector<Path>& basis(VertexId i, VertexId j) const { return groups_[i * n_ + j].basis; }
  /// Coordinates of the class of p in basis(p.start, p.end).
  Vector normal_form(const Path& p) const;

  std::size_t dimension() const { return dimension_; }
  std::size_t longest_path() const { return longest_; }
  /// Smallest N with every path of length N in the ideal.
  std::size_t nilpotency_degree() const { return longest_ + 1; }

 private:
  struct Group {
    std::vector<Path> basis;
    std::map<Path, std::size_t> basis_index;
    std::map<Path, Vector> reduced;  // normal forms of the pivot paths
  };

  bool hits_zero_relation(const std::vector<ArrowId>& arrows) const;

  AlgebraPresentation pres_;
  std::size_t n_ = 0;
  std::size_t max_len_ = 0;
  std::vector<std::vector<ArrowId>> zero_paths_;
  std::vector<Group> groups_;
  std::size_t dimension_ = 0;
  std::size_t longest_ = 0;
};

/// An algebra together with its opposite; cheap to copy.
class Algebra {
 public:
  explicit Algebra(const AlgebraPresentation& pres, std::size_t max_len = kDefaultMaxPathLength);

  const PathAlgebra& paths() const { return flipped_ ? sides_->op : sides_->self; }
  const AlgebraPresentation& presentation() const { return paths().presentation(); }
  const Quiver& quiver() const { return paths().quiver(); }
  std::size_t num_vertices() const { return quiver().num_vertices(); }
  Algebra opposite() const { return Algebra(sides_, !flipped_); }

 private:
  struct Sides {
    PathAlgebra self;
    PathAlgebra op;
  };
  Algebra(std::shared_ptr<const Sides> sides, bool flipped) : sides_(std::move(sides)), flipped_(flipped) {}

  std::shared_ptr<const Sides> sides_;
  bool flipped_ = false;
};

struct AdmissibilityReport {
  std::size_t dimension = 0;
  std::size_t longest_path = 0;
  std::size_t nilpotency_degree = 0;
};

/// Throws NotAdmissible when a relation has a term of length < 2 or when a
/// path of length max_len survives.
AdmissibilityReport validate_admissible(const AlgebraPresentation& pres,
                                        std::size_t max_len = kDefaultMaxPathLength);

std::vector<Path> path_basis(const AlgebraPresentation& pres, VertexId i, VertexId j,
                             std::size_t max_len = kDefaultMaxPathLength);

}  // namespace nilpot
