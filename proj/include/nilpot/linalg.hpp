#pragma once

// Exact dense linear algebra over the rationals.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilpot/rational.hpp"

namespace nilpot {

using Vector = std::vector<Rational>;

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Row-major dense matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RatMatrix identity(std::size_t n);
  /// Builds a matrix from a list of equally long rows.
  static RatMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  /// Builds a matrix whose columns are the given vectors.
  static RatMatrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;
  const std::vector<Rational>& entries() const { return data_; }

  bool is_zero() const;
  RatMatrix transpose() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
  friend Vector operator*(const RatMatrix& a, std::span<const Rational> v);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

  /// Stacks blocks vertically (all must have the same column count).
  static RatMatrix vstack(const RatMatrix& top, const RatMatrix& bottom);
  /// Copies a rectangular block.
  RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form with zero rows dropped.
struct Echelon {
  RatMatrix reduced;                // rank x cols
  std::vector<std::size_t> pivots;  // pivot column of each row
};

Echelon rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// A linear subspace of Q^n stored by its canonical reduced echelon basis,
/// so two equal subspaces compare equal as values.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace full(std::size_t ambient);
  static Subspace span(const RatMatrix& rows);
  static Subspace span(const std::vector<Vector>& rows, std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return basis_.rows() == 0; }
  const RatMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const;

  bool contains(std::span<const Rational> v) const;
  /// Coordinates of v with respect to basis(); v must lie in the subspace.
  Vector coordinates(std::span<const Rational> v) const;
  /// Reduces v modulo the subspace (zeroes its pivot entries).
  Vector reduce(std::span<const Rational> v) const;
  /// Ambient coordinates not used as pivots: a canonical complement basis.
  std::vector<std::size_t> free_columns() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  RatMatrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
/// True iff b is a subspace of a.
bool subspace_contains(const Subspace& a, const Subspace& b);

/// Null space {x : m x = 0} as a subspace of Q^cols.
Subspace kernel(const RatMatrix& m);
/// Column space of m as a subspace of Q^rows.
Subspace image(const RatMatrix& m);
/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const RatMatrix& m, std::span<const Rational> b);
std::optional<RatMatrix> inverse(const RatMatrix& m);
Rational determinant(const RatMatrix& m);

/// Jacobson radical of a finite-dimensional associative Q-algebra.
///
/// structure[i][j] holds the coordinates of b_i * b_j in the basis b_0..b_{n-1}.
/// Uses the trace form (x, y) -> tr(L_{xy}), whose kernel is the radical in
/// characteristic zero. Throws std::invalid_argument when the table is not
/// associative.
Subspace algebra_radical(const std::vector<std::vector<Vector>>& structure);

}  // namespace nilpot
