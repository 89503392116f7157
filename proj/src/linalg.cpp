#include "nilpot/linalg.hpp"

#include <algorithm>

namespace nilpot {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw ShapeError("matrix entry count does not match shape");
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  RatMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw ShapeError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector RatMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
  RatMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (!y.is_zero()) p(i, j) += x * y;
      }
    }
  return p;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix sum shape mismatch");
  RatMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix difference shape mismatch");
  RatMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix m = a;
  for (auto& x : m.data_) x *= s;
  return m;
}

Vector operator*(const RatMatrix& a, std::span<const Rational> v) {
  if (a.cols_ != v.size()) throw ShapeError("matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Rational acc;
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (!v[j].is_zero() && !a(i, j).is_zero()) acc += a(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

RatMatrix RatMatrix::vstack(const RatMatrix& top, const RatMatrix& bottom) {
  if (top.cols_ != bottom.cols_) throw ShapeError("vstack column mismatch");
  RatMatrix m(top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.data_.begin(), top.data_.end(), m.data_.begin());
  std::copy(bottom.data_.begin(), bottom.data_.end(), m.data_.begin() + top.data_.size());
  return m;
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block out of range");
  RatMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

Echelon rref(const RatMatrix& m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  std::vector<Vector> rows(nr);
  for (std::size_t r = 0; r < nr; ++r) rows[r].assign(m.row(r).begin(), m.row(r).end());

  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < nc && lead < nr; ++c) {
    std::size_t p = lead;
    while (p < nr && rows[p][c].is_zero()) ++p;
    if (p == nr) continue;
    std::swap(rows[p], rows[lead]);
    Vector& prow = rows[lead];
    const Rational inv = prow[c].inverse();
    for (std::size_t j = c; j < nc; ++j)
      if (!prow[j].is_zero()) prow[j] *= inv;
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == lead || rows[r][c].is_zero()) continue;
      const Rational f = rows[r][c];
      for (std::size_t j = c; j < nc; ++j)
        if (!prow[j].is_zero()) rows[r][j] -= f * prow[j];
    }
    pivots.push_back(c);
    ++lead;
  }
  rows.resize(lead);
  return {RatMatrix::from_rows(rows, nc), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

Subspace Subspace::full(std::size_t ambient) { return span(RatMatrix::identity(ambient)); }

Subspace Subspace::span(const RatMatrix& rows) {
  Subspace s(rows.cols());
  Echelon e = rref(rows);
  s.basis_ = std::move(e.reduced);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::span(const std::vector<Vector>& rows, std::size_t ambient) {
  return span(RatMatrix::from_rows(rows, ambient));
}

Vector Subspace::basis_vector(std::size_t i) const {
  auto r = basis_.row(i);
  return Vector(r.begin(), r.end());
}

Vector Subspace::reduce(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw ShapeError("vector does not match subspace ambient dimension");
  Vector w(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational f = w[pivots_[i]];
    if (f.is_zero()) continue;
    auto row = basis_.row(i);
    for (std::size_t j = pivots_[i]; j < ambient_; ++j)
      if (!row[j].is_zero()) w[j] -= f * row[j];
  }
  return w;
}

bool Subspace::contains(std::span<const Rational> v) const {
  Vector w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x.is_zero(); });
}

Vector Subspace::coordinates(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw ShapeError("vector does not match subspace ambient dimension");
  Vector c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw ShapeError("subspace ambient mismatch");
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  return Subspace::span(RatMatrix::vstack(a.basis(), b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw ShapeError("subspace ambient mismatch");
  const std::size_t n = a.ambient();
  if (a.is_zero() || b.is_zero()) return Subspace::zero(n);
  // x = sum s_i a_i = sum t_j b_j  <=>  [A^T | -B^T] (s, t) = 0
  const std::size_t ka = a.dim();
  const std::size_t kb = b.dim();
  RatMatrix m(n, ka + kb);
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t r = 0; r < n; ++r) m(r, i) = a.basis()(i, r);
  for (std::size_t j = 0; j < kb; ++j)
    for (std::size_t r = 0; r < n; ++r) m(r, ka + j) = -b.basis()(j, r);
  Subspace k = kernel(m);
  std::vector<Vector> vecs;
  for (std::size_t i = 0; i < k.dim(); ++i) {
    Vector x(n);
    for (std::size_t s = 0; s < ka; ++s) {
      const Rational& coef = k.basis()(i, s);
      if (coef.is_zero()) continue;
      for (std::size_t r = 0; r < n; ++r) x[r] += coef * a.basis()(s, r);
    }
    vecs.push_back(std::move(x));
  }
  return Subspace::span(vecs, n);
}

bool subspace_contains(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw ShapeError("subspace ambient mismatch");
  for (std::size_t i = 0; i < b.dim(); ++i)
    if (!a.contains(b.basis().row(i))) return false;
  return true;
}

Subspace kernel(const RatMatrix& m) {
  const std::size_t n = m.cols();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> vecs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector x(n);
    x[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = -e.reduced(i, f);
    vecs.push_back(std::move(x));
  }
  return Subspace::span(vecs, n);
}

Subspace image(const RatMatrix& m) { return Subspace::span(m.transpose()); }

std::optional<Vector> solve(const RatMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw ShapeError("solve: right-hand side length mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  Echelon e = rref(aug);
  Vector x(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;
    x[e.pivots[i]] = e.reduced(i, m.cols());
  }
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Rational();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const Rational inv = a(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const Rational f = a(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

Subspace algebra_radical(const std::vector<std::vector<Vector>>& structure) {
  const std::size_t n = structure.size();
  for (const auto& row : structure) {
    if (row.size() != n) throw ShapeError("structure table must be square");
    for (const auto& v : row)
      if (v.size() != n) throw ShapeError("structure constants have wrong length");
  }
  // (b_i b_j) b_k == b_i (b_j b_k)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs(n), rhs(n);
        for (std::size_t m = 0; m < n; ++m) {
          const Rational& a = structure[i][j][m];
          const Rational& b = structure[j][k][m];
          for (std::size_t t = 0; t < n; ++t) {
            if (!a.is_zero() && !structure[m][k][t].is_zero()) lhs[t] += a * structure[m][k][t];
            if (!b.is_zero() && !structure[i][m][t].is_zero()) rhs[t] += b * structure[i][m][t];
          }
        }
        if (lhs != rhs) throw std::invalid_argument("structure constants are not associative");
      }

  // tr(L_k) = sum_j c_{kj}^j
  Vector trace(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) trace[k] += structure[k][j][j];
  RatMatrix form(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational acc;
      for (std::size_t k = 0; k < n; ++k)
        if (!structure[i][j][k].is_zero()) acc += structure[i][j][k] * trace[k];
      form(i, j) = acc;
    }
  // x in rad  <=>  sum_i x_i form(i, j) = 0 for all j
  return kernel(form.transpose());
}

}  // namespace nilpot
