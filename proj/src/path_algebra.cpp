#include "nilpot/path_algebra.hpp"

#include <algorithm>
#include <string>

#include "nilpot/errors.hpp"

namespace nilpot {

namespace {

constexpr std::size_t kMaxEnumeratedPaths = 200000;

bool longer_first(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() > b.length();
  return a.arrows < b.arrows;
}

}  // namespace

bool PathAlgebra::hits_zero_relation(const std::vector<ArrowId>& arrows) const {
  for (const auto& z : zero_paths_)
    if (z.size() <= arrows.size() && std::equal(z.rbegin(), z.rend(), arrows.rbegin())) return true;
  return false;
}

PathAlgebra::PathAlgebra(const AlgebraPresentation& pres, std::size_t max_len)
    : pres_(pres), n_(pres.quiver.num_vertices()), max_len_(max_len), groups_(n_ * n_) {
  const Quiver& q = pres_.quiver;
  for (const auto& r : pres_.relations) {
    if (r.terms.empty()) throw NotAdmissible("empty relation");
    for (const auto& t : r.terms) {
      if (!is_valid_path(q, t.path)) throw NotAdmissible("relation term is not a path");
      if (t.path.length() < 2)
        throw NotAdmissible("relation term '" + to_traversal(q, t.path) + "' has length < 2");
    }
    if (r.is_zero_relation()) zero_paths_.push_back(r.terms.front().path.arrows);
  }

  // All paths avoiding the zero-relations, by length.
  std::vector<std::vector<Path>> by_group(n_ * n_);
  std::vector<Path> frontier;
  std::size_t count = 0;
  for (VertexId v = 0; v < n_; ++v) {
    frontier.push_back(Path{v, {}});
    by_group[v * n_ + v].push_back(frontier.back());
    ++count;
  }
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      for (ArrowId a : q.arrows_from(p.end(q))) {
        Path e = p;
        e.arrows.push_back(a);
        if (hits_zero_relation(e.arrows)) continue;
        if (++count > kMaxEnumeratedPaths)
          throw NotAdmissible("more than " + std::to_string(kMaxEnumeratedPaths) +
                              " paths survive; the ideal is probably not admissible");
        by_group[e.start * n_ + e.end(q)].push_back(e);
        next.push_back(std::move(e));
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::map<Path, std::size_t>> column(n_ * n_);
  for (std::size_t g = 0; g < by_group.size(); ++g) {
    std::sort(by_group[g].begin(), by_group[g].end(), longer_first);
    for (std::size_t c = 0; c < by_group[g].size(); ++c) column[g][by_group[g][c]] = c;
  }

  // Multiples q * r * u of every relation with at least two terms.
  std::vector<std::vector<Vector>> generators(n_ * n_);
  for (const auto& r : pres_.relations) {
    if (r.is_zero_relation()) continue;
    const VertexId a = r.start();
    const VertexId b = r.end(q);
    for (VertexId i = 0; i < n_; ++i) {
      for (const auto& before : by_group[i * n_ + a]) {
        for (VertexId j = 0; j < n_; ++j) {
          const std::size_t g = i * n_ + j;
          for (const auto& after : by_group[b * n_ + j]) {
            Vector row(by_group[g].size());
            bool nonzero = false;
            for (const auto& t : r.terms) {
              Path p = compose(q, compose(q, before, t.path), after);
              if (p.length() > max_len || hits_zero_relation(p.arrows)) continue;
              // A zero-relation strictly inside the path is caught by the lookup.
              auto it = column[g].find(p);
              if (it == column[g].end()) continue;
              row[it->second] += t.coefficient;
              nonzero = true;
            }
            if (nonzero) generators[g].push_back(std::move(row));
          }
        }
      }
    }
  }

  for (std::size_t g = 0; g < groups_.size(); ++g) {
    Group& grp = groups_[g];
    const auto& paths = by_group[g];
    std::vector<bool> is_pivot(paths.size(), false);
    Echelon e;
    if (!generators[g].empty()) {
      e = rref(RatMatrix::from_rows(generators[g], paths.size()));
      for (std::size_t c : e.pivots) is_pivot[c] = true;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = paths.size(); c-- > 0;)
      if (!is_pivot[c]) free_cols.push_back(c);  // shortest first
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
      grp.basis.push_back(paths[free_cols[k]]);
      grp.basis_index[paths[free_cols[k]]] = k;
      longest_ = std::max(longest_, paths[free_cols[k]].length());
    }
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      Vector nf(free_cols.size());
      for (std::size_t k = 0; k < free_cols.size(); ++k) nf[k] = -e.reduced(r, free_cols[k]);
      grp.reduced.emplace(paths[e.pivots[r]], std::move(nf));
    }
    dimension_ += grp.basis.size();
  }
  if (longest_ >= max_len)
    throw NotAdmissible("paths of length " + std::to_string(max_len) +
                        " survive; the ideal does not contain a power of the arrow ideal within the cap");
}

Vector PathAlgebra::normal_form(const Path& p) const {
  const Quiver& q = pres_.quiver;
  const Group& grp = groups_[p.start * n_ + p.end(q)];
  Vector out(grp.basis.size());
  if (p.length() > max_len_) return out;
  if (auto it = grp.basis_index.find(p); it != grp.basis_index.end()) {
    out[it->second] = 1;
    return out;
  }
  if (auto it = grp.reduced.find(p); it != grp.reduced.end()) return it->second;
  return out;  // contains a zero-relation, or too long to survive
}

Algebra::Algebra(const AlgebraPresentation& pres, std::size_t max_len)
    : sides_(std::make_shared<const Sides>(Sides{PathAlgebra(pres, max_len), PathAlgebra(pres.opposite(), max_len)})) {}

AdmissibilityReport validate_admissible(const AlgebraPresentation& pres, std::size_t max_len) {
  PathAlgebra a(pres, max_len);
  return {a.dimension(), a.longest_path(), a.nilpotency_degree()};
}

std::vector<Path> path_basis(const AlgebraPresentation& pres, VertexId i, VertexId j, std::size_t max_len) {
  return PathAlgebra(pres, max_len).basis(i, j);
}

}  // namespace nilpot
