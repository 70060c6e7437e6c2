#ifndef W0H1_EXACTLIN_HPP
#define W0H1_EXACTLIN_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "w0h1/rational.hpp"

namespace w0h1 {

using QVector = std::vector<Rational>;

/// Dense matrix over the rationals, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  bool operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

  QMatrix operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw computation_error("matrix product shape mismatch");
    QMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
      }
    return out;
  }

  QVector apply(const QVector& v) const {
    if (v.size() != cols_) throw computation_error("matrix-vector shape mismatch");
    QVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> entries_;
};

/// In-place reduction to reduced row echelon form; returns pivot columns.
/// Pivoting is first-nonzero in column order, so the result is canonical.
inline std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pr = row;
    while (pr < m.rows() && m.at(pr, col) == 0) ++pr;
    if (pr == m.rows()) continue;
    if (pr != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(row, j));
    const Rational inv = Rational(1) / m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      const Rational f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(QMatrix m) { return rref(m).size(); }

inline std::size_t nullity(const QMatrix& m) { return m.cols() - rank(m); }

/// Basis of the kernel {v : Mv = 0}, in the canonical form induced by the
/// reduced echelon form: one vector per free column, in column order, with
/// entry 1 at the free column.
inline std::vector<QVector> kernel_basis(QMatrix m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// dim of the common fixed space of the generators: ∩ ker(g − I).
inline std::size_t fixed_subspace_dim(const std::vector<QMatrix>& gens,
                                      std::size_t n) {
  for (const auto& g : gens)
    if (g.rows() != n || g.cols() != n)
      throw computation_error("fixed_subspace_dim: generator is not n x n");
  if (gens.empty()) return n;
  QMatrix stacked(gens.size() * n, n);
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        stacked.at(k * n + i, j) = gens[k].at(i, j) - (i == j ? 1 : 0);
  return nullity(stacked);
}

/// A bijection on {0,...,n-1}, stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto v : images_) {
      if (v >= images_.size() || seen[v])
        throw validation_error("permutation image array is not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
  }

  /// Cyclic shift i -> i + s mod n.
  static Permutation shift(std::size_t n, std::size_t s) {
    std::vector<std::size_t> im(n);
    for (std::size_t i = 0; i < n; ++i) im[i] = (i + s) % n;
    return Permutation(std::move(im));
  }

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }

  Permutation compose(const Permutation& q) const {  // (p∘q)(i) = p(q(i))
    if (size() != q.size()) throw computation_error("permutation size mismatch");
    std::vector<std::size_t> im(size());
    for (std::size_t i = 0; i < size(); ++i) im[i] = images_[q(i)];
    return Permutation(std::move(im));
  }

  Permutation inverse() const {
    std::vector<std::size_t> im(size());
    for (std::size_t i = 0; i < size(); ++i) im[images_[i]] = i;
    return Permutation(std::move(im));
  }

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

 private:
  std::vector<std::size_t> images_;
};

/// M[p(i)][i] = 1, so matrix(p∘q) = matrix(p)·matrix(q).
inline QMatrix permutation_matrix(const Permutation& p) {
  QMatrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m.at(p(i), i) = 1;
  return m;
}

/// Union-find over {0,...,n-1} with path halving.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
    return true;
  }

  std::size_t components() const { return components_; }

 private:
  std::vector<std::size_t> parent_, size_;
  std::size_t components_;
};

/// Number of orbits of the group generated by gens on {0,...,n-1}.
/// Orbits of the group equal components of the generator graph, so no
/// group enumeration is needed.
inline std::size_t orbit_count(std::size_t n, const std::vector<Permutation>& gens) {
  for (const auto& g : gens)
    if (g.size() != n) throw computation_error("orbit_count: generator size mismatch");
  UnionFind uf(n);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i) uf.unite(i, g(i));
  return uf.components();
}

/// Orbit label (index of the smallest representative's orbit, in increasing
/// order of smallest representative) for each point.
inline std::vector<std::size_t> orbit_labels(std::size_t n,
                                             const std::vector<Permutation>& gens) {
  UnionFind uf(n);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i) uf.unite(i, g(i));
  std::vector<std::size_t> label(n, n);
  std::size_t next = 0;
  std::vector<std::size_t> root_label(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = uf.find(i);
    if (root_label[r] == n) root_label[r] = next++;
    label[i] = root_label[r];
  }
  return label;
}

}  // namespace w0h1

#endif  // W0H1_EXACTLIN_HPP
