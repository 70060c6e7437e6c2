#ifndef W0H1_KUNNETH_HPP
#define W0H1_KUNNETH_HPP

#include <cstddef>

#include "w0h1/exactlin.hpp"

namespace w0h1 {

/// A cyclic group action on a rational cohomology space, given by the matrix
/// of a chosen generator.
struct CyclicAction {
  std::size_t order = 1;  // e >= 1
  QMatrix generator;

  std::size_t dim() const { return generator.rows(); }

  void validate() const {
    if (order < 1) throw validation_error("cyclic action: order must be >= 1");
    if (generator.rows() != generator.cols())
      throw validation_error("cyclic action: generator must be square");
    QMatrix p = QMatrix::identity(generator.rows());
    for (std::size_t k = 0; k < order; ++k) p = p * generator;
    if (!(p == QMatrix::identity(generator.rows())))
      throw validation_error("cyclic action: generator^order != identity");
  }
};

/// dim of the fixed subspace of the action.
inline std::size_t invariant_dim(const CyclicAction& a) {
  a.validate();
  return fixed_subspace_dim({a.generator}, a.dim());
}

/// Rank of the averaging projector (1/e) * sum of generator powers. Equals
/// invariant_dim; kept as an independent cross-check route.
inline std::size_t averaging_projector_rank(const CyclicAction& a) {
  a.validate();
  const std::size_t n = a.dim();
  QMatrix sum(n, n);
  QMatrix power = QMatrix::identity(n);
  for (std::size_t k = 0; k < a.order; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sum.at(i, j) += power.at(i, j);
    power = power * a.generator;
  }
  const Rational inv(1, static_cast<long>(a.order));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sum.at(i, j) *= inv;
  return rank(sum);
}

/// H^1 of the diagonal cyclic quotient of a product: the invariant parts of
/// the two factors add up.
inline std::size_t quotient_h1_dim(const CyclicAction& act_x,
                                   const CyclicAction& act_z) {
  if (act_x.order != act_z.order)
    throw validation_error("quotient_h1_dim: the two actions must share one order");
  return invariant_dim(act_x) + invariant_dim(act_z);
}

}  // namespace w0h1

#endif  // W0H1_KUNNETH_HPP
