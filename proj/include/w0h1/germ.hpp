#ifndef W0H1_GERM_HPP
#define W0H1_GERM_HPP

#include <cstddef>
#include <vector>

#include "w0h1/rational.hpp"

namespace w0h1 {

/// Truncated formal power series in one variable with rational coefficients;
/// coefficient k is the coefficient of t^k.
class TruncatedSeries {
 public:
  TruncatedSeries(std::vector<Rational> coeffs, std::size_t truncation)
      : coeffs_(std::move(coeffs)), trunc_(truncation) {
    coeffs_.resize(trunc_);
  }

  static TruncatedSeries zero(std::size_t truncation) {
    return TruncatedSeries({}, truncation);
  }
  static TruncatedSeries constant(Rational c, std::size_t truncation) {
    return TruncatedSeries({std::move(c)}, truncation);
  }

  std::size_t truncation() const { return trunc_; }
  const Rational& coeff(std::size_t k) const { return coeffs_[k]; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  /// Order of the lowest nonzero term; truncation() if none is visible.
  std::size_t order() const {
    for (std::size_t k = 0; k < trunc_; ++k)
      if (coeffs_[k] != 0) return k;
    return trunc_;
  }

  TruncatedSeries operator+(const TruncatedSeries& o) const {
    TruncatedSeries out = zero(trunc_);
    for (std::size_t k = 0; k < trunc_; ++k)
      out.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    return out;
  }

  TruncatedSeries operator*(const TruncatedSeries& o) const {
    TruncatedSeries out = zero(trunc_);
    for (std::size_t i = 0; i < trunc_; ++i) {
      if (coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j < trunc_; ++j)
        out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return out;
  }

  TruncatedSeries pow(std::size_t n) const {
    TruncatedSeries out = constant(1, trunc_);
    TruncatedSeries base = *this;
    while (n > 0) {
      if (n & 1) out = out * base;
      base = base * base;
      n >>= 1;
    }
    return out;
  }

 private:
  std::vector<Rational> coeffs_;
  std::size_t trunc_;
};

inline constexpr std::size_t kDefaultTruncation = 64;

/// Parametrized local branch t -> (x(t), z(t)).
struct BranchGermParam {
  TruncatedSeries x_series;
  TruncatedSeries z_series;

  void validate() const {
    if (x_series.truncation() != z_series.truncation())
      throw validation_error("branch germ: series truncations differ");
    const bool x_ok = !x_series.is_zero() && x_series.order() > 0;
    const bool z_ok = !z_series.is_zero() && z_series.order() > 0;
    if (!x_ok && !z_ok)
      throw validation_error(
          "branch germ: some series must have a nonzero term of positive order");
  }
};

/// Polynomial in two variables x, z; one summand per term.
struct BivariatePoly {
  struct Term {
    std::size_t x_exp;
    std::size_t z_exp;
    Rational coeff;
  };
  std::vector<Term> terms;
};

/// Local intersection multiplicity as the vanishing order of g along the
/// parametrized branch: ord_t g(x(t), z(t)).
inline std::size_t intersection_multiplicity_oracle(const BranchGermParam& p,
                                                    const BivariatePoly& g) {
  p.validate();
  const std::size_t T = p.x_series.truncation();
  TruncatedSeries acc = TruncatedSeries::zero(T);
  for (const auto& t : g.terms) {
    TruncatedSeries term = TruncatedSeries::constant(t.coeff, T);
    if (t.x_exp > 0) term = term * p.x_series.pow(t.x_exp);
    if (t.z_exp > 0) term = term * p.z_series.pow(t.z_exp);
    acc = acc + term;
  }
  if (acc.is_zero())
    throw computation_error(
        "intersection oracle: g vanishes along the branch up to order " +
        std::to_string(T) + "; truncation too small or branch contained in g=0");
  return acc.order();
}

}  // namespace w0h1

#endif  // W0H1_GERM_HPP
