#ifndef W0H1_SPECTRUM_HPP
#define W0H1_SPECTRUM_HPP

#include <cstddef>
#include <map>

#include "w0h1/rational.hpp"

namespace w0h1 {

/// Finite multiset of reduced rational exponents with positive multiplicities.
struct SpectrumPoly {
  std::map<Rational, std::size_t> terms;

  std::size_t multiplicity(const Rational& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? 0 : it->second;
  }

  std::size_t total_mass() const {
    std::size_t m = 0;
    for (const auto& [e, k] : terms) m += k;
    return m;
  }
};

/// Spectrum of v^b - x^a - z^c: each factor contributes exponents i/a for
/// 1 <= i < a, and the product is the triple convolution, enumerated
/// directly over the (a-1)(b-1)(c-1) lattice triples.
inline SpectrumPoly bp_spectrum(std::size_t a, std::size_t b, std::size_t c) {
  if (a < 2 || b < 2 || c < 2)
    throw validation_error("bp_spectrum: exponents must be >= 2");
  SpectrumPoly sp;
  for (std::size_t i = 1; i < a; ++i)
    for (std::size_t j = 1; j < b; ++j)
      for (std::size_t k = 1; k < c; ++k) {
        Rational e = Rational(i, a) + Rational(j, b) + Rational(k, c);
        ++sp.terms[e];
      }
  return sp;
}

/// Milnor number of v^b - x^a - z^c; the spectrum's total mass.
inline std::size_t milnor_number(std::size_t a, std::size_t b, std::size_t c) {
  if (a < 2 || b < 2 || c < 2)
    throw validation_error("milnor_number: exponents must be >= 2");
  return (a - 1) * (b - 1) * (c - 1);
}

/// dim of the weight-pure unipotent part of H^1 of the punctured
/// normalization: twice the spectrum multiplicity at 1. Cross-checked
/// against the coefficient sum at 1 and 2 (spectrum symmetry).
inline std::size_t unipotent_h1_dim(std::size_t a, std::size_t b, std::size_t c) {
  const SpectrumPoly sp = bp_spectrum(a, b, c);
  const std::size_t at1 = sp.multiplicity(1);
  const std::size_t at2 = sp.multiplicity(2);
  if (at1 != at2)
    throw computation_error("unipotent_h1_dim: spectrum symmetry check failed");
  return 2 * at1;
}

}  // namespace w0h1

#endif  // W0H1_SPECTRUM_HPP
