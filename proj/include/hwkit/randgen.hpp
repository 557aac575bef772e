#pragma once

// Small random exact objects for property checks.

#include <random>

#include "hwkit/weyl.hpp"

namespace hwkit::randgen {

inline Rational small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  return Rational(num(rng), den(rng));
}

inline Monomial monomial(std::mt19937& rng, std::size_t dim, int maxdeg) {
  std::uniform_int_distribution<int> e(0, maxdeg);
  Monomial m(dim);
  for (std::size_t i = 0; i < dim; ++i) m[i] = e(rng);
  return m;
}

inline Polynomial polynomial(std::mt19937& rng, std::size_t dim, int terms, int maxdeg) {
  Polynomial p(dim);
  for (int t = 0; t < terms; ++t) p.add_term(monomial(rng, dim, maxdeg), small_rational(rng));
  return p;
}

inline WeylOperator weyl(std::mt19937& rng, std::size_t dim, int terms, int maxdeg, bool with_s) {
  std::uniform_int_distribution<int> se(0, with_s ? 2 : 0);
  WeylOperator op(dim);
  for (int t = 0; t < terms; ++t)
    op.add_term(WeylKey{monomial(rng, dim, maxdeg), monomial(rng, dim, maxdeg), se(rng)}, small_rational(rng));
  return op;
}

}  // namespace hwkit::randgen
