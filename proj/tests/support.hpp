#pragma once

#include <random>

#include "chowring/catalog.hpp"

namespace chowring::testing {

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 6);
  return Rational(num(rng), den(rng));
}

/// Random homogeneous polynomial of weighted degree d with up to `terms` terms.
inline Polynomial random_homogeneous(const GeneratorSetPtr& gens, int d, std::mt19937_64& rng,
                                     int terms = 4) {
  auto monomials = monomials_of_degree(*gens, d);
  Polynomial p(gens);
  if (monomials.empty()) return p;
  std::uniform_int_distribution<std::size_t> pick(0, monomials.size() - 1);
  for (int i = 0; i < terms; ++i) p += Polynomial::term(gens, monomials[pick(rng)], random_rational(rng));
  return p;
}

/// Random polynomial mixing degrees 0..max_degree.
inline Polynomial random_polynomial(const GeneratorSetPtr& gens, int max_degree, std::mt19937_64& rng) {
  Polynomial p(gens);
  std::uniform_int_distribution<int> deg(0, max_degree);
  for (int i = 0; i < 3; ++i) p += random_homogeneous(gens, deg(rng), rng, 2);
  return p;
}

inline const Catalog& catalog() { return Catalog::builtin(); }

}  // namespace chowring::testing
