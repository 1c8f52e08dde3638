#pragma once

#include <random>
#include <span>
#include <vector>

#include "chowring/polynomial.hpp"

namespace chowring {

/// Normal form of `p` modulo `basis`. Always reduces the order-largest
/// reducible term first, using the earliest-listed divisor. The remainder
/// has no term divisible by any leading monomial of `basis`.
Polynomial reduce(const Polynomial& p, std::span<const Polynomial> basis,
                  const MonomialOrder& order = {});

/// Reduction with random term and divisor choices. Only useful as a
/// confluence check: against a Groebner basis it must agree with reduce().
Polynomial reduce_randomized(const Polynomial& p, std::span<const Polynomial> basis,
                             std::mt19937_64& rng, const MonomialOrder& order = {});

/// Reduced Groebner basis: monic, inter-reduced, sorted by ascending
/// leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(GeneratorSetPtr gens, MonomialOrder order, std::vector<Polynomial> elements,
                std::vector<Polynomial> source);

  const GeneratorSetPtr& generators() const { return gens_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  const std::vector<Polynomial>& source() const { return source_; }
  std::vector<Monomial> leading_monomials() const;

  Polynomial reduce(const Polynomial& p) const;
  bool contains(const Polynomial& p) const;
  /// True iff no leading monomial divides m.
  bool is_standard(const Monomial& m) const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.order_ == b.order_ && a.elements_ == b.elements_;
  }

 private:
  GeneratorSetPtr gens_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
  std::vector<Polynomial> source_;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::size_t pairs_skipped_chain = 0;
  std::size_t reductions_to_zero = 0;
};

/// Buchberger's algorithm with the coprime and chain criteria, selecting
/// pairs by smallest lcm (normal strategy). Zero generators are dropped.
GroebnerBasis buchberger(std::span<const Polynomial> generators, GeneratorSetPtr gens,
                         const MonomialOrder& order = {}, BuchbergerStats* stats = nullptr);

bool ideal_membership(const Polynomial& p, const GroebnerBasis& gb);

}  // namespace chowring
