#pragma once

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chowring/graded_ring.hpp"

namespace chowring {

struct PushforwardError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Pushforward along a relative ring, given on the module generators
/// 1, t, s, ... (keyed "1" and the fiber generator names). Base-linear.
struct PushforwardRule {
  std::map<std::string, Polynomial> images;  // over the base generators
  int codimension_shift = 2;
};

/// A ring over a base: the base generators plus fiber generators, subject
/// to the base relations and extra fiber relations. Fiber generators come
/// first in the generator order so that, as a base module, the quotient is
/// spanned by 1 and the fiber generators.
class RelativeRing {
 public:
  /// Fiber generators followed by the base generators.
  static GeneratorSetPtr combined_generators(const GeneratorSet& base,
                                             const std::vector<Generator>& fiber);

  RelativeRing(std::string name, QuotientRingPtr base, GeneratorSetPtr combined,
               std::vector<Polynomial> fiber_relations);

  const std::string& name() const { return combined_->name(); }
  const QuotientRing& base() const { return *base_; }
  const QuotientRingPtr& base_ptr() const { return base_; }
  const QuotientRing& combined() const { return *combined_; }
  const QuotientRingPtr& combined_ptr() const { return combined_; }
  const GeneratorSetPtr& generators() const { return combined_->generators(); }
  const std::vector<Polynomial>& fiber_relations() const { return fiber_relations_; }
  std::size_t fiber_count() const { return fiber_count_; }

  Polynomial pullback(const Polynomial& base_class) const;
  /// Normal form in the combined quotient.
  Polynomial reduce(const Polynomial& p) const { return combined_->reduce(p); }
  /// Rewrites `p` with the fiber relations only, until every term is a base
  /// monomial times 1 or a single fiber generator. With an rng, the term and
  /// relation used at each step are chosen at random.
  Polynomial fiber_reduce(const Polynomial& p, std::mt19937_64* rng = nullptr) const;

  /// Splits a module-form polynomial into its base coefficients, keyed "1"
  /// and by fiber generator name.
  std::map<std::string, Polynomial> module_coefficients(const Polynomial& module_form) const;

 private:
  QuotientRingPtr base_;
  QuotientRingPtr combined_;
  std::vector<Polynomial> fiber_relations_;
  std::size_t fiber_count_;
};

Polynomial relative_reduce(const RelativeRing& rr, const Polynomial& p);

/// Applies `rule` to an element already in module form, then reduces in
/// the base.
Polynomial pushforward_module_form(const RelativeRing& rr, const PushforwardRule& rule,
                                   const Polynomial& module_form);
Polynomial pushforward(const RelativeRing& rr, const PushforwardRule& rule, const Polynomial& p);
Rational relative_degree(const RelativeRing& rr, const PushforwardRule& rule,
                         const DegreeFunctional& base_functional, const Polynomial& p);
/// Checks that every rule image has the degree of its module generator
/// minus the shift; throws PushforwardError otherwise.
void validate_rule(const RelativeRing& rr, const PushforwardRule& rule);

struct TabulatedSymbol {
  std::string name;
  int degree = 0;
  Polynomial image;
  std::string citation;
};

using Combination = std::vector<std::pair<Rational, std::string>>;

/// Linear map from formal symbols to classes of a target ring, given by a
/// table of images. Never assumed multiplicative.
class TabulatedPushforward {
 public:
  TabulatedPushforward(std::string name, QuotientRingPtr target,
                       std::vector<TabulatedSymbol> symbols);

  const std::string& name() const { return name_; }
  const QuotientRing& target() const { return *target_; }
  const QuotientRingPtr& target_ptr() const { return target_; }
  const std::vector<TabulatedSymbol>& symbols() const { return symbols_; }
  const TabulatedSymbol& symbol(std::string_view name) const;
  /// The symbols as weighted generators, for parsing combinations.
  const GeneratorSetPtr& symbol_generators() const { return symbol_gens_; }

  /// Parses a linear combination such as "47/15*a - 11*e".
  Combination parse_combination(std::string_view text) const;

 private:
  std::string name_;
  QuotientRingPtr target_;
  std::vector<TabulatedSymbol> symbols_;
  GeneratorSetPtr symbol_gens_;
};

Polynomial push_combination(const TabulatedPushforward& tp, const Combination& combo);
bool verify_pushforward_identity(const TabulatedPushforward& tp, const Combination& combo,
                                 const Polynomial& expected);

}  // namespace chowring
