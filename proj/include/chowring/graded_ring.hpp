#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chowring/groebner.hpp"
#include "chowring/linalg.hpp"
#include "chowring/polynomial.hpp"

namespace chowring {

struct DegreeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The probes do not pin down a unique class (degenerate pairing).
struct SingularPairing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// More pairing values than unknowns, and they contradict each other.
struct InconsistentPairings : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RingPresentation {
  std::string name;
  GeneratorSetPtr generators;
  std::vector<Polynomial> relations;
  // When set, the homogeneous parts of the Chern identity in genus g are
  // appended to the relations.
  std::optional<int> chern_identity_genus;
};

/// Graded quotient of a weighted polynomial ring by a homogeneous ideal.
/// Immutable after construction except for the per-degree basis cache,
/// which is filled under a lock.
class QuotientRing {
 public:
  explicit QuotientRing(RingPresentation presentation);

  QuotientRing(const QuotientRing&) = delete;
  QuotientRing& operator=(const QuotientRing&) = delete;

  const std::string& name() const { return presentation_.name; }
  const RingPresentation& presentation() const { return presentation_; }
  const GeneratorSetPtr& generators() const { return presentation_.generators; }
  /// Presentation relations plus any expanded Chern identity parts.
  const std::vector<Polynomial>& relations() const { return relations_; }
  const GroebnerBasis& groebner_basis() const { return basis_; }

  Polynomial zero() const { return Polynomial(generators()); }
  Polynomial one() const { return Polynomial::constant(generators(), Rational(1)); }
  Polynomial generator(std::string_view name) const;

  Polynomial reduce(const Polynomial& p) const { return basis_.reduce(p); }
  bool is_zero(const Polynomial& p) const { return basis_.contains(p); }
  bool classes_equal(const Polynomial& p, const Polynomial& q) const { return is_zero(p - q); }

  /// Degree-d monomials not divisible by any leading monomial, in
  /// descending monomial order.
  const std::vector<Monomial>& standard_monomials(int degree) const;
  std::vector<int> hilbert_function(int max_degree) const;
  /// Largest degree with a nonzero graded piece, or none if the ring is
  /// not finite dimensional below `limit`.
  std::optional<int> top_degree(int limit = 64) const;

  /// Coordinates of a homogeneous class of degree d in standard_monomials(d).
  std::vector<Rational> coordinates(const Polynomial& p, int degree) const;
  Polynomial from_coordinates(int degree, const std::vector<Rational>& coords) const;

 private:
  RingPresentation presentation_;
  std::vector<Polynomial> relations_;
  GroebnerBasis basis_;
  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::vector<Monomial>> standard_cache_;
};

using QuotientRingPtr = std::shared_ptr<const QuotientRing>;

QuotientRingPtr make_ring(RingPresentation presentation);

const std::vector<Monomial>& standard_monomials(const QuotientRing& ring, int degree);
std::vector<int> hilbert_function(const QuotientRing& ring, int max_degree);
bool classes_equal(const QuotientRing& ring, const Polynomial& p, const Polynomial& q);

/// Integration on the top graded piece, pinned by one normalization
/// value. Construction fails unless the top piece has rank one and the
/// reference element is a nonzero class there.
class DegreeFunctional {
 public:
  DegreeFunctional(QuotientRingPtr ring, int top_degree, Polynomial reference,
                   Rational reference_value);

  const QuotientRing& ring() const { return *ring_; }
  const QuotientRingPtr& ring_ptr() const { return ring_; }
  int top_degree() const { return top_degree_; }
  const Polynomial& reference_element() const { return reference_; }
  const Rational& reference_value() const { return reference_value_; }

  /// Requires p homogeneous of the top degree (or zero).
  Rational degree(const Polynomial& p) const;
  /// Applies to any polynomial: only its top-degree part contributes.
  Rational evaluate(const Polynomial& p) const;

 private:
  QuotientRingPtr ring_;
  int top_degree_;
  Polynomial reference_;
  Rational reference_value_;
  Rational reference_coordinate_;
};

Rational degree(const DegreeFunctional& functional, const Polynomial& p);

/// Entry (i, j) is degree(rows[i] * cols[j]); rows must have degree k and
/// cols the complementary degree.
RationalMatrix pairing_matrix(const DegreeFunctional& functional, int k,
                              const std::vector<Polynomial>& rows,
                              const std::vector<Polynomial>& cols);

/// The unique degree-k class X with degree(X * probes[i]) = values[i],
/// written in the degree-k standard basis.
Polynomial solve_class_from_pairings(const DegreeFunctional& functional, int k,
                                     const std::vector<Polynomial>& probes,
                                     const std::vector<Rational>& values);

/// Generator images: each map sends the generator names of one ring to
/// polynomials over the other.
using RingMap = std::map<std::string, Polynomial>;

/// True iff both maps send relations into the other ideal and both
/// composites are the identity modulo the ideals.
bool presentations_equivalent(const QuotientRing& a, const QuotientRing& b, const RingMap& forward,
                              const RingMap& backward);

}  // namespace chowring
