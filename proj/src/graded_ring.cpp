#include "chowring/graded_ring.hpp"

#include <algorithm>

namespace chowring {

namespace {

std::vector<Polynomial> all_relations(const RingPresentation& p) {
  if (!p.generators) throw std::invalid_argument("ring '" + p.name + "' has no generators");
  std::vector<Polynomial> rels;
  for (const auto& r : p.relations) {
    if (!same_generators(r.generators(), p.generators)) throw GeneratorMismatch();
    if (!r.is_homogeneous()) {
      throw DegreeError("ring '" + p.name + "': relation is not homogeneous");
    }
    rels.push_back(r);
  }
  if (p.chern_identity_genus) {
    for (auto& part : expand_chern_identity(*p.chern_identity_genus, p.generators)) {
      rels.push_back(std::move(part));
    }
  }
  return rels;
}

}  // namespace

QuotientRing::QuotientRing(RingPresentation presentation)
    : presentation_(std::move(presentation)),
      relations_(all_relations(presentation_)),
      basis_(buchberger(relations_, presentation_.generators)) {}

QuotientRingPtr make_ring(RingPresentation presentation) {
  return std::make_shared<const QuotientRing>(std::move(presentation));
}

Polynomial QuotientRing::generator(std::string_view name) const {
  auto idx = generators()->index_of(name);
  if (!idx) throw std::invalid_argument("ring '" + this->name() + "' has no generator '" + std::string(name) + "'");
  return Polynomial::variable(generators(), *idx);
}

const std::vector<Monomial>& QuotientRing::standard_monomials(int degree) const {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::lock_guard lock(cache_mutex_);
  auto it = standard_cache_.find(degree);
  if (it != standard_cache_.end()) return it->second;
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(*generators(), degree)) {
    if (basis_.is_standard(m)) out.push_back(std::move(m));
  }
  // std::map never relocates nodes, so the reference stays valid.
  return standard_cache_.emplace(degree, std::move(out)).first->second;
}

std::vector<int> QuotientRing::hilbert_function(int max_degree) const {
  if (max_degree < 0) throw std::invalid_argument("negative degree");
  std::vector<int> h;
  for (int d = 0; d <= max_degree; ++d) h.push_back(static_cast<int>(standard_monomials(d).size()));
  return h;
}

std::optional<int> QuotientRing::top_degree(int limit) const {
  // Generated in positive weights: once `w` consecutive pieces vanish,
  // every higher piece vanishes too.
  const int w = std::max(1, generators()->max_weight());
  int zeros = 0;
  std::optional<int> top;
  for (int d = 0; d <= limit; ++d) {
    if (standard_monomials(d).empty()) {
      if (++zeros == w) return top;
    } else {
      zeros = 0;
      top = d;
    }
  }
  return std::nullopt;
}

std::vector<Rational> QuotientRing::coordinates(const Polynomial& p, int degree) const {
  if (!same_generators(p.generators(), generators())) throw GeneratorMismatch();
  if (!p.is_zero() && (!p.is_homogeneous() || *p.weighted_degree() != degree)) {
    throw DegreeError("expected a homogeneous class of degree " + std::to_string(degree));
  }
  const auto& basis = standard_monomials(degree);
  Polynomial nf = reduce(p);
  std::vector<Rational> coords(basis.size());
  for (const auto& [m, c] : nf.terms()) {
    auto it = std::find(basis.begin(), basis.end(), m);
    // Normal forms only contain standard monomials.
    coords[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return coords;
}

Polynomial QuotientRing::from_coordinates(int degree, const std::vector<Rational>& coords) const {
  const auto& basis = standard_monomials(degree);
  if (coords.size() != basis.size()) throw std::invalid_argument("coordinate count mismatch");
  std::vector<Polynomial::Term> terms;
  for (std::size_t i = 0; i < basis.size(); ++i) terms.emplace_back(basis[i], coords[i]);
  return Polynomial::from_terms(generators(), std::move(terms));
}

const std::vector<Monomial>& standard_monomials(const QuotientRing& ring, int degree) {
  return ring.standard_monomials(degree);
}

std::vector<int> hilbert_function(const QuotientRing& ring, int max_degree) {
  return ring.hilbert_function(max_degree);
}

bool classes_equal(const QuotientRing& ring, const Polynomial& p, const Polynomial& q) {
  return ring.classes_equal(p, q);
}

DegreeFunctional::DegreeFunctional(QuotientRingPtr ring, int top_degree, Polynomial reference,
                                   Rational reference_value)
    : ring_(std::move(ring)),
      top_degree_(top_degree),
      reference_(std::move(reference)),
      reference_value_(std::move(reference_value)) {
  const auto& basis = ring_->standard_monomials(top_degree_);
  if (basis.size() != 1) {
    throw DegreeError("ring '" + ring_->name() + "' has rank " + std::to_string(basis.size()) +
                      " in degree " + std::to_string(top_degree_) + ", expected 1");
  }
  if (reference_.is_zero() || !reference_.is_homogeneous() ||
      *reference_.weighted_degree() != top_degree_) {
    throw DegreeError("normalization element must be homogeneous of degree " +
                      std::to_string(top_degree_));
  }
  reference_coordinate_ = ring_->coordinates(reference_, top_degree_).front();
  if (reference_coordinate_.is_zero()) {
    throw DegreeError("normalization element vanishes in ring '" + ring_->name() + "'");
  }
}

Rational DegreeFunctional::degree(const Polynomial& p) const {
  if (p.is_zero()) return Rational(0);
  if (!p.is_homogeneous()) throw DegreeError("degree of a non-homogeneous polynomial");
  if (*p.weighted_degree() != top_degree_) {
    throw DegreeError("degree expects weighted degree " + std::to_string(top_degree_) + ", got " +
                      std::to_string(*p.weighted_degree()));
  }
  return ring_->coordinates(p, top_degree_).front() / reference_coordinate_ * reference_value_;
}

Rational DegreeFunctional::evaluate(const Polynomial& p) const {
  return degree(p.homogeneous_part(top_degree_));
}

Rational degree(const DegreeFunctional& functional, const Polynomial& p) {
  return functional.degree(p);
}

namespace {

void require_degree(const std::vector<Polynomial>& items, int d, const char* what) {
  for (const auto& p : items) {
    if (!p.is_homogeneous() || (!p.is_zero() && *p.weighted_degree() != d)) {
      throw DegreeError(std::string(what) + " must be homogeneous of degree " + std::to_string(d));
    }
  }
}

}  // namespace

RationalMatrix pairing_matrix(const DegreeFunctional& functional, int k,
                              const std::vector<Polynomial>& rows,
                              const std::vector<Polynomial>& cols) {
  const int top = functional.top_degree();
  require_degree(rows, k, "pairing rows");
  require_degree(cols, top - k, "pairing columns");
  RationalMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = functional.degree(rows[i] * cols[j]);
  }
  return m;
}

Polynomial solve_class_from_pairings(const DegreeFunctional& functional, int k,
                                     const std::vector<Polynomial>& probes,
                                     const std::vector<Rational>& values) {
  if (probes.size() != values.size()) {
    throw std::invalid_argument("probe and value counts differ");
  }
  const QuotientRing& ring = functional.ring();
  const auto& basis = ring.standard_monomials(k);
  std::vector<Polynomial> unknowns;
  for (const auto& m : basis) unknowns.push_back(Polynomial::term(ring.generators(), m, Rational(1)));
  require_degree(probes, functional.top_degree() - k, "probes");

  // Rows: probes; columns: basis classes.
  RationalMatrix a = pairing_matrix(functional, functional.top_degree() - k, probes, unknowns);
  SolveResult sol = solve_linear(a, values);
  switch (sol.status) {
    case SolveStatus::Inconsistent:
      throw InconsistentPairings("pairing values contradict each other");
    case SolveStatus::Underdetermined:
      throw SingularPairing("probes do not span the complementary degree (rank " +
                            std::to_string(a.rank()) + " < " + std::to_string(basis.size()) + ")");
    case SolveStatus::Unique:
      break;
  }
  return ring.from_coordinates(k, sol.x);
}

namespace {

bool map_is_homomorphism(const QuotientRing& from, const QuotientRing& to, const RingMap& images) {
  for (const auto& rel : from.relations()) {
    if (!to.is_zero(substitute(rel, images, to.generators()))) return false;
  }
  return true;
}

bool composite_is_identity(const QuotientRing& ring, const RingMap& there, const RingMap& back,
                           const GeneratorSetPtr& other) {
  for (const auto& g : ring.generators()->list()) {
    Polynomial x = ring.generator(g.name);
    Polynomial round_trip = substitute(substitute(x, there, other), back, ring.generators());
    if (!ring.classes_equal(round_trip, x)) return false;
  }
  return true;
}

}  // namespace

bool presentations_equivalent(const QuotientRing& a, const QuotientRing& b, const RingMap& forward,
                              const RingMap& backward) {
  try {
    return map_is_homomorphism(a, b, forward) && map_is_homomorphism(b, a, backward) &&
           composite_is_identity(a, forward, backward, b.generators()) &&
           composite_is_identity(b, backward, forward, a.generators());
  } catch (const MissingImage&) {
    return false;
  } catch (const GeneratorMismatch&) {
    return false;
  }
}

}  // namespace chowring
