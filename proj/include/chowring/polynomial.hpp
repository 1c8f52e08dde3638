#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chowring/monomial.hpp"
#include "chowring/rational.hpp"

namespace chowring {

struct GeneratorMismatch : std::invalid_argument {
  GeneratorMismatch() : std::invalid_argument("polynomials over different generator sets") {}
};

struct MissingImage : std::invalid_argument {
  explicit MissingImage(const std::string& name)
      : std::invalid_argument("no image given for generator '" + name + "'") {}
};

/// Sparse polynomial with exact rational coefficients. Terms are kept sorted
/// in descending monomial order and never carry a zero coefficient, so two
/// equal polynomials have identical term lists.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  explicit Polynomial(GeneratorSetPtr gens);

  static Polynomial constant(GeneratorSetPtr gens, const Rational& c);
  static Polynomial variable(GeneratorSetPtr gens, std::size_t index);
  static Polynomial term(GeneratorSetPtr gens, Monomial m, const Rational& c);
  // Terms may be unsorted and may repeat monomials.
  static Polynomial from_terms(GeneratorSetPtr gens, std::vector<Term> terms);

  const GeneratorSetPtr& generators() const { return gens_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().first; }
  const Rational& leading_coefficient() const { return terms_.front().second; }

  /// Weighted degree of the leading term; none for the zero polynomial.
  std::optional<int> weighted_degree() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_part(int degree) const;
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  /// this += c * m * g, in a single merge pass.
  void add_multiple(const Rational& c, const Monomial& m, const Polynomial& g);
  Polynomial pow(unsigned exponent) const;
  Polynomial monic() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_compatible(const Polynomial& o) const;

  GeneratorSetPtr gens_;
  std::vector<Term> terms_;
};

/// Replace each generator occurring in `p` by its image. Images must all
/// live over `target`.
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& images,
                      const GeneratorSetPtr& target);

/// Re-express `p` over `target`, matching generators by name.
Polynomial rename_into(const Polynomial& p, const GeneratorSetPtr& target);

/// Nonzero homogeneous parts of (1 + l1 + ... + lg)(1 - l1 + ... + (-1)^g lg) - 1
/// over generators lambda1..lambda<g> of weights 1..g.
std::vector<Polynomial> expand_chern_identity(int g);
/// Same, expressed over `gens`, which must contain lambda1..lambda<g> with
/// weights 1..g.
std::vector<Polynomial> expand_chern_identity(int g, const GeneratorSetPtr& gens);

}  // namespace chowring
