#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chowring {

struct Generator {
  std::string name;
  int weight = 1;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Ordered list of named, positively weighted generators. The order is
/// fixed at construction and breaks ties in the monomial order.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<Generator> generators);

  static std::shared_ptr<const GeneratorSet> make(std::vector<Generator> generators);

  std::size_t size() const { return generators_.size(); }
  const Generator& operator[](std::size_t i) const { return generators_[i]; }
  const std::vector<Generator>& list() const { return generators_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  int max_weight() const;

  friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) {
    return a.generators_ == b.generators_;
  }

 private:
  std::vector<Generator> generators_;
};

using GeneratorSetPtr = std::shared_ptr<const GeneratorSet>;

bool same_generators(const GeneratorSetPtr& a, const GeneratorSetPtr& b);

/// Dense exponent vector, one entry per generator.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t n, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  bool is_one() const;
  int weighted_degree(const GeneratorSet& gens) const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& o) const;
  // Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Weighted degree first, ties broken lexicographically along the generator
/// order (a larger exponent on an earlier generator wins). This is the only
/// order the library computes with; the tag leaves room for others.
class MonomialOrder {
 public:
  enum class Kind { WeightedDegreeLex };

  MonomialOrder() = default;
  explicit MonomialOrder(Kind kind) : kind_(kind) {}

  Kind kind() const { return kind_; }
  std::strong_ordering compare(const GeneratorSet& gens, const Monomial& a,
                               const Monomial& b) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  Kind kind_ = Kind::WeightedDegreeLex;
};

/// All monomials of weighted degree exactly `degree`, in descending order.
std::vector<Monomial> monomials_of_degree(const GeneratorSet& gens, int degree);

bool is_identifier(std::string_view name);

}  // namespace chowring
