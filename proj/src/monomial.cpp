#include "chowring/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace chowring {

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!(std::isalpha(head) || head == '_') || head >= 0x80) return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    auto c = static_cast<unsigned char>(ch);
    return c < 0x80 && (std::isalnum(c) || c == '_');
  });
}

GeneratorSet::GeneratorSet(std::vector<Generator> generators)
    : generators_(std::move(generators)) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (!is_identifier(g.name)) {
      throw std::invalid_argument("generator name '" + g.name + "' is not an ASCII identifier");
    }
    if (g.weight <= 0) {
      throw std::invalid_argument("generator '" + g.name + "' must have positive weight");
    }
    if (!seen.insert(g.name).second) {
      throw std::invalid_argument("duplicate generator '" + g.name + "'");
    }
  }
}

std::shared_ptr<const GeneratorSet> GeneratorSet::make(std::vector<Generator> generators) {
  return std::make_shared<const GeneratorSet>(std::move(generators));
}

std::optional<std::size_t> GeneratorSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return i;
  }
  return std::nullopt;
}

int GeneratorSet::max_weight() const {
  int w = 0;
  for (const auto& g : generators_) w = std::max(w, g.weight);
  return w;
}

bool same_generators(const GeneratorSetPtr& a, const GeneratorSetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Monomial Monomial::variable(std::size_t n, std::size_t index, std::uint32_t power) {
  Monomial m(n);
  m.exps_.at(index) = power;
  return m;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

int Monomial::weighted_degree(const GeneratorSet& gens) const {
  int d = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) d += static_cast<int>(exps_[i]) * gens[i].weight;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(r.exps_[i], o.exps_[i]);
  return r;
}

std::strong_ordering MonomialOrder::compare(const GeneratorSet& gens, const Monomial& a,
                                            const Monomial& b) const {
  if (auto c = a.weighted_degree(gens) <=> b.weighted_degree(gens); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

void enumerate(const GeneratorSet& gens, std::size_t index, int remaining, Monomial& current,
               std::vector<Monomial>& out) {
  if (index == gens.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  const int w = gens[index].weight;
  for (int e = remaining / w; e >= 0; --e) {
    current[index] = static_cast<std::uint32_t>(e);
    enumerate(gens, index + 1, remaining - e * w, current, out);
  }
  current[index] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const GeneratorSet& gens, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial current(gens.size());
  enumerate(gens, 0, degree, current, out);
  // Enumeration already walks exponents from high to low along the generator
  // order, which is the descending lex order within a fixed degree.
  return out;
}

}  // namespace chowring
