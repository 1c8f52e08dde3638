#include "chowring/polynomial.hpp"

#include <algorithm>

namespace chowring {

namespace {

struct Descending {
  const GeneratorSet* gens;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return MonomialOrder().compare(*gens, a, b) > 0;
  }
};

}  // namespace

Polynomial::Polynomial(GeneratorSetPtr gens) : gens_(std::move(gens)) {
  if (!gens_) throw std::invalid_argument("polynomial needs a generator set");
}

Polynomial Polynomial::constant(GeneratorSetPtr gens, const Rational& c) {
  auto n = gens->size();
  return term(std::move(gens), Monomial(n), c);
}

Polynomial Polynomial::variable(GeneratorSetPtr gens, std::size_t index) {
  auto n = gens->size();
  return term(std::move(gens), Monomial::variable(n, index), Rational(1));
}

Polynomial Polynomial::term(GeneratorSetPtr gens, Monomial m, const Rational& c) {
  Polynomial p(std::move(gens));
  if (m.size() != p.gens_->size()) throw std::invalid_argument("monomial length mismatch");
  if (!c.is_zero()) p.terms_.emplace_back(std::move(m), c);
  return p;
}

Polynomial Polynomial::from_terms(GeneratorSetPtr gens, std::vector<Term> terms) {
  Polynomial p(std::move(gens));
  std::map<Monomial, Rational, Descending> acc(Descending{p.gens_.get()});
  for (auto& [m, c] : terms) {
    if (m.size() != p.gens_->size()) throw std::invalid_argument("monomial length mismatch");
    acc[m] += c;
  }
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) p.terms_.emplace_back(m, c);
  }
  return p;
}

std::optional<int> Polynomial::weighted_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().first.weighted_degree(*gens_);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.front().first.weighted_degree(*gens_);
  return terms_.back().first.weighted_degree(*gens_) == d;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial r(gens_);
  for (const auto& t : terms_) {
    if (t.first.weighted_degree(*gens_) == degree) r.terms_.push_back(t);
  }
  return r;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& [mono, c] : terms_) {
    if (mono == m) return c;
  }
  return Rational(0);
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!same_generators(gens_, o.gens_)) throw GeneratorMismatch();
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  add_multiple(Rational(1), Monomial(gens_->size()), o);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  add_multiple(Rational(-1), Monomial(gens_->size()), o);
  return *this;
}

void Polynomial::add_multiple(const Rational& c, const Monomial& m, const Polynomial& g) {
  check_compatible(g);
  if (c.is_zero() || g.is_zero()) return;
  const MonomialOrder order;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      merged.push_back(std::move(*a++));
      continue;
    }
    Monomial shifted = b->first * m;
    if (a == terms_.end()) {
      merged.emplace_back(std::move(shifted), c * b->second);
      ++b;
      continue;
    }
    auto cmp = order.compare(*gens_, a->first, shifted);
    if (cmp > 0) {
      merged.push_back(std::move(*a++));
    } else if (cmp < 0) {
      merged.emplace_back(std::move(shifted), c * b->second);
      ++b;
    } else {
      Rational sum = a->second + c * b->second;
      if (!sum.is_zero()) merged.emplace_back(std::move(shifted), std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  std::vector<Polynomial::Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) products.emplace_back(ma * mb, ca * cb);
  }
  return Polynomial::from_terms(a.gens_, std::move(products));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(gens_, Rational(1));
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading_coefficient().inverse();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_generators(a.gens_, b.gens_) && a.terms_ == b.terms_;
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& images,
                      const GeneratorSetPtr& target) {
  for (const auto& [name, image] : images) {
    if (!same_generators(image.generators(), target)) throw GeneratorMismatch();
  }
  const auto& gens = *p.generators();
  std::vector<const Polynomial*> lookup(gens.size(), nullptr);
  Polynomial result(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!lookup[i]) {
        auto it = images.find(gens[i].name);
        if (it == images.end()) throw MissingImage(gens[i].name);
        lookup[i] = &it->second;
      }
      term *= lookup[i]->pow(m[i]);
    }
    result += term;
  }
  return result;
}

Polynomial rename_into(const Polynomial& p, const GeneratorSetPtr& target) {
  if (same_generators(p.generators(), target)) return Polynomial::from_terms(target, {p.terms().begin(), p.terms().end()});
  const auto& source = *p.generators();
  std::vector<std::size_t> map(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    auto j = target->index_of(source[i].name);
    if (!j || (*target)[*j].weight != source[i].weight) {
      // Only generators actually used need a counterpart.
      map[i] = target->size();
      continue;
    }
    map[i] = *j;
  }
  std::vector<Polynomial::Term> terms;
  for (const auto& [m, c] : p.terms()) {
    Monomial out(target->size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (map[i] == target->size()) throw MissingImage(source[i].name);
      out[map[i]] = m[i];
    }
    terms.emplace_back(std::move(out), c);
  }
  return Polynomial::from_terms(target, std::move(terms));
}

std::vector<Polynomial> expand_chern_identity(int g) {
  if (g < 1) throw std::invalid_argument("Chern identity needs g >= 1");
  std::vector<Generator> gens;
  for (int i = 1; i <= g; ++i) gens.push_back({"lambda" + std::to_string(i), i});
  return expand_chern_identity(g, GeneratorSet::make(std::move(gens)));
}

std::vector<Polynomial> expand_chern_identity(int g, const GeneratorSetPtr& gens) {
  if (g < 1) throw std::invalid_argument("Chern identity needs g >= 1");
  Polynomial plus = Polynomial::constant(gens, Rational(1));
  Polynomial minus = Polynomial::constant(gens, Rational(1));
  for (int i = 1; i <= g; ++i) {
    const std::string name = "lambda" + std::to_string(i);
    auto idx = gens->index_of(name);
    if (!idx || (*gens)[*idx].weight != i) {
      throw std::invalid_argument("Chern identity needs generator " + name + " of weight " +
                                  std::to_string(i));
    }
    Polynomial lam = Polynomial::variable(gens, *idx);
    plus += lam;
    minus += (i % 2 == 0) ? lam : -lam;
  }
  Polynomial total = plus * minus - Polynomial::constant(gens, Rational(1));
  std::vector<Polynomial> parts;
  for (int d = 1; d <= 2 * g; ++d) {
    Polynomial part = total.homogeneous_part(d);
    if (!part.is_zero()) parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace chowring
