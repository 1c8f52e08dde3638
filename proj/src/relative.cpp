#include "chowring/relative.hpp"

#include <algorithm>

#include "chowring/parser.hpp"

namespace chowring {

GeneratorSetPtr RelativeRing::combined_generators(const GeneratorSet& base,
                                                  const std::vector<Generator>& fiber) {
  std::vector<Generator> all = fiber;
  all.insert(all.end(), base.list().begin(), base.list().end());
  return GeneratorSet::make(std::move(all));
}

namespace {

QuotientRingPtr build_combined(const std::string& name, const QuotientRing& base,
                               const GeneratorSetPtr& combined,
                               const std::vector<Polynomial>& fiber_relations) {
  RingPresentation p{name, combined, {}, std::nullopt};
  for (const auto& r : base.relations()) p.relations.push_back(rename_into(r, combined));
  for (const auto& r : fiber_relations) {
    if (!same_generators(r.generators(), combined)) throw GeneratorMismatch();
    p.relations.push_back(r);
  }
  return make_ring(std::move(p));
}

bool is_module_generator(const Monomial& m, std::size_t fiber_count) {
  std::uint32_t total = 0;
  for (std::size_t i = 0; i < fiber_count; ++i) total += m[i];
  return total <= 1;
}

}  // namespace

RelativeRing::RelativeRing(std::string name, QuotientRingPtr base, GeneratorSetPtr combined,
                           std::vector<Polynomial> fiber_relations)
    : base_(std::move(base)),
      combined_(build_combined(name, *base_, combined, fiber_relations)),
      fiber_relations_(std::move(fiber_relations)),
      fiber_count_(combined->size() - base_->generators()->size()) {
  const auto& gens = *combined_->generators();
  for (std::size_t i = fiber_count_; i < gens.size(); ++i) {
    if (gens[i] != (*base_->generators())[i - fiber_count_]) {
      throw std::invalid_argument("combined generators must end with the base generators");
    }
  }
  // Module invariant: every product of two fiber generators is non-standard.
  for (std::size_t i = 0; i < fiber_count_; ++i) {
    for (std::size_t j = i; j < fiber_count_; ++j) {
      Monomial m(gens.size());
      ++m[i];
      ++m[j];
      if (combined_->groebner_basis().is_standard(m)) {
        throw std::invalid_argument("relative ring '" + this->name() + "' is not spanned by 1 and " +
                                    "the fiber generators: " + render_monomial(gens, m) +
                                    " is standard");
      }
    }
  }
  for (const auto& r : fiber_relations_) {
    if (r.is_zero() || is_module_generator(r.leading_monomial(), fiber_count_)) {
      throw std::invalid_argument("fiber relation must have a leading term of fiber degree >= 2");
    }
  }
}

Polynomial RelativeRing::pullback(const Polynomial& base_class) const {
  if (!same_generators(base_class.generators(), base_->generators())) throw GeneratorMismatch();
  return rename_into(base_class, generators());
}

Polynomial RelativeRing::fiber_reduce(const Polynomial& p, std::mt19937_64* rng) const {
  if (!same_generators(p.generators(), generators())) throw GeneratorMismatch();
  Polynomial work = p;
  while (true) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> candidates;
    for (std::size_t t = 0; t < work.size(); ++t) {
      const auto& m = work.terms()[t].first;
      if (is_module_generator(m, fiber_count_)) continue;
      std::vector<std::size_t> usable;
      for (std::size_t r = 0; r < fiber_relations_.size(); ++r) {
        if (fiber_relations_[r].leading_monomial().divides(m)) usable.push_back(r);
      }
      if (usable.empty()) {
        throw std::logic_error("fiber relations cannot rewrite " +
                               render_monomial(*generators(), m));
      }
      candidates.emplace_back(t, std::move(usable));
      if (!rng) break;  // deterministic: largest offending term, first relation
    }
    if (candidates.empty()) return work;
    std::size_t pick = 0;
    std::size_t rel = 0;
    if (rng) {
      pick = std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(*rng);
      rel = std::uniform_int_distribution<std::size_t>(0, candidates[pick].second.size() - 1)(*rng);
    }
    const auto& [t, usable] = candidates[pick];
    const Polynomial& g = fiber_relations_[usable[rel]];
    const auto& [m, c] = work.terms()[t];
    Rational factor = -(c / g.leading_coefficient());
    Monomial shift = m / g.leading_monomial();
    work.add_multiple(factor, shift, g);
  }
}

std::map<std::string, Polynomial> RelativeRing::module_coefficients(
    const Polynomial& module_form) const {
  const auto& gens = *generators();
  const auto& base_gens = base_->generators();
  std::map<std::string, std::vector<Polynomial::Term>> parts;
  for (const auto& [m, c] : module_form.terms()) {
    if (!is_module_generator(m, fiber_count_)) {
      throw PushforwardError("term " + render_monomial(gens, m) + " is not in module form");
    }
    std::string key = "1";
    for (std::size_t i = 0; i < fiber_count_; ++i) {
      if (m[i] != 0) key = gens[i].name;
    }
    Monomial base_part(base_gens->size());
    for (std::size_t i = fiber_count_; i < m.size(); ++i) base_part[i - fiber_count_] = m[i];
    parts[key].emplace_back(std::move(base_part), c);
  }
  std::map<std::string, Polynomial> out;
  for (auto& [key, terms] : parts) out.emplace(key, Polynomial::from_terms(base_gens, std::move(terms)));
  return out;
}

Polynomial relative_reduce(const RelativeRing& rr, const Polynomial& p) { return rr.reduce(p); }

Polynomial pushforward_module_form(const RelativeRing& rr, const PushforwardRule& rule,
                                   const Polynomial& module_form) {
  Polynomial result = rr.base().zero();
  for (const auto& [key, coefficient] : rr.module_coefficients(module_form)) {
    auto it = rule.images.find(key);
    if (it == rule.images.end()) throw PushforwardError("rule has no image for '" + key + "'");
    result += coefficient * it->second;
  }
  return rr.base().reduce(result);
}

Polynomial pushforward(const RelativeRing& rr, const PushforwardRule& rule, const Polynomial& p) {
  return pushforward_module_form(rr, rule, rr.reduce(p));
}

Rational relative_degree(const RelativeRing& rr, const PushforwardRule& rule,
                         const DegreeFunctional& base_functional, const Polynomial& p) {
  const int expected = base_functional.top_degree() + rule.codimension_shift;
  if (!p.is_zero() && (!p.is_homogeneous() || *p.weighted_degree() != expected)) {
    throw DegreeError("relative degree expects a homogeneous class of degree " +
                      std::to_string(expected));
  }
  return base_functional.degree(pushforward(rr, rule, p));
}

void validate_rule(const RelativeRing& rr, const PushforwardRule& rule) {
  const auto& gens = *rr.generators();
  auto check = [&](const std::string& key, int weight) {
    auto it = rule.images.find(key);
    if (it == rule.images.end()) throw PushforwardError("rule has no image for '" + key + "'");
    if (!same_generators(it->second.generators(), rr.base().generators())) throw GeneratorMismatch();
    const int target = weight - rule.codimension_shift;
    const Polynomial nf = rr.base().reduce(it->second);
    if (nf.is_zero()) return;
    if (target < 0 || !nf.is_homogeneous() || *nf.weighted_degree() != target) {
      throw PushforwardError("image of '" + key + "' must have degree " + std::to_string(target));
    }
  };
  check("1", 0);
  for (std::size_t i = 0; i < rr.fiber_count(); ++i) check(gens[i].name, gens[i].weight);
}

TabulatedPushforward::TabulatedPushforward(std::string name, QuotientRingPtr target,
                                           std::vector<TabulatedSymbol> symbols)
    : name_(std::move(name)), target_(std::move(target)), symbols_(std::move(symbols)) {
  std::vector<Generator> gens;
  for (const auto& s : symbols_) {
    if (!same_generators(s.image.generators(), target_->generators())) throw GeneratorMismatch();
    if (!s.image.is_zero() &&
        (!s.image.is_homogeneous() || *s.image.weighted_degree() != s.degree)) {
      throw PushforwardError("image of '" + s.name + "' must have degree " + std::to_string(s.degree));
    }
    gens.push_back({s.name, s.degree});
  }
  symbol_gens_ = GeneratorSet::make(std::move(gens));
}

const TabulatedSymbol& TabulatedPushforward::symbol(std::string_view name) const {
  for (const auto& s : symbols_) {
    if (s.name == name) return s;
  }
  throw PushforwardError("unknown symbol '" + std::string(name) + "'");
}

Combination TabulatedPushforward::parse_combination(std::string_view text) const {
  Polynomial p = parse_polynomial(text, symbol_gens_);
  Combination combo;
  for (const auto& [m, c] : p.terms()) {
    std::optional<std::size_t> which;
    std::uint32_t total = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      total += m[i];
      if (m[i]) which = i;
    }
    if (total != 1) {
      throw PushforwardError("'" + std::string(text) + "' is not a linear combination of symbols");
    }
    combo.emplace_back(c, (*symbol_gens_)[*which].name);
  }
  return combo;
}

Polynomial push_combination(const TabulatedPushforward& tp, const Combination& combo) {
  Polynomial result = tp.target().zero();
  std::optional<int> degree;
  for (const auto& [c, name] : combo) {
    const TabulatedSymbol& s = tp.symbol(name);
    if (degree && *degree != s.degree) {
      throw PushforwardError("combination mixes degrees " + std::to_string(*degree) + " and " +
                             std::to_string(s.degree));
    }
    degree = s.degree;
    result += c * s.image;
  }
  return result;
}

bool verify_pushforward_identity(const TabulatedPushforward& tp, const Combination& combo,
                                 const Polynomial& expected) {
  return tp.target().classes_equal(push_combination(tp, combo), expected);
}

}  // namespace chowring
