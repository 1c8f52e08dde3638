#include "chowring/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace chowring {

namespace {

void check_order(const MonomialOrder& order) {
  if (order.kind() != MonomialOrder::Kind::WeightedDegreeLex) {
    throw std::invalid_argument("unsupported monomial order");
  }
}

const Polynomial* first_divisor(const Monomial& m, std::span<const Polynomial> basis) {
  for (const auto& g : basis) {
    if (g.leading_monomial().divides(m)) return &g;
  }
  return nullptr;
}

}  // namespace

Polynomial reduce(const Polynomial& p, std::span<const Polynomial> basis,
                  const MonomialOrder& order) {
  check_order(order);
  for (const auto& g : basis) {
    if (g.is_zero()) throw std::invalid_argument("reduce: zero basis element");
    if (!same_generators(g.generators(), p.generators())) throw GeneratorMismatch();
  }
  // Terms of `work` are visited in descending order; irreducible leading
  // terms move to the remainder, so the largest reducible term is always
  // the next one eliminated.
  Polynomial work = p;
  std::vector<Polynomial::Term> remainder;
  while (!work.is_zero()) {
    const auto& [lm, lc] = work.leading_term();
    if (const Polynomial* g = first_divisor(lm, basis)) {
      Rational factor = -(lc / g->leading_coefficient());
      Monomial shift = lm / g->leading_monomial();
      work.add_multiple(factor, shift, *g);
    } else {
      remainder.push_back(work.leading_term());
      work -= Polynomial::term(work.generators(), lm, lc);
    }
  }
  return Polynomial::from_terms(p.generators(), std::move(remainder));
}

Polynomial reduce_randomized(const Polynomial& p, std::span<const Polynomial> basis,
                             std::mt19937_64& rng, const MonomialOrder& order) {
  check_order(order);
  Polynomial work = p;
  while (true) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> candidates;
    for (std::size_t t = 0; t < work.size(); ++t) {
      std::vector<std::size_t> divisors;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].leading_monomial().divides(work.terms()[t].first)) divisors.push_back(i);
      }
      if (!divisors.empty()) candidates.emplace_back(t, std::move(divisors));
    }
    if (candidates.empty()) return work;
    const auto& [t, divisors] =
        candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    const Polynomial& g =
        basis[divisors[std::uniform_int_distribution<std::size_t>(0, divisors.size() - 1)(rng)]];
    const auto& [m, c] = work.terms()[t];
    Rational factor = -(c / g.leading_coefficient());
    Monomial shift = m / g.leading_monomial();
    work.add_multiple(factor, shift, g);
  }
}

GroebnerBasis::GroebnerBasis(GeneratorSetPtr gens, MonomialOrder order,
                             std::vector<Polynomial> elements, std::vector<Polynomial> source)
    : gens_(std::move(gens)),
      order_(order),
      elements_(std::move(elements)),
      source_(std::move(source)) {}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

Polynomial GroebnerBasis::reduce(const Polynomial& p) const {
  if (!same_generators(p.generators(), gens_)) throw GeneratorMismatch();
  return chowring::reduce(p, elements_, order_);
}

bool GroebnerBasis::contains(const Polynomial& p) const { return reduce(p).is_zero(); }

bool GroebnerBasis::is_standard(const Monomial& m) const {
  return std::none_of(elements_.begin(), elements_.end(),
                      [&](const Polynomial& g) { return g.leading_monomial().divides(m); });
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Monomial& lcm) {
  Polynomial s(f.generators());
  s.add_multiple(g.leading_coefficient(), lcm / f.leading_monomial(), f);
  s.add_multiple(-f.leading_coefficient(), lcm / g.leading_monomial(), g);
  return s;
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, const GeneratorSet& gens,
                                    const MonomialOrder& order) {
  // Drop elements whose leading monomial is divisible by another's; among
  // equal leading monomials keep the first.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& mi = basis[i].leading_monomial();
      const auto& mj = basis[j].leading_monomial();
      if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i].monic());
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(gens, a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    // The leading term survives because no other leading monomial divides it.
    reduced.push_back(reduce(minimal[i], others, order).monic());
  }
  return reduced;
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> generators, GeneratorSetPtr gens,
                         const MonomialOrder& order, BuchbergerStats* stats) {
  check_order(order);
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;

  std::vector<Polynomial> source;
  std::vector<Polynomial> basis;
  for (const auto& g : generators) {
    if (!same_generators(g.generators(), gens)) throw GeneratorMismatch();
    source.push_back(g);
    if (!g.is_zero()) basis.push_back(g.monic());
  }

  std::vector<Pair> pending;
  auto pair_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return std::any_of(pending.begin(), pending.end(),
                       [&](const Pair& p) { return p.i == a && p.j == b; });
  };
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      pending.push_back({i, k, basis[i].leading_monomial().lcm(basis[k].leading_monomial())});
    }
  };
  for (std::size_t k = 0; k < basis.size(); ++k) add_pairs_for(k);

  const GeneratorSet& g = *gens;
  while (!pending.empty()) {
    // Normal strategy: smallest lcm first; ties by insertion order.
    auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
      return order.compare(g, a.lcm, b.lcm) < 0;
    });
    Pair pair = *best;
    pending.erase(best);
    ++st.pairs_considered;

    const auto& fi = basis[pair.i];
    const auto& fj = basis[pair.j];
    if (fi.leading_monomial().coprime(fj.leading_monomial())) {
      ++st.pairs_skipped_coprime;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (basis[k].leading_monomial().divides(pair.lcm) && !pair_pending(pair.i, k) &&
          !pair_pending(pair.j, k)) {
        chain = true;
      }
    }
    if (chain) {
      ++st.pairs_skipped_chain;
      continue;
    }

    Polynomial r = reduce(s_polynomial(fi, fj, pair.lcm), basis, order);
    if (r.is_zero()) {
      ++st.reductions_to_zero;
      continue;
    }
    basis.push_back(r.monic());
    add_pairs_for(basis.size() - 1);
  }

  return GroebnerBasis(gens, order, interreduce(std::move(basis), g, order), std::move(source));
}

bool ideal_membership(const Polynomial& p, const GroebnerBasis& gb) { return gb.contains(p); }

}  // namespace chowring
