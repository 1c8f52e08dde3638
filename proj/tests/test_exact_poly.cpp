#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chowring/parser.hpp"
#include "support.hpp"

using namespace chowring;
using chowring::testing::random_polynomial;

namespace {

GeneratorSetPtr g3() {
  return GeneratorSet::make({{"lambda1", 1}, {"lambda2", 2}, {"lambda3", 3}, {"sigma1", 1}, {"sigma2", 2}});
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(-4103, 144).str() == "-4103/144");
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational::parse("-15/16") == Rational(-15, 16));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
  CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(181440).inverse().str() == "1/181440");
}

TEST_CASE("rational errors") {
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  Rational r(1);
  CHECK_THROWS_AS(r /= Rational(0), std::domain_error);
}

TEST_CASE("big rationals do not overflow") {
  Rational x = Rational(3, 7).pow(200);
  CHECK(x * Rational(7, 3).pow(200) == Rational(1));
}

TEST_CASE("generator sets validate names and weights") {
  CHECK_THROWS(GeneratorSet::make({{"x", 0}}));
  CHECK_THROWS(GeneratorSet::make({{"x", 1}, {"x", 2}}));
  CHECK_THROWS(GeneratorSet::make({{"2x", 1}}));
  auto g = g3();
  CHECK(g->index_of("sigma2") == 4u);
  CHECK_FALSE(g->index_of("sigma3").has_value());
}

TEST_CASE("monomial order: weighted degree, then earlier generators win") {
  auto g = g3();
  MonomialOrder order;
  Monomial l1sq = Monomial::variable(5, 0, 2);
  Monomial l2 = Monomial::variable(5, 1);
  Monomial s1 = Monomial::variable(5, 3);
  Monomial l3 = Monomial::variable(5, 2);
  CHECK(order.compare(*g, l1sq, l2) == std::strong_ordering::greater);
  CHECK(order.compare(*g, l3, l1sq) == std::strong_ordering::greater);
  CHECK(order.compare(*g, s1, l2) == std::strong_ordering::less);
  CHECK(l1sq.weighted_degree(*g) == 2);
  CHECK(monomials_of_degree(*g, 2).size() == 5);
}

TEST_CASE("polynomial basics") {
  auto g = g3();
  Polynomial p = parse_polynomial("lambda1^2 - 2*lambda2", g);
  CHECK(p.is_homogeneous());
  CHECK(p.weighted_degree() == 2);
  CHECK(p.leading_monomial() == Monomial::variable(5, 0, 2));
  CHECK((p - p).is_zero());
  CHECK(parse_polynomial("lambda1 + lambda2", g).is_homogeneous() == false);
  CHECK(p.homogeneous_part(1).is_zero());
  CHECK(p.coefficient(Monomial::variable(5, 1)) == Rational(-2));
  CHECK(p.monic() == p);
  CHECK((Rational(3) * p).monic() == p);
}

TEST_CASE("polynomial ring axioms hold on random inputs") {
  auto g = g3();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Polynomial a = random_polynomial(g, 3, rng);
    Polynomial b = random_polynomial(g, 3, rng);
    Polynomial c = random_polynomial(g, 2, rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Polynomial(g));
    CHECK(a * Polynomial::constant(g, 1) == a);
    CHECK(a.pow(2) == a * a);
  }
}

TEST_CASE("add_multiple matches the naive computation") {
  auto g = g3();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    Polynomial a = random_polynomial(g, 3, rng);
    Polynomial b = random_polynomial(g, 3, rng);
    Rational c = chowring::testing::random_rational(rng);
    Monomial m = Monomial::variable(5, i % 5, 1 + i % 2);
    Polynomial expected = a + c * Polynomial::term(g, m, 1) * b;
    a.add_multiple(c, m, b);
    CHECK(a == expected);
  }
}

TEST_CASE("mixing generator sets is an error") {
  auto a = GeneratorSet::make({{"x", 1}});
  auto b = GeneratorSet::make({{"y", 1}});
  CHECK_THROWS_AS(Polynomial::variable(a, 0) + Polynomial::variable(b, 0), GeneratorMismatch);
}

TEST_CASE("substitution") {
  auto g2 = GeneratorSet::make({{"lambda1", 1}, {"lambda2", 2}, {"sigma1", 1}});
  auto two = GeneratorSet::make({{"lambda1", 1}, {"sigma1", 1}});
  std::map<std::string, Polynomial> images{{"lambda1", parse_polynomial("lambda1", two)},
                                           {"lambda2", parse_polynomial("(1/2)*lambda1^2", two)},
                                           {"sigma1", parse_polynomial("sigma1", two)}};
  Polynomial p = parse_polynomial("lambda2*sigma1 - lambda1^3", g2);
  CHECK(substitute(p, images, two) == parse_polynomial("(1/2)*lambda1^2*sigma1 - lambda1^3", two));
  images.erase("sigma1");
  CHECK_THROWS_AS(substitute(p, images, two), MissingImage);
  CHECK_NOTHROW(substitute(parse_polynomial("lambda1", g2), images, two));
}

TEST_CASE("chern identity expansion") {
  auto parts = expand_chern_identity(3);
  REQUIRE(parts.size() == 3);
  auto g = parts.front().generators();
  CHECK(parts[0] == parse_polynomial("2*lambda2 - lambda1^2", g));
  CHECK(parts[1] == parse_polynomial("lambda2^2 - 2*lambda1*lambda3", g));
  CHECK(parts[2] == parse_polynomial("-lambda3^2", g));
  CHECK(expand_chern_identity(1).size() == 1);
}

TEST_CASE("documented add and multiply examples") {
  auto g = g3();
  auto P = [&](const char* s) { return parse_polynomial(s, g); };
  CHECK((P("lambda1") + P("-lambda1")).is_zero());
  CHECK(P("5*lambda1") + P("-(1/2)*sigma1") == P("5*lambda1 - (1/2)*sigma1"));
  CHECK(P("18*lambda1 - 2*sigma1") * P("140*lambda1 - 15*sigma1") ==
        P("2520*lambda1^2 - 550*lambda1*sigma1 + 30*sigma1^2"));
  CHECK(P("sigma1") * P("sigma1") == P("sigma1^2"));
}

TEST_CASE("rational text round trip") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    Rational r = chowring::testing::random_rational(rng) * Rational(1, 1 + i) + Rational(i, 7);
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("weighted degrees add on homogeneous products") {
  auto g = g3();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    int da = i % 4, db = (i / 4) % 4;
    Polynomial a = chowring::testing::random_homogeneous(g, da, rng);
    Polynomial b = chowring::testing::random_homogeneous(g, db, rng);
    Polynomial c = a * b;
    if (c.is_zero()) continue;
    CHECK(c.is_homogeneous());
    CHECK(c.weighted_degree() == da + db);
  }
}

TEST_CASE("chern parts are homogeneous") {
  for (int g = 1; g <= 3; ++g) {
    for (const auto& p : expand_chern_identity(g)) CHECK(p.is_homogeneous());
  }
}
