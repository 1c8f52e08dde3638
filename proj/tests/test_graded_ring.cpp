#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "support.hpp"

using namespace chowring;
using chowring::testing::catalog;

namespace {

std::vector<Polynomial> parse_all(const LoadedRing& r, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(r.parse(t));
  return out;
}

std::vector<Rational> rats(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  for (const char* t : texts) out.push_back(Rational::parse(t));
  return out;
}

// Dimension of the degree-d piece by plain linear algebra: monomials of
// degree d modulo the span of all monomial multiples of the relations.
int hilbert_oracle(const QuotientRing& ring, int d) {
  const auto& gens = ring.generators();
  auto cols = monomials_of_degree(*gens, d);
  std::vector<std::vector<Rational>> rows;
  for (const auto& rel : ring.relations()) {
    auto rd = rel.weighted_degree();
    if (!rd || *rd > d) continue;
    for (const auto& m : monomials_of_degree(*gens, d - *rd)) {
      Polynomial prod = Polynomial::term(gens, m, 1) * rel;
      std::vector<Rational> row(cols.size());
      for (const auto& [mono, c] : prod.terms()) {
        auto it = std::find(cols.begin(), cols.end(), mono);
        REQUIRE(it != cols.end());
        row[it - cols.begin()] = c;
      }
      rows.push_back(std::move(row));
    }
  }
  RationalMatrix a(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) a(i, j) = rows[i][j];
  return static_cast<int>(cols.size() - (rows.empty() ? 0 : a.rank()));
}

}  // namespace

TEST_CASE("Hilbert functions") {
  CHECK(catalog().ring("a3_tilde").ring->hilbert_function(6) == std::vector<int>{1, 2, 4, 6, 4, 2, 1});
  CHECK(catalog().ring("a2_tilde").ring->hilbert_function(3) == std::vector<int>{1, 2, 2, 1});
  CHECK(catalog().ring("a1_tilde").ring->hilbert_function(1) == std::vector<int>{1, 1});
  CHECK(catalog().ring("a3_taut").ring->hilbert_function(3) == std::vector<int>{1, 1, 1, 1});
  CHECK(catalog().ring("a3_tilde").ring->top_degree() == 6);
  CHECK(catalog().ring("a3_taut").ring->hilbert_function(4).back() == 0);
}

TEST_CASE("Hilbert function agrees with a linear-algebra oracle") {
  for (const char* name : {"a3_partial", "a2_partial", "a1_partial", "a3_tilde", "a2_tilde"}) {
    const auto& ring = *catalog().ring(name).ring;
    auto h = ring.hilbert_function(7);
    for (int d = 0; d <= 7; ++d) {
      INFO(name << " degree " << d);
      CHECK(h[d] == hilbert_oracle(ring, d));
    }
  }
  CHECK(catalog().ring("a3_partial").ring->hilbert_function(5) == std::vector<int>{1, 2, 3, 3, 1, 0});
}

TEST_CASE("Hilbert function of the g=3 ring is palindromic") {
  auto h = catalog().ring("a3_tilde").ring->hilbert_function(6);
  CHECK(std::equal(h.begin(), h.end(), h.rbegin()));
}

TEST_CASE("standard monomials") {
  const auto& r = catalog().ring("a3_tilde");
  const auto& ring = *r.ring;
  CHECK(ring.standard_monomials(0).size() == 1);
  CHECK(ring.standard_monomials(1).size() == 2);
  REQUIRE(ring.standard_monomials(3).size() == 6);
  // The published degree-3 basis spans the same space.
  auto basis = parse_all(r, {"lambda3", "lambda1^3", "lambda1^2*sigma1", "lambda1*sigma2",
                             "lambda1*sigma1^2", "sigma2*sigma1"});
  RationalMatrix m(6, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    auto c = ring.coordinates(basis[i], 3);
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = c[j];
  }
  CHECK(m.rank() == 6);
  // Descending order.
  MonomialOrder order;
  for (int d = 0; d <= 6; ++d) {
    const auto& s = ring.standard_monomials(d);
    for (std::size_t i = 1; i < s.size(); ++i)
      CHECK(order.compare(*ring.generators(), s[i - 1], s[i]) == std::strong_ordering::greater);
  }
}

TEST_CASE("coordinates round trip") {
  const auto& ring = *catalog().ring("a3_tilde").ring;
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    int d = i % 7;
    Polynomial p = chowring::testing::random_homogeneous(ring.generators(), d, rng);
    CHECK(ring.classes_equal(ring.from_coordinates(d, ring.coordinates(p, d)), p));
  }
}

TEST_CASE("class equality") {
  const auto& g2 = catalog().ring("a2_tilde");
  CHECK(g2.ring->classes_equal(g2.parse("(5*lambda1 - (1/2)*sigma1)*sigma1"), g2.parse("120*lambda2 - sigma2")));
  CHECK(g2.ring->classes_equal(g2.parse("lambda1^2"), g2.parse("2*lambda2")));
  CHECK(g2.ring->is_zero(g2.parse("(12*lambda1 - sigma1)*(5*lambda1 - (1/2)*sigma1)")));
  const auto& g3 = catalog().ring("a3_tilde");
  CHECK_FALSE(g3.ring->classes_equal(g3.parse("lambda1"), g3.parse("sigma1")));
  CHECK(g3.ring->classes_equal(g3.parse("240*A21 + 10*(5*lambda1*sigma1 - sigma2)"),
                               g3.parse("(18*lambda1 - 2*sigma1)*(140*lambda1 - 15*sigma1)")));
  CHECK(g3.ring->is_zero(g3.parse("(12*lambda1 - sigma1)*A111")));
}

TEST_CASE("g=3 top intersection numbers") {
  const auto& r = catalog().ring("a3_tilde");
  const auto& f = *r.functional;
  auto deg = [&](const char* s) { return f.degree(r.parse(s)); };
  CHECK(deg("lambda1^6") == Rational(1, 181440));
  CHECK(deg("sigma1^6") == Rational(-4103, 144));
  CHECK(deg("lambda1^3*sigma1^3") == Rational(1, 720));
  CHECK(deg("sigma2^3") == Rational(-15, 16));
  CHECK(deg("sigma3^2") == Rational(41, 144));
  CHECK(deg("sigma3*sigma2*sigma1") == Rational(1, 16));
  CHECK(deg("sigma3*sigma1^3") == Rational(-13, 48));
  CHECK(deg("sigma2^2*sigma1^2") == Rational(-47, 16));
  CHECK(deg("sigma2*sigma1^4") == Rational(-445, 48));
  CHECK(deg("lambda1*sigma3*sigma2") == Rational(1, 48));
  CHECK(deg("lambda1*sigma3*sigma1^2") == Rational(1, 48));
  CHECK(deg("lambda1*sigma2^2*sigma1") == Rational(-1, 16));
  CHECK(deg("lambda1*sigma2*sigma1^3") == Rational(-11, 48));
  CHECK(deg("lambda1*sigma1^5") == Rational(-203, 240));
  CHECK(f.degree(r.ring->zero()) == Rational(0));
  CHECK_THROWS_AS(deg("lambda1^5"), DegreeError);
  CHECK_THROWS_AS(deg("lambda1^6 + lambda1"), DegreeError);
  CHECK(f.evaluate(r.parse("lambda1^6 + lambda1")) == Rational(1, 181440));
}

TEST_CASE("degree is linear and vanishes on the ideal") {
  const auto& r = catalog().ring("a3_tilde");
  const auto& f = *r.functional;
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    Polynomial a = chowring::testing::random_homogeneous(r.ring->generators(), 6, rng);
    Polynomial b = chowring::testing::random_homogeneous(r.ring->generators(), 6, rng);
    Rational c = chowring::testing::random_rational(rng);
    CHECK(f.degree(a + c * b) == f.degree(a) + c * f.degree(b));
    for (const auto& rel : r.ring->relations()) {
      int rd = *rel.weighted_degree();
      Polynomial m = chowring::testing::random_homogeneous(r.ring->generators(), 6 - rd, rng);
      CHECK(f.degree(m * rel) == Rational(0));
    }
  }
}

TEST_CASE("g=2 degrees") {
  const auto& r = catalog().ring("a2_tilde");
  CHECK(r.functional->degree(r.parse("sigma1^3")) == Rational(-11, 12));
  CHECK(r.functional->degree(r.parse("sigma2*sigma1")) == Rational(-1, 4));
  const auto& g1 = catalog().ring("a1_tilde");
  CHECK(g1.functional->degree(g1.parse("sigma1")) == Rational(1, 2));
  CHECK(g1.functional->degree(g1.parse("lambda1")) == Rational(1, 24));
}

TEST_CASE("pairing matrices") {
  const auto& r = catalog().ring("a3_tilde");
  const auto& f = *r.functional;
  auto m1 = pairing_matrix(f, 1, parse_all(r, {"lambda1", "sigma1"}),
                           parse_all(r, {"lambda1^5", "lambda1^3*sigma1^2"}));
  CHECK(m1(0, 0) == Rational(1, 181440));
  CHECK(m1(0, 1) == Rational(0));
  CHECK(m1(1, 0) == Rational(0));
  CHECK(m1(1, 1) == Rational(1, 720));

  auto b3 = parse_all(r, {"lambda3", "lambda1^3", "lambda1^2*sigma1", "lambda1*sigma2", "lambda1*sigma1^2",
                          "sigma2*sigma1"});
  auto m3 = pairing_matrix(f, 3, b3, b3);
  CHECK(m3 == m3.transpose());
  CHECK(m3(0, 1) == Rational(1, 1451520));
  CHECK(!m3.determinant().is_zero());

  const auto& g2 = catalog().ring("a2_tilde");
  auto m2 = pairing_matrix(*g2.functional, 1, parse_all(g2, {"lambda1", "sigma1"}),
                           parse_all(g2, {"lambda1^2", "lambda1*sigma1"}));
  CHECK(m2(0, 0) == Rational(1, 2880));
  CHECK(m2(0, 1) == Rational(0));
  CHECK(m2(1, 0) == Rational(0));
  CHECK(m2(1, 1) == Rational(-1, 24));

  CHECK_THROWS_AS(pairing_matrix(f, 2, b3, b3), DegreeError);
}

TEST_CASE("pairing transpose property") {
  const auto& r = catalog().ring("a3_tilde");
  const auto& f = *r.functional;
  auto basis = [&](int d) {
    std::vector<Polynomial> out;
    for (const auto& m : r.ring->standard_monomials(d)) out.push_back(Polynomial::term(r.ring->generators(), m, 1));
    return out;
  };
  for (int k = 0; k <= 6; ++k) {
    auto a = pairing_matrix(f, k, basis(k), basis(6 - k));
    auto b = pairing_matrix(f, 6 - k, basis(6 - k), basis(k));
    CHECK(a == b.transpose());
    CHECK(!a.determinant().is_zero());
  }
}

TEST_CASE("solve class from pairings") {
  const auto& r = catalog().ring("a3_tilde");
  const auto& f = *r.functional;
  auto b3 = parse_all(r, {"lambda3", "lambda1^3", "lambda1^2*sigma1", "lambda1*sigma2", "lambda1*sigma1^2",
                          "sigma2*sigma1"});
  auto a111 = solve_class_from_pairings(f, 3, b3, rats({"1/82944", "1/13824", "1/1152", "1/192", "1/96", "1/16"}));
  CHECK(r.ring->classes_equal(a111, r.parse("A111")));
  // Round trip through the pairing of a known class.
  Polynomial b = r.parse("252*lambda3 - 15*lambda1^2*sigma1 + 2*lambda1*sigma2");
  std::vector<Rational> values;
  for (const auto& p : b3) values.push_back(f.degree(b * p));
  CHECK(r.ring->classes_equal(solve_class_from_pairings(f, 3, b3, values), b));

  CHECK(solve_class_from_pairings(f, 3, b3, std::vector<Rational>(6)).is_zero());

  auto singular = parse_all(r, {"lambda3", "lambda3", "lambda1^2*sigma1", "lambda1*sigma2", "lambda1*sigma1^2",
                                "sigma2*sigma1"});
  auto repeated = values;
  repeated[1] = repeated[0];
  CHECK_THROWS_AS(solve_class_from_pairings(f, 3, singular, repeated), SingularPairing);

  auto over = b3;
  over.push_back(r.parse("lambda3"));
  auto bad = values;
  bad.push_back(values[0] + Rational(1));
  CHECK_THROWS_AS(solve_class_from_pairings(f, 3, over, bad), InconsistentPairings);
  auto good = values;
  good.push_back(values[0]);
  CHECK(r.ring->classes_equal(solve_class_from_pairings(f, 3, over, good), b));
}

TEST_CASE("degree functional construction errors") {
  const auto& r = catalog().ring("a3_tilde");
  CHECK_THROWS_AS(DegreeFunctional(r.ring, 5, r.parse("lambda1^5"), Rational(1)), DegreeError);
  CHECK_THROWS_AS(DegreeFunctional(r.ring, 6, r.parse("lambda3^2"), Rational(1)), DegreeError);
}

TEST_CASE("presentation equivalence") {
  const auto& a = catalog().ring("a2_tilde");
  const auto& b = catalog().ring("a2_tilde_2gen");
  RingMap fwd{{"lambda1", b.parse("lambda1")}, {"lambda2", b.parse("(1/2)*lambda1^2")}, {"sigma1", b.parse("sigma1")}};
  RingMap bwd{{"lambda1", a.parse("lambda1")}, {"sigma1", a.parse("sigma1")}};
  CHECK(presentations_equivalent(*a.ring, *b.ring, fwd, bwd));
  RingMap wrong = fwd;
  wrong.insert_or_assign("lambda2", b.parse("lambda1^2"));
  CHECK_FALSE(presentations_equivalent(*a.ring, *b.ring, wrong, bwd));

  const auto& t = catalog().ring("a3_taut");
  const auto& t1 = catalog().ring("a3_taut_1gen");
  RingMap tf{{"lambda1", t1.parse("lambda1")}, {"lambda2", t1.parse("(1/2)*lambda1^2")}, {"lambda3", t1.parse("0")}};
  RingMap tb{{"lambda1", t.parse("lambda1")}};
  CHECK(presentations_equivalent(*t.ring, *t1.ring, tf, tb));

  const auto& g1 = catalog().ring("a1_tilde");
  RingMap f21{{"lambda1", g1.parse("lambda1")}, {"lambda2", g1.parse("0")}, {"sigma1", g1.parse("sigma1")}};
  RingMap b12{{"lambda1", a.parse("lambda1")}, {"sigma1", a.parse("sigma1")}};
  CHECK_FALSE(presentations_equivalent(*a.ring, *g1.ring, f21, b12));
}
