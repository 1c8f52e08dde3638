#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "chowring/verify.hpp"
#include "support.hpp"

using namespace chowring;
using chowring::testing::catalog;

namespace {

std::size_t count_prefix(const VerificationReport& r, std::string_view prefix) {
  return std::count_if(r.checks.begin(), r.checks.end(),
                       [&](const CheckResult& c) { return c.id.starts_with(prefix); });
}

const CheckResult* find_check(const VerificationReport& r, std::string_view id) {
  for (const auto& c : r.checks)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("symplectic group orders") {
  CHECK(group_order_gamma(1, 3) == Rational(24));
  CHECK(group_order_gamma(2, 3) == Rational(51840));
  CHECK(group_order_gamma(3, 1) == Rational(1));
  CHECK(group_order_gamma(1, 4) == Rational(48));
  CHECK(group_order_gamma(1, 6) == Rational(144));
  CHECK(prime_divisors(12) == std::vector<int>{2, 3});
  CHECK(prime_divisors(1).empty());
}

TEST_CASE("cusp counts") {
  CHECK(cusp_count_mu(1, 3, MuConvention::SingleFactor) == Rational(4));
  CHECK(cusp_count_mu(1, 3, MuConvention::AsPrinted) == Rational(4));
  CHECK(cusp_count_mu(2, 3, MuConvention::SingleFactor) == Rational(40));
  CHECK(cusp_count_mu(2, 3, MuConvention::AsPrinted) == Rational(320, 9));
  CHECK_FALSE(cusp_count_mu(2, 3, MuConvention::AsPrinted).is_integer());
}

TEST_CASE("level identity") {
  for (int ell = 3; ell <= 7; ++ell) CHECK(verify_level_identity(ell));
  // The identity at l=3: (1/3)*3*4*40 = 160 = 51840/(12*27).
  CHECK(Rational(1, 3) * Rational(3) * Rational(4) * Rational(40) == Rational(51840, 12 * 27));
}

TEST_CASE("whole catalog verifies") {
  auto report = run_verification(catalog());
  CHECK(report.fail == 0);
  CHECK(report.pass > 200);
  CHECK(report.pass + report.fail + report.skipped == report.checks.size());
  CHECK(std::is_sorted(report.checks.begin(), report.checks.end(),
                       [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; }));
}

TEST_CASE("scope sizes") {
  auto t3b = run_verification(catalog(), "table:3b");
  CHECK(t3b.checks.size() == 25);
  CHECK(t3b.pass == 25);
  auto t3g = run_verification(catalog(), "table:3g");
  CHECK(t3g.checks.size() == 36);
  CHECK(t3g.pass == 36);
  auto t3a = run_verification(catalog(), "table:3a");
  CHECK(t3a.pass == 9);
  auto g1 = run_verification(catalog(), "a1_tilde");
  CHECK(g1.fail == 0);
  CHECK(find_check(g1, "a1_tilde/hilbert") != nullptr);
  CHECK(find_check(g1, "a1_tilde/hilbert")->computed == "1,1");
  CHECK_THROWS_AS(run_verification(catalog(), "no-such-scope"), UnknownScope);
  CHECK_THROWS_AS(run_verification(catalog(), "table:zz"), UnknownScope);
  auto scopes = verification_scopes(catalog());
  CHECK(std::find(scopes.begin(), scopes.end(), "table:4a") != scopes.end());
  CHECK(std::find(scopes.begin(), scopes.end(), "level") != scopes.end());
}

TEST_CASE("skipped entries are reported, not asserted") {
  auto t3c = run_verification(catalog(), "table:3c");
  CHECK(t3c.fail == 0);
  CHECK(t3c.skipped == 4);
  for (const auto& c : t3c.checks)
    if (c.status == CheckStatus::Skipped) CHECK(c.id.find("sigma4") + c.id.find("sigma5") + c.id.find("sigma6") != 3 * std::string::npos);
  auto t2b = run_verification(catalog(), "table:2b");
  CHECK(t2b.skipped == 1);
  auto level = run_verification(catalog(), "level");
  const auto* printed = find_check(level, "level/mu(2,3)/as-printed");
  REQUIRE(printed != nullptr);
  CHECK(printed->status == CheckStatus::Skipped);
  CHECK(printed->computed.find("320/9") != std::string::npos);
  CHECK(level.fail == 0);
}

TEST_CASE("504 lambda3 reports both readings") {
  auto report = run_verification(catalog(), "torelli");
  CHECK(report.fail == 0);
  CHECK(count_prefix(report, "torelli/convention:504lambda3/") == 2);
  const auto* agg = find_check(report, "torelli/convention:504lambda3");
  REQUIRE(agg != nullptr);
  CHECK(agg->status == CheckStatus::Pass);
}

TEST_CASE("report JSON is deterministic and has the expected shape") {
  auto a = report_json(run_verification(catalog())).dump();
  auto b = report_json(run_verification(catalog())).dump();
  CHECK(a == b);
  Json j = Json::parse(a);
  REQUIRE(j.contains("checks"));
  REQUIRE(j.contains("summary"));
  for (const auto& c : j["checks"]) {
    CHECK(c.size() == 5);
    for (const char* key : {"id", "citation", "expected", "computed", "status"}) CHECK(c.contains(key));
  }
}

TEST_CASE("wrong data is caught") {
  std::vector<std::pair<std::string, Json>> docs;
  for (const auto& [stem, text] : bundled_documents())
    docs.emplace_back(std::string(stem), parse_json_text(text, std::string(stem)));
  for (auto& [stem, doc] : docs) {
    if (stem != "a3_tilde") continue;
    for (auto& table : doc["expected"]["tables"]) {
      if (table["id"] == "3g") table["values"][0][1] = "1/1451521";
    }
  }
  Catalog tampered = Catalog::from_documents(docs);
  auto report = run_verification(tampered, "table:3g");
  CHECK(report.fail == 1);
  CHECK_FALSE(report.ok());
}
