#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>

#include "support.hpp"

using namespace chowring;
using chowring::testing::catalog;

namespace {

Json minimal_ring() {
  return Json::parse(R"({
    "name": "toy",
    "generators": [{"name": "lambda1", "degree": 1}, {"name": "lambda2", "degree": 2}],
    "relations": ["lambda1^2 - 2*lambda2", "lambda2^2"],
    "normalization": {"element": "lambda1^3", "value": "1/2"}
  })");
}

std::vector<SpecIssue> issues_of(const Json& doc) {
  try {
    load_ring_spec(doc, "test");
  } catch (const SpecError& e) {
    return e.issues();
  }
  return {};
}

bool has_issue(const std::vector<SpecIssue>& issues, const std::string& pointer, const std::string& fragment) {
  return std::any_of(issues.begin(), issues.end(), [&](const SpecIssue& i) {
    return i.pointer == pointer && i.message.find(fragment) != std::string::npos;
  });
}

}  // namespace

TEST_CASE("bundled documents load") {
  CHECK(catalog().rings().size() >= 10);
  CHECK(catalog().find_ring("a3_tilde") != nullptr);
  CHECK(catalog().find_relative("x2_tilde") != nullptr);
  CHECK(catalog().find_tabulated("torelli") != nullptr);
  CHECK(catalog().ring("a3_tilde").ring->hilbert_function(6) == std::vector<int>{1, 2, 4, 6, 4, 2, 1});
  const auto& p2 = catalog().ring("a2_partial");
  CHECK(p2.ring->classes_equal(p2.parse("sigma1^2"), p2.parse("-120*lambda1^2")));
  CHECK(p2.ring->is_zero(p2.parse("lambda1*sigma1")));
  CHECK(bundled_documents().size() == 12);
}

TEST_CASE("a minimal document loads") {
  LoadedRing r = load_ring_spec(minimal_ring(), "test");
  CHECK(r.ring->hilbert_function(4) == std::vector<int>{1, 1, 1, 1, 0});
  CHECK(r.functional->degree(r.parse("lambda1*lambda2")) == Rational(1, 4));
}

TEST_CASE("inhomogeneous relation is reported with its pointer") {
  Json doc = minimal_ring();
  doc["relations"].push_back("lambda1 + lambda2");
  auto issues = issues_of(doc);
  CHECK(has_issue(issues, "/relations/2", "inhomogeneous"));
}

TEST_CASE("problems are aggregated") {
  Json doc = minimal_ring();
  doc["relations"][0] = "lambda1 + mu";
  doc["relations"][1] = "lambda1 + lambda2";
  doc["named_classes"] = Json{{"bad", "lambda1 + 1"}};
  doc["normalization"]["value"] = 0.5;
  auto issues = issues_of(doc);
  CHECK(issues.size() == 4);
  CHECK(has_issue(issues, "/relations/0", "mu"));
  CHECK(has_issue(issues, "/relations/1", "inhomogeneous"));
  CHECK(has_issue(issues, "/named_classes/bad", "homogeneous"));
  CHECK(has_issue(issues, "/normalization/value", "strings"));

  doc = minimal_ring();
  doc["generators"].push_back(Json{{"name", "x"}, {"degree", 0}});
  doc["generators"].push_back(Json{{"name", "bad name"}, {"degree", 1}});
  issues = issues_of(doc);
  CHECK(has_issue(issues, "/generators/2/degree", "positive"));
  CHECK(has_issue(issues, "/generators/3/name", "ASCII"));
}

TEST_CASE("bad rationals and unknown generators") {
  Json doc = minimal_ring();
  doc["normalization"]["value"] = "1/0";
  CHECK(has_issue(issues_of(doc), "/normalization/value", ""));
  doc = minimal_ring();
  doc["normalization"]["value"] = "0.5";
  CHECK(has_issue(issues_of(doc), "/normalization/value", ""));
  doc = minimal_ring();
  doc["relations"][1] = "lambda9^2";
  CHECK(has_issue(issues_of(doc), "/relations/1", "lambda9"));
  doc = minimal_ring();
  doc["generators"][1]["name"] = "lambda1";
  CHECK(!issues_of(doc).empty());
}

TEST_CASE("error message lists every issue") {
  Json doc = minimal_ring();
  doc["relations"].push_back("lambda1 + lambda2");
  doc["normalization"]["value"] = 1.5;
  try {
    load_ring_spec(doc, "broken.json");
    FAIL("expected SpecError");
  } catch (const SpecError& e) {
    std::string what = e.what();
    CHECK(what.find("broken.json") != std::string::npos);
    CHECK(what.find("/relations/2") != std::string::npos);
    CHECK(what.find("/normalization/value") != std::string::npos);
  }
}

TEST_CASE("save and reload gives the same Groebner basis") {
  for (const auto& [name, r] : catalog().rings()) {
    Json saved = save_ring_spec(*r);
    LoadedRing again = load_ring_spec(parse_json_text(saved.dump(2), name), name);
    INFO(name);
    CHECK(again.ring->groebner_basis() == r->ring->groebner_basis());
    CHECK(again.named_classes.size() == r->named_classes.size());
    CHECK(save_ring_spec(again) == saved);
  }
}

TEST_CASE("relative document needs a known base") {
  Json doc = catalog().relative("x2_tilde").source;
  doc["base"] = "nowhere";
  CHECK_THROWS_AS(load_relative_spec(doc, [](const std::string&) { return nullptr; }, "x"), SpecError);
}

TEST_CASE("tabulated images must match their degree") {
  Json doc = catalog().tabulated("torelli").source;
  doc["symbols"][0]["image"] = "lambda1^2";
  auto resolve = [](const std::string& n) { return catalog().find_ring(n); };
  try {
    load_tabulated_spec(doc, resolve, "t");
    FAIL("expected SpecError");
  } catch (const SpecError& e) {
    CHECK(has_issue(e.issues(), "/symbols/0/image", "degree"));
  }
}

TEST_CASE("data directory override") {
  auto dir = std::filesystem::temp_directory_path() / "chowring_spec_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "toy.json") << minimal_ring().dump();
  Catalog c = Catalog::from_directory(dir);
  CHECK(c.find_ring("toy") != nullptr);
  CHECK(c.find_ring("a3_tilde") == nullptr);
  CHECK_THROWS_AS(c.ring("a3_tilde"), UnknownName);
  std::filesystem::remove_all(dir);
}
