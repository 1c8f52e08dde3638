#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chowring/graded_ring.hpp"
#include "chowring/parser.hpp"
#include "chowring/relative.hpp"

namespace chowring {

using Json = nlohmann::ordered_json;

struct SpecIssue {
  std::string pointer;  // JSON pointer into the document, e.g. "/relations/2"
  std::string message;
};

/// All problems found while loading one document.
class SpecError : public std::runtime_error {
 public:
  SpecError(std::string document, std::vector<SpecIssue> issues);

  const std::string& document() const { return document_; }
  const std::vector<SpecIssue>& issues() const { return issues_; }

 private:
  std::string document_;
  std::vector<SpecIssue> issues_;
};

struct NamedClass {
  std::string symbol;
  std::string ring;
  Polynomial expression;
  int degree = 0;
  std::string citation;
};

struct DegreeExpectation {
  std::string label;
  Polynomial expr;
  Rational value;
  std::string citation;
};

struct IdentityExpectation {
  std::string lhs_text;
  std::string rhs_text;
  Polynomial lhs;
  Polynomial rhs;
  bool equal = true;
  std::string citation;
};

/// Generator images are kept as text: they are parsed once the other ring
/// is known.
struct EquivalenceExpectation {
  std::string other_ring;
  std::map<std::string, std::string> forward;
  std::map<std::string, std::string> backward;
  bool equivalent = true;
  std::string citation;
  std::string pointer;
};

struct PushforwardExpectation {
  std::string label;
  Polynomial expr;      // over the relative ring
  Polynomial expected;  // over the base ring
  std::string citation;
};

struct CombinationExpectation {
  std::string id;
  std::string combo_text;
  Combination combo;
  Polynomial expected;
  std::string expected_text;
  std::string citation;
  bool literal = false;  // compare polynomials term by term, before reduction
};

/// One identity whose bookkeeping admits several readings. Each reading is
/// evaluated; the check passes when at least one balances.
struct ConventionReading {
  std::string name;
  std::string lhs_text;
  std::string rhs_text;
  Polynomial lhs;
  Polynomial rhs;
};

struct ConventionCheck {
  std::string id;
  std::string citation;
  std::vector<ConventionReading> readings;
};

struct TableEntry {
  std::string label;
  std::optional<Polynomial> expr;  // absent: reference data only
  std::vector<Rational> values;    // more than one: competing published values
  std::string note;
};

/// One published table with enough information to recompute it.
///   pairing:     values[i][j] = deg(rows[i] * cols[j])
///   degrees:     entries[k].values = deg(entries[k].expr)
///   solve_class: scale * values[0][j] = deg(X * cols[j]); X must equal expected_class
///   coordinates: scale * image(row_labels[i]) = sum_j values[i][j] * cols[j]
struct TableSpec {
  std::string id;
  std::string kind;
  std::string title;
  std::string citation;
  int degree = 0;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<Polynomial> rows;
  std::vector<Polynomial> cols;
  std::vector<std::vector<Rational>> values;
  std::vector<TableEntry> entries;
  Rational scale{1};
  std::optional<Polynomial> expected_class;
  std::string expected_label;
  bool nonsingular = false;
};

struct Expectations {
  std::optional<std::vector<int>> hilbert;
  std::string hilbert_citation;
  std::vector<DegreeExpectation> degrees;
  std::vector<IdentityExpectation> identities;
  std::vector<EquivalenceExpectation> equivalences;
  std::vector<PushforwardExpectation> pushforwards;
  std::vector<CombinationExpectation> combinations;
  std::vector<ConventionCheck> conventions;
  std::vector<TableSpec> tables;
};

struct LoadedRing {
  std::string name;
  std::string title;
  std::string citation;
  QuotientRingPtr ring;
  std::optional<DegreeFunctional> functional;
  std::vector<NamedClass> named_classes;
  NamedClasses named;
  Expectations expected;
  Json source;

  Polynomial parse(std::string_view text) const {
    return parse_polynomial(text, ring->generators(), named);
  }
};

struct LoadedRelative {
  std::string name;
  std::string title;
  std::string citation;
  std::string base_name;
  std::shared_ptr<const RelativeRing> ring;
  PushforwardRule rule;
  NamedClasses named;  // base named classes, pulled back
  Expectations expected;
  Json source;

  Polynomial parse(std::string_view text) const {
    return parse_polynomial(text, ring->generators(), named);
  }
};

struct LoadedTabulated {
  std::string name;
  std::string title;
  std::string citation;
  std::string target_name;
  std::shared_ptr<const TabulatedPushforward> map;
  Expectations expected;
  Json source;
};

enum class SpecKind { Ring, Relative, Tabulated };

SpecKind spec_kind(const Json& doc);

Json read_json_file(const std::filesystem::path& path);
Json parse_json_text(std::string_view text, const std::string& document);

/// Loads a self-contained ring document. Throws SpecError listing every
/// problem with its JSON pointer.
LoadedRing load_ring_spec(const Json& doc, const std::string& document = "<memory>");
LoadedRing load_ring_spec(const std::filesystem::path& path);

using RingResolver = std::function<const LoadedRing*(const std::string&)>;

LoadedRelative load_relative_spec(const Json& doc, const RingResolver& resolve,
                                  const std::string& document = "<memory>");
LoadedTabulated load_tabulated_spec(const Json& doc, const RingResolver& resolve,
                                    const std::string& document = "<memory>");

/// Serializes the presentation in canonical form; expectations are copied
/// through unchanged.
Json save_ring_spec(const LoadedRing& ring);

}  // namespace chowring
