#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chowring/catalog.hpp"

namespace chowring {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view status_name(CheckStatus s);

struct CheckResult {
  std::string id;
  std::string citation;
  std::string expected;
  std::string computed;
  CheckStatus status = CheckStatus::Fail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;  // sorted by id
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;

  bool ok() const { return fail == 0; }
};

class UnknownScope : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Scopes: "all", a ring / relative ring / pushforward map name,
/// "table:ID", or "level". Checks run concurrently; the report is sorted.
VerificationReport run_verification(const Catalog& catalog, std::string_view scope = "all");

/// Every scope name run_verification accepts, besides "all".
std::vector<std::string> verification_scopes(const Catalog& catalog);

struct TableRef {
  std::string owner;  // ring, relative ring or pushforward map
  const TableSpec* spec = nullptr;
};

/// Every expected table in the catalog, ordered by id.
std::vector<TableRef> catalog_tables(const Catalog& catalog);

/// The table laid out as published, with recomputed values; entries that
/// disagree with the published value are marked with '!'.
std::string render_table(const TableRef& table, const VerificationReport& checks);

std::string report_text(const VerificationReport& report);
Json report_json(const VerificationReport& report);

}  // namespace chowring
