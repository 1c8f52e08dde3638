#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chowring/spec_file.hpp"

namespace chowring {

/// Every data/*.json document, compiled in: (stem, text).
const std::vector<std::pair<std::string_view, std::string_view>>& bundled_documents();

class UnknownName : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rings, relative rings and tabulated pushforwards loaded from spec
/// documents. Immutable once built.
class Catalog {
 public:
  /// The bundled documents, or the *.json files under $CHOWRING_DATA_DIR
  /// when that variable is set. Loaded once, on first use.
  static const Catalog& builtin();

  /// Loads ring documents first, then relative and tabulated ones, so
  /// documents may refer to rings defined anywhere in the set.
  static Catalog from_documents(const std::vector<std::pair<std::string, Json>>& docs);
  static Catalog from_directory(const std::filesystem::path& dir);

  const LoadedRing* find_ring(std::string_view name) const;
  const LoadedRelative* find_relative(std::string_view name) const;
  const LoadedTabulated* find_tabulated(std::string_view name) const;

  const LoadedRing& ring(std::string_view name) const;
  const LoadedRelative& relative(std::string_view name) const;
  const LoadedTabulated& tabulated(std::string_view name) const;

  const std::map<std::string, std::unique_ptr<LoadedRing>, std::less<>>& rings() const { return rings_; }
  const std::map<std::string, std::unique_ptr<LoadedRelative>, std::less<>>& relatives() const {
    return relatives_;
  }
  const std::map<std::string, std::unique_ptr<LoadedTabulated>, std::less<>>& tabulated_maps() const {
    return tabulated_;
  }

 private:
  std::map<std::string, std::unique_ptr<LoadedRing>, std::less<>> rings_;
  std::map<std::string, std::unique_ptr<LoadedRelative>, std::less<>> relatives_;
  std::map<std::string, std::unique_ptr<LoadedTabulated>, std::less<>> tabulated_;
};

std::vector<int> prime_divisors(int n);

/// Order of Sp(2g, Z/l): l^{g(2g+1)} prod_{p | l} prod_{j=1..g} (1 - p^{-2j}).
Rational group_order_gamma(int g, int ell);

enum class MuConvention {
  AsPrinted,     // (1/2) l^{2g} prod_{p | l} prod_{j=1..g} (1 - p^{-2j})
  SingleFactor,  // (1/2) l^{2g} prod_{p | l} (1 - p^{-2g})
};

/// Number of maximal dimensional cusps of level l.
Rational cusp_count_mu(int g, int ell, MuConvention convention);

/// (1/3) l mu_1(l) mu_2(l) == gamma(2, l) / (12 l^3), single-factor mu.
bool verify_level_identity(int ell);

}  // namespace chowring
