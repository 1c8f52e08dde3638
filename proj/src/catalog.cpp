#include "chowring/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>

namespace chowring {

namespace {

template <typename Map>
auto find_in(const Map& map, std::string_view name) -> decltype(map.begin()->second.get()) {
  auto it = map.find(name);
  return it == map.end() ? nullptr : it->second.get();
}

}  // namespace

Catalog Catalog::from_documents(const std::vector<std::pair<std::string, Json>>& docs) {
  Catalog cat;
  auto resolve = [&cat](const std::string& name) { return cat.find_ring(name); };
  auto insert = [](auto& map, auto loaded, const std::string& document) {
    const std::string name = loaded.name;
    auto [it, fresh] = map.emplace(name, nullptr);
    if (!fresh) throw SpecError(document, {{"/name", "duplicate name '" + name + "'"}});
    it->second = std::make_unique<decltype(loaded)>(std::move(loaded));
  };
  for (const auto& [document, doc] : docs) {
    if (spec_kind(doc) == SpecKind::Ring) insert(cat.rings_, load_ring_spec(doc, document), document);
  }
  for (const auto& [document, doc] : docs) {
    if (spec_kind(doc) == SpecKind::Relative) {
      insert(cat.relatives_, load_relative_spec(doc, resolve, document), document);
    }
  }
  for (const auto& [document, doc] : docs) {
    if (spec_kind(doc) == SpecKind::Tabulated) {
      insert(cat.tabulated_, load_tabulated_spec(doc, resolve, document), document);
    }
  }
  return cat;
}

Catalog Catalog::from_directory(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<std::pair<std::string, Json>> docs;
  for (const auto& f : files) docs.emplace_back(f.string(), read_json_file(f));
  return from_documents(docs);
}

const Catalog& Catalog::builtin() {
  static std::once_flag once;
  static std::unique_ptr<Catalog> instance;
  std::call_once(once, [] {
    if (const char* dir = std::getenv("CHOWRING_DATA_DIR"); dir && *dir) {
      instance = std::make_unique<Catalog>(from_directory(dir));
      return;
    }
    std::vector<std::pair<std::string, Json>> docs;
    for (const auto& [stem, text] : bundled_documents()) {
      const std::string document = std::string(stem) + ".json";
      docs.emplace_back(document, parse_json_text(text, document));
    }
    instance = std::make_unique<Catalog>(from_documents(docs));
  });
  return *instance;
}

const LoadedRing* Catalog::find_ring(std::string_view name) const { return find_in(rings_, name); }
const LoadedRelative* Catalog::find_relative(std::string_view name) const { return find_in(relatives_, name); }
const LoadedTabulated* Catalog::find_tabulated(std::string_view name) const {
  return find_in(tabulated_, name);
}

const LoadedRing& Catalog::ring(std::string_view name) const {
  if (auto* r = find_ring(name)) return *r;
  throw UnknownName("unknown ring '" + std::string(name) + "'");
}

const LoadedRelative& Catalog::relative(std::string_view name) const {
  if (auto* r = find_relative(name)) return *r;
  throw UnknownName("unknown relative ring '" + std::string(name) + "'");
}

const LoadedTabulated& Catalog::tabulated(std::string_view name) const {
  if (auto* t = find_tabulated(name)) return *t;
  throw UnknownName("unknown pushforward map '" + std::string(name) + "'");
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> primes;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

Rational group_order_gamma(int g, int ell) {
  if (g < 1 || ell < 1) throw std::invalid_argument("gamma needs g >= 1 and l >= 1");
  Rational result = Rational(ell).pow(static_cast<unsigned>(g * (2 * g + 1)));
  for (int p : prime_divisors(ell)) {
    for (int j = 1; j <= g; ++j) result *= Rational(1) - Rational(p).pow(static_cast<unsigned>(2 * j)).inverse();
  }
  return result;
}

Rational cusp_count_mu(int g, int ell, MuConvention convention) {
  if (g < 1 || ell < 1) throw std::invalid_argument("mu needs g >= 1 and l >= 1");
  Rational result = Rational(1, 2) * Rational(ell).pow(static_cast<unsigned>(2 * g));
  for (int p : prime_divisors(ell)) {
    if (convention == MuConvention::SingleFactor) {
      result *= Rational(1) - Rational(p).pow(static_cast<unsigned>(2 * g)).inverse();
    } else {
      for (int j = 1; j <= g; ++j) result *= Rational(1) - Rational(p).pow(static_cast<unsigned>(2 * j)).inverse();
    }
  }
  return result;
}

bool verify_level_identity(int ell) {
  const Rational lhs = Rational(1, 3) * Rational(ell) * cusp_count_mu(1, ell, MuConvention::SingleFactor) *
                       cusp_count_mu(2, ell, MuConvention::SingleFactor);
  const Rational rhs = group_order_gamma(2, ell) / (Rational(12) * Rational(ell).pow(3));
  return lhs == rhs;
}

}  // namespace chowring
