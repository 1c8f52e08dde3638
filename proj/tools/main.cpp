#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chowring/catalog.hpp"
#include "chowring/verify.hpp"

using namespace chowring;

namespace {

constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

/// A ring named on the command line: a catalog entry or a spec file.
struct RingHandle {
  const LoadedRing* plain = nullptr;
  const LoadedRelative* relative = nullptr;
  std::optional<LoadedRing> owned_plain;
  std::optional<LoadedRelative> owned_relative;

  const QuotientRing& ring() const { return plain ? *plain->ring : relative->ring->combined(); }
  Polynomial parse(const std::string& text) const {
    return plain ? plain->parse(text) : relative->parse(text);
  }
};

void open_ring(const std::string& name, RingHandle& h) {
  const Catalog& cat = Catalog::builtin();
  if (name.size() > 5 && name.substr(name.size() - 5) == ".json") {
    Json doc = read_json_file(name);
    auto resolve = [&cat](const std::string& n) { return cat.find_ring(n); };
    if (spec_kind(doc) == SpecKind::Relative) {
      h.owned_relative = load_relative_spec(doc, resolve, name);
      h.relative = &*h.owned_relative;
    } else if (spec_kind(doc) == SpecKind::Ring) {
      h.owned_plain = load_ring_spec(doc, name);
      h.plain = &*h.owned_plain;
    } else {
      throw std::invalid_argument(name + " does not describe a ring");
    }
    return;
  }
  if ((h.plain = cat.find_ring(name))) return;
  if ((h.relative = cat.find_relative(name))) return;
  throw UnknownName("unknown ring '" + name + "'");
}

Rational integrate(const RingHandle& h, const Polynomial& p) {
  if (h.plain) {
    if (!h.plain->functional) throw std::runtime_error("ring '" + h.plain->name + "' has no degree functional");
    return h.plain->functional->degree(p);
  }
  const LoadedRing& base = Catalog::builtin().ring(h.relative->base_name);
  if (!base.functional) throw std::runtime_error("base ring has no degree functional");
  return relative_degree(*h.relative->ring, h.relative->rule, *base.functional, p);
}

int top_degree(const RingHandle& h) {
  if (h.plain && h.plain->functional) return h.plain->functional->top_degree();
  auto top = h.ring().top_degree();
  if (!top) throw std::runtime_error("ring is not finite dimensional in low degrees");
  return *top;
}

std::vector<Polynomial> parse_list(const RingHandle& h, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(h.parse(t));
  return out;
}

std::vector<Polynomial> basis_of(const QuotientRing& ring, int degree) {
  std::vector<Polynomial> out;
  for (const auto& m : ring.standard_monomials(degree)) {
    out.push_back(Polynomial::term(ring.generators(), m, Rational(1)));
  }
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

/// Splits each argument on commas so both "--values 1,2" and "--values 1 2" work.
std::vector<std::string> split_commas(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    std::stringstream ss(a);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) out.push_back(item);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in graded Chow rings of compactified moduli of abelian varieties"};
  app.require_subcommand(1);

  std::string ring_name;
  std::string expr;
  std::optional<int> max_degree;
  int deg = 0;
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  std::vector<std::string> values;
  std::vector<std::string> probes;
  std::string map_name;
  std::string table_id;
  std::string scope = "all";
  std::string format = "text";

  auto* nf = app.add_subcommand("nf", "Normal form of an expression");
  nf->add_option("--ring", ring_name, "Catalog ring name or spec file")->required();
  nf->add_option("expr", expr, "Polynomial expression")->required();

  auto* degree_cmd = app.add_subcommand("degree", "Degree (integration value) of a top-degree class");
  degree_cmd->add_option("--ring", ring_name, "Catalog ring name or spec file")->required();
  degree_cmd->add_option("expr", expr, "Polynomial expression")->required();

  auto* hilbert = app.add_subcommand("hilbert", "Ranks of the graded pieces");
  hilbert->add_option("--ring", ring_name, "Catalog ring name or spec file")->required();
  hilbert->add_option("--max", max_degree, "Largest degree (default: top degree)")->check(CLI::NonNegativeNumber);

  auto* pairing = app.add_subcommand("pairing", "Intersection pairing matrix");
  pairing->add_option("--ring", ring_name, "Catalog ring name or spec file")->required();
  pairing->add_option("--deg", deg, "Degree of the row classes")->required()->check(CLI::NonNegativeNumber);
  pairing->add_option("--rows", rows, "Row classes (default: standard basis)");
  pairing->add_option("--cols", cols, "Column classes (default: standard basis)");

  auto* solve = app.add_subcommand("solve-class", "Recover a class from its pairing values");
  solve->add_option("--ring", ring_name, "Catalog ring name or spec file")->required();
  solve->add_option("--deg", deg, "Degree of the unknown class")->required()->check(CLI::NonNegativeNumber);
  solve->add_option("--values", values, "Pairing values, one per probe")->required();
  solve->add_option("--probes", probes, "Probe classes (default: standard basis)");

  auto* push = app.add_subcommand("push", "Pushforward along a relative ring or a tabulated map");
  push->add_option("--map", map_name, "x2_tilde, torelli, or another catalog map")->required();
  push->add_option("expr", expr, "Class, or a linear combination of symbols")->required();

  auto* tables = app.add_subcommand("tables", "Recompute and print the published tables");
  tables->add_option("--id", table_id, "Only this table");

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--scope", scope, "all, a ring or map name, table:ID, or level");
  verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*nf) {
      RingHandle h;
      open_ring(ring_name, h);
      std::cout << render(h.ring().reduce(h.parse(expr))) << "\n";
      return 0;
    }
    if (*degree_cmd) {
      RingHandle h;
      open_ring(ring_name, h);
      std::cout << integrate(h, h.parse(expr)).str() << "\n";
      return 0;
    }
    if (*hilbert) {
      RingHandle h;
      open_ring(ring_name, h);
      const int max = max_degree ? *max_degree : top_degree(h);
      std::vector<std::string> ranks;
      for (int r : h.ring().hilbert_function(max)) ranks.push_back(std::to_string(r));
      std::cout << join(ranks, ",") << "\n";
      return 0;
    }
    if (*pairing) {
      RingHandle h;
      open_ring(ring_name, h);
      const int top = top_degree(h);
      if (!h.plain) throw std::invalid_argument("pairing needs a ring with a degree functional");
      if (!h.plain->functional) throw std::runtime_error("ring has no degree functional");
      auto row_classes = rows.empty() ? basis_of(h.ring(), deg) : parse_list(h, split_commas(rows));
      auto col_classes = cols.empty() ? basis_of(h.ring(), top - deg) : parse_list(h, split_commas(cols));
      RationalMatrix m = pairing_matrix(*h.plain->functional, deg, row_classes, col_classes);
      std::cout << "rows: ";
      std::vector<std::string> labels;
      for (const auto& r : row_classes) labels.push_back(render(r));
      std::cout << join(labels, ", ") << "\ncols: ";
      labels.clear();
      for (const auto& c : col_classes) labels.push_back(render(c));
      std::cout << join(labels, ", ") << "\n";
      for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<std::string> cells;
        for (std::size_t j = 0; j < m.cols(); ++j) cells.push_back(m(i, j).str());
        std::cout << join(cells, " ") << "\n";
      }
      return 0;
    }
    if (*solve) {
      RingHandle h;
      open_ring(ring_name, h);
      if (!h.plain || !h.plain->functional) throw std::invalid_argument("solve-class needs a ring with a degree functional");
      const int top = top_degree(h);
      auto probe_classes = probes.empty() ? basis_of(h.ring(), top - deg) : parse_list(h, split_commas(probes));
      std::vector<Rational> vals;
      for (const auto& v : split_commas(values)) vals.push_back(Rational::parse(v));
      std::cout << render(solve_class_from_pairings(*h.plain->functional, deg, probe_classes, vals)) << "\n";
      return 0;
    }
    if (*push) {
      const Catalog& cat = Catalog::builtin();
      if (const auto* rel = cat.find_relative(map_name)) {
        std::cout << render(pushforward(*rel->ring, rel->rule, rel->parse(expr))) << "\n";
        return 0;
      }
      const LoadedTabulated& map = cat.tabulated(map_name);
      std::cout << render(push_combination(*map.map, map.map->parse_combination(expr))) << "\n";
      return 0;
    }
    if (*tables) {
      const Catalog& cat = Catalog::builtin();
      bool found = false;
      bool ok = true;
      for (const auto& t : catalog_tables(cat)) {
        if (!table_id.empty() && t.spec->id != table_id) continue;
        found = true;
        VerificationReport report = run_verification(cat, "table:" + t.spec->id);
        ok = ok && report.ok();
        std::cout << render_table(t, report) << "\n";
      }
      if (!found) throw UnknownName("unknown table '" + table_id + "'");
      return ok ? 0 : kVerificationFailure;
    }
    if (*verify) {
      VerificationReport report = run_verification(Catalog::builtin(), scope);
      if (format == "json") {
        std::cout << report_json(report).dump(2) << "\n";
      } else {
        std::cout << report_text(report);
      }
      return report.ok() ? 0 : kVerificationFailure;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
