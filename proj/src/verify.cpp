#include "chowring/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <sstream>

#include "chowring/linalg.hpp"

namespace chowring {

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "fail";
}

namespace {

using Checks = std::vector<CheckResult>;

struct Task {
  std::vector<std::string> scopes;
  std::function<Checks()> run;
};

std::string compact(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n') out += c;
  }
  return out;
}

std::string two_digits(std::size_t i) {
  std::string s = std::to_string(i + 1);
  return s.size() < 2 ? "0" + s : s;
}

CheckResult verdict(std::string id, std::string citation, std::string expected, std::string computed,
                    bool ok) {
  return {std::move(id), std::move(citation), std::move(expected), std::move(computed),
          ok ? CheckStatus::Pass : CheckStatus::Fail};
}

/// Runs `body`; any exception becomes a failed check carrying the message.
CheckResult guarded(const std::string& id, const std::string& citation, const std::string& expected,
                    const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return verdict(id, citation, expected, std::string("error: ") + e.what(), false);
  }
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string equality_word(bool equal) { return equal ? "equal" : "not equal"; }

/// Degree evaluation shared by plain and relative rings.
using Integrate = std::function<Rational(const Polynomial&)>;

Checks table_checks(const TableSpec& t, const Integrate& integrate, const QuotientRing& ring,
                    const DegreeFunctional* functional) {
  Checks out;
  const std::string prefix = "table:" + t.id + "/";
  const std::string citation = t.citation;
  if (t.kind == "pairing") {
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      for (std::size_t j = 0; j < t.cols.size(); ++j) {
        const std::string id = prefix + two_digits(i) + "-" + two_digits(j) + ":" +
                               compact(t.row_labels[i]) + "*" + compact(t.col_labels[j]);
        const std::string expected = t.values[i][j].str();
        out.push_back(guarded(id, citation, expected, [&] {
          Rational v = integrate(t.rows[i] * t.cols[j]);
          return verdict(id, citation, expected, v.str(), v == t.values[i][j]);
        }));
      }
    }
  } else if (t.kind == "degrees") {
    for (std::size_t k = 0; k < t.entries.size(); ++k) {
      const TableEntry& e = t.entries[k];
      const std::string id = prefix + two_digits(k) + ":" + compact(e.label);
      std::string expected;
      for (std::size_t v = 0; v < e.values.size(); ++v) expected += (v ? " | " : "") + e.values[v].str();
      if (!e.expr) {
        out.push_back({id, citation, expected, "not computed: " + e.note, CheckStatus::Skipped});
        continue;
      }
      out.push_back(guarded(id, citation, expected, [&] {
        Rational v = integrate(*e.expr);
        if (e.values.size() != 1) {
          return CheckResult{id, citation, expected, v.str() + " (competing values, not asserted)",
                             CheckStatus::Skipped};
        }
        return verdict(id, citation, expected, v.str(), v == e.values.front());
      }));
    }
  } else if (t.kind == "solve_class") {
    std::vector<Rational> scaled;
    for (const auto& v : t.values.front()) scaled.push_back(t.scale * v);
    for (std::size_t j = 0; j < t.cols.size(); ++j) {
      const std::string id = prefix + two_digits(j) + ":" + compact(t.expected_label) + "*" +
                             compact(t.col_labels[j]);
      const std::string expected = scaled[j].str();
      out.push_back(guarded(id, citation, expected, [&] {
        Rational v = integrate(*t.expected_class * t.cols[j]);
        return verdict(id, citation, expected, v.str(), v == scaled[j]);
      }));
    }
    const std::string id = prefix + "class";
    const std::string expected = render(ring.reduce(*t.expected_class));
    out.push_back(guarded(id, citation, expected, [&] {
      if (!functional) throw std::runtime_error("ring has no degree functional");
      Polynomial x = solve_class_from_pairings(*functional, t.degree, t.cols, scaled);
      return verdict(id, citation, expected, render(ring.reduce(x)),
                     ring.classes_equal(x, *t.expected_class));
    }));
  }
  return out;
}

Checks coordinate_checks(const TableSpec& t, const TabulatedPushforward& map) {
  Checks out;
  const QuotientRing& target = map.target();
  const std::string prefix = "table:" + t.id + "/";
  const std::size_t n = t.cols.size();
  const auto& standard = target.standard_monomials(t.degree);
  RationalMatrix basis(standard.size(), n);
  for (std::size_t j = 0; j < n; ++j) {
    auto coords = target.coordinates(t.cols[j], t.degree);
    for (std::size_t i = 0; i < standard.size(); ++i) basis(i, j) = coords[i];
  }
  for (std::size_t r = 0; r < t.row_labels.size(); ++r) {
    std::optional<SolveResult> solved;
    std::string error;
    try {
      Polynomial image = t.scale * map.symbol(t.row_labels[r]).image;
      solved = solve_linear(basis, target.coordinates(image, t.degree));
    } catch (const std::exception& e) {
      error = e.what();
    }
    for (std::size_t j = 0; j < n; ++j) {
      const std::string id = prefix + two_digits(r) + "-" + two_digits(j) + ":" + t.row_labels[r] + "@" +
                             compact(t.col_labels[j]);
      const std::string expected = t.values[r][j].str();
      if (!solved || solved->status != SolveStatus::Unique) {
        out.push_back(verdict(id, t.citation, expected,
                              error.empty() ? "error: image is not in the span of the basis" : "error: " + error,
                              false));
        continue;
      }
      out.push_back(verdict(id, t.citation, expected, solved->x[j].str(), solved->x[j] == t.values[r][j]));
    }
  }
  return out;
}

void add_ring_tasks(const Catalog& cat, const LoadedRing& r, std::vector<Task>& tasks) {
  const std::string& name = r.name;
  const DegreeFunctional* functional = r.functional ? &*r.functional : nullptr;
  Integrate integrate = [functional](const Polynomial& p) {
    if (!functional) throw std::runtime_error("ring has no degree functional");
    return functional->degree(p);
  };

  tasks.push_back({{name}, [&r, &cat, name, functional, integrate] {
    Checks out;
    const QuotientRing& ring = *r.ring;
    const Expectations& ex = r.expected;
    if (ex.hilbert) {
      const std::string id = name + "/hilbert";
      const std::string expected = join_ints(*ex.hilbert);
      out.push_back(guarded(id, ex.hilbert_citation, expected, [&] {
        auto h = ring.hilbert_function(static_cast<int>(ex.hilbert->size()) - 1);
        return verdict(id, ex.hilbert_citation, expected, join_ints(h), h == *ex.hilbert);
      }));
    }
    for (const auto& d : ex.degrees) {
      const std::string id = name + "/degree:" + compact(d.label);
      out.push_back(guarded(id, d.citation, d.value.str(), [&] {
        Rational v = integrate(d.expr);
        return verdict(id, d.citation, d.value.str(), v.str(), v == d.value);
      }));
    }
    for (const auto& e : ex.identities) {
      const std::string id = name + "/identity:" + compact(e.lhs_text) + (e.equal ? "=" : "!=") +
                             compact(e.rhs_text);
      out.push_back(guarded(id, e.citation, equality_word(e.equal), [&] {
        bool eq = ring.classes_equal(e.lhs, e.rhs);
        return verdict(id, e.citation, equality_word(e.equal), equality_word(eq), eq == e.equal);
      }));
    }
    for (const auto& e : ex.equivalences) {
      const std::string id = name + "/equivalence:" + e.other_ring;
      const std::string expected = e.equivalent ? "equivalent" : "not equivalent";
      out.push_back(guarded(id, e.citation, expected, [&] {
        const LoadedRing& other = cat.ring(e.other_ring);
        RingMap forward;
        RingMap backward;
        for (const auto& [g, text] : e.forward) forward.emplace(g, other.parse(text));
        for (const auto& [g, text] : e.backward) backward.emplace(g, r.parse(text));
        bool eq = presentations_equivalent(ring, *other.ring, forward, backward);
        return verdict(id, e.citation, expected, eq ? "equivalent" : "not equivalent", eq == e.equivalent);
      }));
    }
    for (const auto& t : ex.tables) {
      if (t.kind != "pairing" || !t.nonsingular) continue;
      const std::string id = name + "/duality:" + t.id;
      out.push_back(guarded(id, t.citation, "nonzero determinant", [&] {
        if (!functional) throw std::runtime_error("ring has no degree functional");
        Rational det = pairing_matrix(*functional, t.degree, t.rows, t.cols).determinant();
        return verdict(id, t.citation, "nonzero determinant", "determinant " + det.str(), !det.is_zero());
      }));
    }
    return out;
  }});

  for (const auto& t : r.expected.tables) {
    tasks.push_back({{name, "table:" + t.id}, [&t, &r, functional, integrate] {
      return table_checks(t, integrate, *r.ring, functional);
    }});
  }
}

void add_relative_tasks(const Catalog& cat, const LoadedRelative& r, std::vector<Task>& tasks) {
  const std::string& name = r.name;
  const LoadedRing& base = cat.ring(r.base_name);
  const DegreeFunctional* base_functional = base.functional ? &*base.functional : nullptr;
  Integrate integrate = [&r, base_functional](const Polynomial& p) {
    if (!base_functional) throw std::runtime_error("base ring has no degree functional");
    return relative_degree(*r.ring, r.rule, *base_functional, p);
  };

  tasks.push_back({{name}, [&r, &base, name] {
    Checks out;
    const RelativeRing& rr = *r.ring;
    for (const auto& e : r.expected.identities) {
      const std::string id = name + "/identity:" + compact(e.lhs_text) + (e.equal ? "=" : "!=") +
                             compact(e.rhs_text);
      out.push_back(guarded(id, e.citation, equality_word(e.equal), [&] {
        bool eq = rr.combined().classes_equal(e.lhs, e.rhs);
        return verdict(id, e.citation, equality_word(e.equal), equality_word(eq), eq == e.equal);
      }));
    }
    for (const auto& p : r.expected.pushforwards) {
      const std::string id = name + "/pushforward:" + compact(p.label);
      const std::string expected = render(base.ring->reduce(p.expected));
      out.push_back(guarded(id, p.citation, expected, [&] {
        Polynomial v = pushforward(rr, r.rule, p.expr);
        return verdict(id, p.citation, expected, render(v), base.ring->classes_equal(v, p.expected));
      }));
    }
    // Every monomial up to the top degree, pushed forward along several
    // random fiber-only reduction paths, must agree with the normal form.
    const std::string id = name + "/well-defined";
    const std::string citation = "pushforward rule: base-linear, independent of reduction path";
    out.push_back(guarded(id, citation, "all reduction paths agree", [&] {
      std::mt19937_64 rng(20240601);
      const int top = base.ring->top_degree().value_or(0) + r.rule.codimension_shift;
      std::size_t count = 0;
      for (int d = 0; d <= top; ++d) {
        for (const auto& m : monomials_of_degree(*rr.generators(), d)) {
          Polynomial p = Polynomial::term(rr.generators(), m, Rational(1));
          Polynomial reference = pushforward(rr, r.rule, p);
          for (int path = 0; path < 3; ++path) {
            Polynomial other = pushforward_module_form(rr, r.rule, rr.fiber_reduce(p, &rng));
            if (!base.ring->classes_equal(reference, other)) {
              return verdict(id, citation, "all reduction paths agree",
                             "paths disagree on " + render(p), false);
            }
          }
          ++count;
        }
      }
      return verdict(id, citation, "all reduction paths agree",
                     "all reduction paths agree on " + std::to_string(count) + " monomials", true);
    }));
    return out;
  }});

  for (const auto& t : r.expected.tables) {
    tasks.push_back({{name, "table:" + t.id}, [&t, &r, integrate] {
      return table_checks(t, integrate, r.ring->combined(), nullptr);
    }});
  }
}

void add_tabulated_tasks(const LoadedTabulated& t, std::vector<Task>& tasks) {
  const std::string& name = t.name;
  tasks.push_back({{name}, [&t, name] {
    Checks out;
    const TabulatedPushforward& map = *t.map;
    const QuotientRing& target = map.target();
    for (const auto& c : t.expected.combinations) {
      const std::string id = name + "/combo:" + c.id;
      const std::string expected = c.literal ? render(c.expected) : render(target.reduce(c.expected));
      out.push_back(guarded(id, c.citation, expected, [&] {
        Polynomial v = push_combination(map, c.combo);
        if (c.literal) return verdict(id, c.citation, expected, render(v), v == c.expected);
        return verdict(id, c.citation, expected, render(target.reduce(v)), target.classes_equal(v, c.expected));
      }));
    }
    for (const auto& conv : t.expected.conventions) {
      std::vector<std::string> balancing;
      for (const auto& reading : conv.readings) {
        const std::string id = name + "/convention:" + conv.id + "/" + reading.name;
        const bool balances = target.classes_equal(reading.lhs, reading.rhs);
        if (balances) balancing.push_back(reading.name);
        std::string computed = balances ? "balances" : "does not balance: lhs - rhs = " +
                                                           render(target.reduce(reading.lhs - reading.rhs));
        out.push_back({id, conv.citation, "reported, not asserted", computed, CheckStatus::Skipped});
      }
      const std::string id = name + "/convention:" + conv.id;
      std::string computed = "balances under:";
      for (const auto& b : balancing) computed += " " + b;
      if (balancing.empty()) computed = "no reading balances";
      out.push_back(verdict(id, conv.citation, "some reading balances", computed, !balancing.empty()));
    }
    return out;
  }});
  for (const auto& table : t.expected.tables) {
    tasks.push_back({{name, "table:" + table.id}, [&table, &t] { return coordinate_checks(table, *t.map); }});
  }
}

void add_level_tasks(std::vector<Task>& tasks) {
  tasks.push_back({{"level"}, [] {
    Checks out;
    const std::string gamma_cite = "order of Sp(2g, Z/l)";
    const std::string mu_cite = "number of maximal dimensional cusps";
    auto eq = [&](const std::string& id, const std::string& cite, const Rational& expected,
                  const std::function<Rational()>& f) {
      out.push_back(guarded(id, cite, expected.str(), [&] {
        Rational v = f();
        return verdict(id, cite, expected.str(), v.str(), v == expected);
      }));
    };
    eq("level/gamma(1,3)", gamma_cite, 24, [] { return group_order_gamma(1, 3); });
    eq("level/gamma(2,3)", gamma_cite, 51840, [] { return group_order_gamma(2, 3); });
    eq("level/gamma(3,1)", gamma_cite, 1, [] { return group_order_gamma(3, 1); });
    eq("level/mu(1,3)/single-factor", mu_cite, 4, [] { return cusp_count_mu(1, 3, MuConvention::SingleFactor); });
    eq("level/mu(1,3)/as-printed", mu_cite, 4, [] { return cusp_count_mu(1, 3, MuConvention::AsPrinted); });
    eq("level/mu(2,3)/single-factor", mu_cite, 40, [] { return cusp_count_mu(2, 3, MuConvention::SingleFactor); });
    {
      Rational printed = cusp_count_mu(2, 3, MuConvention::AsPrinted);
      out.push_back({"level/mu(2,3)/as-printed", mu_cite, "an integral cusp count",
                     printed.str() + (printed.is_integer() ? "" : " (not an integer; flagged)"),
                     CheckStatus::Skipped});
    }
    const std::string id_cite = "(1/3) l mu_1(l) mu_2(l) = (1/12) gamma/l^3";
    for (int ell = 3; ell <= 7; ++ell) {
      const std::string id = "level/strata-identity(l=" + std::to_string(ell) + ")";
      out.push_back(guarded(id, id_cite, "holds", [&] {
        bool ok = verify_level_identity(ell);
        return verdict(id, id_cite, "holds", ok ? "holds" : "fails", ok);
      }));
    }
    return out;
  }});
}

std::vector<Task> all_tasks(const Catalog& cat) {
  std::vector<Task> tasks;
  for (const auto& [name, r] : cat.rings()) add_ring_tasks(cat, *r, tasks);
  for (const auto& [name, r] : cat.relatives()) add_relative_tasks(cat, *r, tasks);
  for (const auto& [name, t] : cat.tabulated_maps()) add_tabulated_tasks(*t, tasks);
  add_level_tasks(tasks);
  return tasks;
}

}  // namespace

std::vector<std::string> verification_scopes(const Catalog& catalog) {
  std::set<std::string> scopes;
  for (const auto& t : all_tasks(catalog)) scopes.insert(t.scopes.begin(), t.scopes.end());
  return {scopes.begin(), scopes.end()};
}

VerificationReport run_verification(const Catalog& catalog, std::string_view scope) {
  std::vector<Task> selected;
  for (auto& t : all_tasks(catalog)) {
    if (scope == "all" || std::find(t.scopes.begin(), t.scopes.end(), scope) != t.scopes.end()) {
      selected.push_back(std::move(t));
    }
  }
  if (selected.empty()) throw UnknownScope("unknown verification scope '" + std::string(scope) + "'");

  std::vector<std::future<Checks>> futures;
  futures.reserve(selected.size());
  for (const auto& t : selected) futures.push_back(std::async(std::launch::async, t.run));

  VerificationReport report;
  for (auto& f : futures) {
    for (auto& c : f.get()) report.checks.push_back(std::move(c));
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  for (const auto& c : report.checks) {
    switch (c.status) {
      case CheckStatus::Pass:
        ++report.pass;
        break;
      case CheckStatus::Fail:
        ++report.fail;
        break;
      case CheckStatus::Skipped:
        ++report.skipped;
        break;
    }
  }
  return report;
}

std::vector<TableRef> catalog_tables(const Catalog& catalog) {
  std::vector<TableRef> out;
  auto add = [&out](const std::string& owner, const Expectations& ex) {
    for (const auto& t : ex.tables) out.push_back({owner, &t});
  };
  for (const auto& [name, r] : catalog.rings()) add(name, r->expected);
  for (const auto& [name, r] : catalog.relatives()) add(name, r->expected);
  for (const auto& [name, t] : catalog.tabulated_maps()) add(name, t->expected);
  std::sort(out.begin(), out.end(), [](const TableRef& a, const TableRef& b) { return a.spec->id < b.spec->id; });
  return out;
}

std::string render_table(const TableRef& table, const VerificationReport& checks) {
  const TableSpec& t = *table.spec;
  const std::string prefix = "table:" + t.id + "/";
  std::vector<const CheckResult*> entries;
  for (const auto& c : checks.checks) {
    if (c.id.rfind(prefix, 0) == 0) entries.push_back(&c);
  }
  auto cell = [](const CheckResult* c) {
    if (!c) return std::string("?");
    if (c->status == CheckStatus::Skipped) return "[" + c->expected + "]";
    std::string v = c->computed;
    if (c->status == CheckStatus::Fail) v += "! (published " + c->expected + ")";
    return v;
  };

  std::ostringstream os;
  os << "Table " << t.id << " (" << table.owner << ")";
  if (!t.title.empty()) os << ": " << t.title;
  os << "\n";
  if (t.kind == "pairing" || t.kind == "coordinates") {
    std::vector<std::vector<std::string>> grid;
    grid.push_back({""});
    for (const auto& c : t.col_labels) grid.front().push_back(c);
    for (std::size_t i = 0; i < t.row_labels.size(); ++i) {
      std::vector<std::string> row{t.row_labels[i]};
      for (std::size_t j = 0; j < t.col_labels.size(); ++j) {
        const std::size_t k = i * t.col_labels.size() + j;
        row.push_back(cell(k < entries.size() ? entries[k] : nullptr));
      }
      grid.push_back(std::move(row));
    }
    std::vector<std::size_t> width(grid.front().size(), 0);
    for (const auto& row : grid) {
      for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
    }
    for (const auto& row : grid) {
      std::string line;
      for (std::size_t j = 0; j < row.size(); ++j) {
        line += row[j] + std::string(width[j] - row[j].size() + 2, ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      os << "  " << line << "\n";
    }
    if (t.kind == "coordinates") os << "  (rows are " << t.scale.str() << " times the image)\n";
  } else if (t.kind == "degrees") {
    for (std::size_t k = 0; k < t.entries.size(); ++k) {
      os << "  " << t.entries[k].label << " = " << cell(k < entries.size() ? entries[k] : nullptr) << "\n";
    }
  } else if (t.kind == "solve_class") {
    for (std::size_t j = 0; j < t.col_labels.size(); ++j) {
      os << "  deg(" << t.expected_label << " * " << t.col_labels[j]
         << ") = " << cell(j < entries.size() ? entries[j] : nullptr) << "\n";
    }
    for (const auto* c : entries) {
      if (c->id == prefix + "class") os << "  solved class: " << c->computed << "\n";
    }
  }
  return os.str();
}

std::string report_text(const VerificationReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    std::string tag(status_name(c.status));
    std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
    os << tag << "  " << c.id << "\n";
    os << "      expected: " << c.expected << "\n";
    os << "      computed: " << c.computed << "\n";
    if (!c.citation.empty()) os << "      citation: " << c.citation << "\n";
  }
  os << "summary: " << report.pass << " pass, " << report.fail << " fail, " << report.skipped
     << " skipped\n";
  return os.str();
}

Json report_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"id", c.id},
                      {"citation", c.citation},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"status", std::string(status_name(c.status))}});
  }
  Json doc;
  doc["checks"] = std::move(checks);
  doc["summary"] = {{"pass", report.pass}, {"fail", report.fail}, {"skipped", report.skipped}};
  return doc;
}

}  // namespace chowring
