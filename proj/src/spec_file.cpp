#include "chowring/spec_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace chowring {

SpecError::SpecError(std::string document, std::vector<SpecIssue> issues)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << document << ": " << issues.size() << " problem(s)";
        for (const auto& i : issues) os << "\n  " << (i.pointer.empty() ? "/" : i.pointer) << ": " << i.message;
        return os.str();
      }()),
      document_(std::move(document)),
      issues_(std::move(issues)) {}

namespace {

std::string escape_pointer(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + escape_pointer(key); }
std::string child(const std::string& ptr, std::size_t index) { return ptr + "/" + std::to_string(index); }

using Parse = std::function<Polynomial(std::string_view)>;

/// Collects issues instead of stopping at the first one.
class DocReader {
 public:
  explicit DocReader(std::string document) : document_(std::move(document)) {}

  void issue(const std::string& ptr, const std::string& message) { issues_.push_back({ptr, message}); }
  bool ok() const { return issues_.empty(); }
  void finish() const {
    if (!issues_.empty()) throw SpecError(document_, issues_);
  }

  const Json* field(const Json& obj, const std::string& key, const std::string& ptr, bool required) {
    if (!obj.is_object()) {
      issue(ptr, "expected an object");
      return nullptr;
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) issue(child(ptr, key), "missing required field");
      return nullptr;
    }
    return &*it;
  }

  std::optional<std::string> string(const Json& obj, const std::string& key, const std::string& ptr,
                                    bool required) {
    const Json* v = field(obj, key, ptr, required);
    if (!v) return std::nullopt;
    if (!v->is_string()) {
      issue(child(ptr, key), "expected a string");
      return std::nullopt;
    }
    return v->get<std::string>();
  }

  std::string text(const Json& obj, const std::string& key, const std::string& ptr) {
    return string(obj, key, ptr, false).value_or("");
  }

  std::optional<int> integer(const Json& obj, const std::string& key, const std::string& ptr,
                             bool required) {
    const Json* v = field(obj, key, ptr, required);
    if (!v) return std::nullopt;
    if (!v->is_number_integer()) {
      issue(child(ptr, key), "expected an integer");
      return std::nullopt;
    }
    return v->get<int>();
  }

  std::optional<Rational> rational(const Json& v, const std::string& ptr) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (!v.is_string()) {
      issue(ptr, "rationals must be written as strings such as \"-4103/144\"");
      return std::nullopt;
    }
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::exception& e) {
      issue(ptr, std::string("bad rational: ") + e.what());
      return std::nullopt;
    }
  }

  std::optional<Polynomial> expr(const Json& v, const std::string& ptr, const Parse& parse) {
    if (!v.is_string()) {
      issue(ptr, "expected an expression string");
      return std::nullopt;
    }
    try {
      return parse(v.get<std::string>());
    } catch (const ParseError& e) {
      issue(ptr, e.what());
    } catch (const std::exception& e) {
      issue(ptr, e.what());
    }
    return std::nullopt;
  }

  const Json* array(const Json& obj, const std::string& key, const std::string& ptr, bool required) {
    const Json* v = field(obj, key, ptr, required);
    if (v && !v->is_array()) {
      issue(child(ptr, key), "expected an array");
      return nullptr;
    }
    return v;
  }

  std::vector<Polynomial> expr_list(const Json& obj, const std::string& key, const std::string& ptr,
                                    const Parse& parse, std::vector<std::string>* labels) {
    std::vector<Polynomial> out;
    const Json* arr = array(obj, key, ptr, true);
    if (!arr) return out;
    for (std::size_t i = 0; i < arr->size(); ++i) {
      if (auto p = expr((*arr)[i], child(child(ptr, key), i), parse)) {
        out.push_back(std::move(*p));
        if (labels) labels->push_back((*arr)[i].get<std::string>());
      }
    }
    return out;
  }

  std::vector<Rational> rational_list(const Json& v, const std::string& ptr) {
    std::vector<Rational> out;
    if (!v.is_array()) {
      issue(ptr, "expected an array of rationals");
      return out;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (auto r = rational(v[i], child(ptr, i))) out.push_back(std::move(*r));
    }
    return out;
  }

 private:
  std::string document_;
  std::vector<SpecIssue> issues_;
};

GeneratorSetPtr read_generators(DocReader& rd, const Json& doc) {
  const Json* arr = rd.array(doc, "generators", "", true);
  if (!arr) return nullptr;
  std::vector<Generator> gens;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < arr->size(); ++i) {
    const std::string ptr = child("/generators", i);
    const Json& g = (*arr)[i];
    auto name = rd.string(g, "name", ptr, true);
    auto weight = rd.integer(g, "degree", ptr, true);
    if (!name || !weight) continue;
    if (!is_identifier(*name)) {
      rd.issue(child(ptr, "name"), "generator names must be ASCII identifiers");
      continue;
    }
    if (*weight <= 0) {
      rd.issue(child(ptr, "degree"), "generator degree must be positive");
      continue;
    }
    if (!seen.insert(*name).second) {
      rd.issue(child(ptr, "name"), "duplicate generator '" + *name + "'");
      continue;
    }
    gens.push_back({*name, *weight});
  }
  if (!rd.ok()) return nullptr;
  return GeneratorSet::make(std::move(gens));
}

std::vector<Polynomial> read_relations(DocReader& rd, const Json& doc, const Parse& parse) {
  std::vector<Polynomial> rels;
  const Json* arr = rd.array(doc, "relations", "", true);
  if (!arr) return rels;
  for (std::size_t i = 0; i < arr->size(); ++i) {
    const std::string ptr = child("/relations", i);
    auto p = rd.expr((*arr)[i], ptr, parse);
    if (!p) continue;
    if (!p->is_homogeneous()) {
      rd.issue(ptr, "inhomogeneous relation '" + (*arr)[i].get<std::string>() + "'");
      continue;
    }
    rels.push_back(std::move(*p));
  }
  return rels;
}

void read_named_classes(DocReader& rd, const Json& doc, const std::string& ring_name,
                        const GeneratorSetPtr& gens, NamedClasses& named,
                        std::vector<NamedClass>& list) {
  const Json* obj = rd.field(doc, "named_classes", "", false);
  if (!obj) return;
  if (!obj->is_object()) {
    rd.issue("/named_classes", "expected an object");
    return;
  }
  for (const auto& [key, value] : obj->items()) {
    const std::string ptr = child("/named_classes", key);
    if (!is_identifier(key)) {
      rd.issue(ptr, "class names must be ASCII identifiers");
      continue;
    }
    if (gens->index_of(key) || named.count(key)) {
      rd.issue(ptr, "name '" + key + "' is already defined");
      continue;
    }
    const Json* expr_json = &value;
    std::string citation;
    if (value.is_object()) {
      expr_json = rd.field(value, "expr", ptr, true);
      citation = rd.text(value, "citation", ptr);
      if (!expr_json) continue;
    }
    auto p = rd.expr(*expr_json, value.is_object() ? child(ptr, "expr") : ptr,
                     [&](std::string_view t) { return parse_polynomial(t, gens, named); });
    if (!p) continue;
    if (p->is_zero() || !p->is_homogeneous()) {
      rd.issue(ptr, "named class must be a nonzero homogeneous expression");
      continue;
    }
    list.push_back({key, ring_name, *p, *p->weighted_degree(), citation});
    named.emplace(key, std::move(*p));
  }
}

struct ExprContext {
  Parse parse;       // the document's own ring
  Parse parse_base;  // base ring, for pushforward targets
  const TabulatedPushforward* tabulated = nullptr;
  Parse parse_images;  // target ring plus img_<symbol> for each tabulated image
};

TableSpec read_table(DocReader& rd, const Json& t, const std::string& ptr, const ExprContext& ctx) {
  TableSpec spec;
  spec.id = rd.string(t, "id", ptr, true).value_or("?");
  spec.kind = rd.string(t, "kind", ptr, true).value_or("");
  spec.title = rd.text(t, "title", ptr);
  spec.citation = rd.text(t, "citation", ptr);
  spec.degree = rd.integer(t, "degree", ptr, false).value_or(0);
  if (const Json* s = rd.field(t, "scale", ptr, false)) {
    if (auto r = rd.rational(*s, child(ptr, "scale"))) spec.scale = *r;
  }
  if (const Json* ns = rd.field(t, "nonsingular", ptr, false)) spec.nonsingular = ns->is_boolean() && ns->get<bool>();

  auto read_matrix = [&](std::size_t rows, std::size_t cols) {
    const Json* vals = rd.array(t, "values", ptr, true);
    if (!vals) return;
    if (vals->size() != rows) {
      rd.issue(child(ptr, "values"), "expected " + std::to_string(rows) + " rows");
      return;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      const std::string rp = child(child(ptr, "values"), i);
      auto row = rd.rational_list((*vals)[i], rp);
      if (row.size() != cols) {
        rd.issue(rp, "expected " + std::to_string(cols) + " entries");
        continue;
      }
      spec.values.push_back(std::move(row));
    }
  };

  if (spec.kind == "pairing") {
    spec.rows = rd.expr_list(t, "rows", ptr, ctx.parse, &spec.row_labels);
    spec.cols = rd.expr_list(t, "cols", ptr, ctx.parse, &spec.col_labels);
    if (rd.ok()) read_matrix(spec.rows.size(), spec.cols.size());
  } else if (spec.kind == "degrees") {
    const Json* entries = rd.array(t, "entries", ptr, true);
    for (std::size_t i = 0; entries && i < entries->size(); ++i) {
      const std::string ep = child(child(ptr, "entries"), i);
      const Json& e = (*entries)[i];
      TableEntry entry;
      entry.note = rd.text(e, "note", ep);
      if (const Json* x = rd.field(e, "expr", ep, false)) {
        entry.expr = rd.expr(*x, child(ep, "expr"), ctx.parse);
        if (x->is_string()) entry.label = x->get<std::string>();
      }
      if (auto label = rd.string(e, "label", ep, false)) entry.label = *label;
      if (entry.label.empty()) rd.issue(ep, "entry needs a label or an expr");
      if (const Json* v = rd.field(e, "value", ep, false)) {
        if (auto r = rd.rational(*v, child(ep, "value"))) entry.values.push_back(*r);
      } else if (const Json* vs = rd.field(e, "values", ep, false)) {
        entry.values = rd.rational_list(*vs, child(ep, "values"));
      } else {
        rd.issue(ep, "entry needs a value or a list of candidate values");
      }
      spec.entries.push_back(std::move(entry));
    }
  } else if (spec.kind == "solve_class") {
    spec.cols = rd.expr_list(t, "probes", ptr, ctx.parse, &spec.col_labels);
    if (const Json* v = rd.field(t, "values", ptr, true)) {
      spec.values.push_back(rd.rational_list(*v, child(ptr, "values")));
      if (spec.values.front().size() != spec.cols.size()) {
        rd.issue(child(ptr, "values"), "expected one value per probe");
      }
    }
    if (const Json* e = rd.field(t, "expected_class", ptr, true)) {
      spec.expected_class = rd.expr(*e, child(ptr, "expected_class"), ctx.parse);
      if (e->is_string()) spec.expected_label = e->get<std::string>();
    }
  } else if (spec.kind == "coordinates") {
    if (!ctx.tabulated) {
      rd.issue(child(ptr, "kind"), "coordinate tables belong to tabulated pushforwards");
      return spec;
    }
    spec.cols = rd.expr_list(t, "basis", ptr, ctx.parse, &spec.col_labels);
    const Json* rows = rd.array(t, "rows", ptr, true);
    for (std::size_t i = 0; rows && i < rows->size(); ++i) {
      const std::string rp = child(child(ptr, "rows"), i);
      auto symbol = rd.string((*rows)[i], "symbol", rp, true);
      if (!symbol) continue;
      try {
        ctx.tabulated->symbol(*symbol);
      } catch (const std::exception& e) {
        rd.issue(child(rp, "symbol"), e.what());
        continue;
      }
      spec.row_labels.push_back(*symbol);
      if (const Json* v = rd.field((*rows)[i], "values", rp, true)) {
        auto row = rd.rational_list(*v, child(rp, "values"));
        if (row.size() != spec.cols.size()) rd.issue(child(rp, "values"), "expected one value per basis element");
        spec.values.push_back(std::move(row));
      }
    }
  } else if (!spec.kind.empty()) {
    rd.issue(child(ptr, "kind"), "unknown table kind '" + spec.kind + "'");
  }
  return spec;
}

Expectations read_expectations(DocReader& rd, const Json& doc, const ExprContext& ctx) {
  Expectations ex;
  const Json* obj = rd.field(doc, "expected", "", false);
  if (!obj) return ex;
  const std::string base = "/expected";
  if (!obj->is_object()) {
    rd.issue(base, "expected an object");
    return ex;
  }

  if (const Json* h = rd.array(*obj, "hilbert", base, false)) {
    std::vector<int> values;
    for (std::size_t i = 0; i < h->size(); ++i) {
      if (!(*h)[i].is_number_integer()) {
        rd.issue(child(child(base, "hilbert"), i), "expected an integer");
        continue;
      }
      values.push_back((*h)[i].get<int>());
    }
    ex.hilbert = std::move(values);
  }
  ex.hilbert_citation = rd.text(*obj, "hilbert_citation", base);

  if (const Json* d = rd.field(*obj, "degrees", base, false)) {
    const std::string dp = child(base, "degrees");
    auto add = [&](const std::string& label, const Json& value, const std::string& citation,
                   const std::string& ptr) {
      auto p = rd.expr(Json(label), ptr, ctx.parse);
      auto v = rd.rational(value, ptr);
      if (p && v) ex.degrees.push_back({label, *p, *v, citation});
    };
    if (d->is_object()) {
      for (const auto& [k, v] : d->items()) add(k, v, "", child(dp, k));
    } else if (d->is_array()) {
      for (std::size_t i = 0; i < d->size(); ++i) {
        const std::string ip = child(dp, i);
        auto e = rd.string((*d)[i], "expr", ip, true);
        const Json* v = rd.field((*d)[i], "value", ip, true);
        if (e && v) add(*e, *v, rd.text((*d)[i], "citation", ip), ip);
      }
    } else {
      rd.issue(dp, "expected an object or an array");
    }
  }

  if (const Json* ids = rd.array(*obj, "identities", base, false)) {
    for (std::size_t i = 0; i < ids->size(); ++i) {
      const std::string ip = child(child(base, "identities"), i);
      const Json& e = (*ids)[i];
      if (ctx.tabulated) {
        auto id = rd.string(e, "id", ip, true);
        auto combo = rd.string(e, "combo", ip, true);
        auto expected = rd.string(e, "expected", ip, true);
        if (!id || !combo || !expected) continue;
        Combination parsed;
        try {
          parsed = ctx.tabulated->parse_combination(*combo);
          push_combination(*ctx.tabulated, parsed);
        } catch (const std::exception& err) {
          rd.issue(child(ip, "combo"), err.what());
          continue;
        }
        auto p = rd.expr(Json(*expected), child(ip, "expected"), ctx.parse);
        if (!p) continue;
        bool literal = false;
        if (const Json* l = rd.field(e, "literal", ip, false)) literal = l->is_boolean() && l->get<bool>();
        ex.combinations.push_back({*id, *combo, std::move(parsed), std::move(*p), *expected,
                                   rd.text(e, "citation", ip), literal});
        continue;
      }
      auto lhs = rd.string(e, "lhs", ip, true);
      auto rhs = rd.string(e, "rhs", ip, true);
      bool equal = true;
      if (const Json* eq = rd.field(e, "equal", ip, false)) equal = eq->is_boolean() && eq->get<bool>();
      if (!lhs || !rhs) continue;
      auto l = rd.expr(Json(*lhs), child(ip, "lhs"), ctx.parse);
      auto r = rd.expr(Json(*rhs), child(ip, "rhs"), ctx.parse);
      if (!l || !r) continue;
      ex.identities.push_back({*lhs, *rhs, std::move(*l), std::move(*r), equal, rd.text(e, "citation", ip)});
    }
  }

  if (const Json* eqs = rd.array(*obj, "equivalences", base, false)) {
    for (std::size_t i = 0; i < eqs->size(); ++i) {
      const std::string ip = child(child(base, "equivalences"), i);
      const Json& e = (*eqs)[i];
      EquivalenceExpectation eq;
      eq.pointer = ip;
      eq.other_ring = rd.string(e, "ring", ip, true).value_or("");
      eq.citation = rd.text(e, "citation", ip);
      if (const Json* v = rd.field(e, "equivalent", ip, false)) eq.equivalent = v->is_boolean() && v->get<bool>();
      for (const char* dir : {"forward", "backward"}) {
        const Json* m = rd.field(e, dir, ip, true);
        if (!m) continue;
        if (!m->is_object()) {
          rd.issue(child(ip, dir), "expected an object of generator images");
          continue;
        }
        auto& target = std::string(dir) == "forward" ? eq.forward : eq.backward;
        for (const auto& [k, v] : m->items()) {
          if (!v.is_string()) {
            rd.issue(child(child(ip, dir), k), "expected an expression string");
            continue;
          }
          target[k] = v.get<std::string>();
        }
      }
      ex.equivalences.push_back(std::move(eq));
    }
  }

  if (const Json* pf = rd.array(*obj, "pushforwards", base, false)) {
    if (!ctx.parse_base) rd.issue(child(base, "pushforwards"), "only relative rings have pushforwards");
    for (std::size_t i = 0; ctx.parse_base && i < pf->size(); ++i) {
      const std::string ip = child(child(base, "pushforwards"), i);
      auto e = rd.string((*pf)[i], "expr", ip, true);
      auto v = rd.string((*pf)[i], "value", ip, true);
      if (!e || !v) continue;
      auto p = rd.expr(Json(*e), child(ip, "expr"), ctx.parse);
      auto q = rd.expr(Json(*v), child(ip, "value"), ctx.parse_base);
      if (p && q) ex.pushforwards.push_back({*e, *p, *q, rd.text((*pf)[i], "citation", ip)});
    }
  }

  if (const Json* cs = rd.array(*obj, "conventions", base, false)) {
    for (std::size_t i = 0; i < cs->size(); ++i) {
      const std::string cp = child(child(base, "conventions"), i);
      const Json& c = (*cs)[i];
      ConventionCheck check;
      check.id = rd.string(c, "id", cp, true).value_or("?");
      check.citation = rd.text(c, "citation", cp);
      const Json* readings = rd.array(c, "readings", cp, true);
      for (std::size_t j = 0; readings && j < readings->size(); ++j) {
        const std::string rp = child(child(cp, "readings"), j);
        const Json& r = (*readings)[j];
        auto name = rd.string(r, "name", rp, true);
        auto lhs = rd.string(r, "lhs", rp, true);
        auto rhs = rd.string(r, "rhs", rp, true);
        if (!name || !lhs || !rhs) continue;
        auto l = rd.expr(Json(*lhs), child(rp, "lhs"), ctx.parse_images);
        auto q = rd.expr(Json(*rhs), child(rp, "rhs"), ctx.parse_images);
        if (l && q) check.readings.push_back({*name, *lhs, *rhs, std::move(*l), std::move(*q)});
      }
      ex.conventions.push_back(std::move(check));
    }
  }

  if (const Json* tables = rd.array(*obj, "tables", base, false)) {
    std::set<std::string> ids;
    for (std::size_t i = 0; i < tables->size(); ++i) {
      const std::string tp = child(child(base, "tables"), i);
      TableSpec t = read_table(rd, (*tables)[i], tp, ctx);
      if (!ids.insert(t.id).second) rd.issue(child(tp, "id"), "duplicate table id '" + t.id + "'");
      ex.tables.push_back(std::move(t));
    }
  }
  return ex;
}

}  // namespace

SpecKind spec_kind(const Json& doc) {
  if (!doc.is_object() || !doc.contains("kind")) return SpecKind::Ring;
  const auto& k = doc["kind"];
  if (k == "relative") return SpecKind::Relative;
  if (k == "tabulated_pushforward") return SpecKind::Tabulated;
  return SpecKind::Ring;
}

Json parse_json_text(std::string_view text, const std::string& document) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SpecError(document, {{"", std::string("invalid JSON: ") + e.what()}});
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str(), path.string());
}

LoadedRing load_ring_spec(const std::filesystem::path& path) {
  return load_ring_spec(read_json_file(path), path.string());
}

LoadedRing load_ring_spec(const Json& doc, const std::string& document) {
  DocReader rd(document);
  LoadedRing out;
  out.source = doc;
  if (!doc.is_object()) {
    rd.issue("", "expected a JSON object");
    rd.finish();
  }
  out.name = rd.string(doc, "name", "", true).value_or("");
  out.title = rd.text(doc, "title", "");
  out.citation = rd.text(doc, "citation", "");
  GeneratorSetPtr gens = read_generators(rd, doc);
  rd.finish();

  Parse parse_plain = [&](std::string_view t) { return parse_polynomial(t, gens); };
  RingPresentation pres{out.name, gens, read_relations(rd, doc, parse_plain), std::nullopt};
  if (auto genus = rd.integer(doc, "chern_identity_genus", "", false)) {
    if (*genus < 1) {
      rd.issue("/chern_identity_genus", "genus must be at least 1");
    } else {
      pres.chern_identity_genus = *genus;
    }
  }
  if (!rd.ok()) {
    // Keep going far enough to report the rest of the document too.
    read_named_classes(rd, doc, out.name, gens, out.named, out.named_classes);
    if (const Json* norm = rd.field(doc, "normalization", "", false)) {
      Parse parse = [&](std::string_view t) { return parse_polynomial(t, gens, out.named); };
      if (const Json* el = rd.field(*norm, "element", "/normalization", true)) rd.expr(*el, "/normalization/element", parse);
      if (const Json* val = rd.field(*norm, "value", "/normalization", true)) rd.rational(*val, "/normalization/value");
    }
    rd.finish();
  }
  try {
    out.ring = make_ring(std::move(pres));
  } catch (const std::exception& e) {
    rd.issue(doc.contains("chern_identity_genus") ? "/chern_identity_genus" : "/relations", e.what());
    rd.finish();
  }

  read_named_classes(rd, doc, out.name, gens, out.named, out.named_classes);
  Parse parse = [&](std::string_view t) { return parse_polynomial(t, gens, out.named); };

  if (const Json* norm = rd.field(doc, "normalization", "", false)) {
    const Json* el = rd.field(*norm, "element", "/normalization", true);
    const Json* val = rd.field(*norm, "value", "/normalization", true);
    std::optional<Polynomial> element;
    std::optional<Rational> value;
    if (el) element = rd.expr(*el, "/normalization/element", parse);
    if (val) value = rd.rational(*val, "/normalization/value");
    if (element && value) {
      if (element->is_zero() || !element->is_homogeneous()) {
        rd.issue("/normalization/element", "normalization element must be nonzero and homogeneous");
      } else {
        const int top = *element->weighted_degree();
        if (auto declared = rd.integer(*norm, "degree", "/normalization", false); declared && *declared != top) {
          rd.issue("/normalization/degree", "element has degree " + std::to_string(top) +
                                                ", declared " + std::to_string(*declared));
        } else {
          try {
            out.functional.emplace(out.ring, top, *element, *value);
          } catch (const std::exception& e) {
            rd.issue("/normalization", e.what());
          }
        }
      }
    }
  }

  ExprContext ctx{parse, nullptr, nullptr, parse};
  out.expected = read_expectations(rd, doc, ctx);
  rd.finish();
  return out;
}

LoadedRelative load_relative_spec(const Json& doc, const RingResolver& resolve,
                                  const std::string& document) {
  DocReader rd(document);
  LoadedRelative out;
  out.source = doc;
  out.name = rd.string(doc, "name", "", true).value_or("");
  out.title = rd.text(doc, "title", "");
  out.citation = rd.text(doc, "citation", "");
  out.base_name = rd.string(doc, "base", "", true).value_or("");
  const LoadedRing* base = out.base_name.empty() ? nullptr : resolve(out.base_name);
  if (!out.base_name.empty() && !base) rd.issue("/base", "unknown base ring '" + out.base_name + "'");
  GeneratorSetPtr fiber = read_generators(rd, doc);
  rd.finish();

  GeneratorSetPtr combined;
  try {
    combined = RelativeRing::combined_generators(*base->ring->generators(), fiber->list());
  } catch (const std::exception& e) {
    rd.issue("/generators", e.what());
    rd.finish();
  }
  for (const auto& [name, cls] : base->named) out.named.emplace(name, rename_into(cls, combined));
  Parse parse = [&](std::string_view t) { return parse_polynomial(t, combined, out.named); };
  std::vector<Polynomial> rels = read_relations(rd, doc, parse);
  rd.finish();
  try {
    out.ring = std::make_shared<const RelativeRing>(out.name, base->ring, combined, std::move(rels));
  } catch (const std::exception& e) {
    rd.issue("/relations", e.what());
    rd.finish();
  }

  Parse parse_base = [&](std::string_view t) {
    return parse_polynomial(t, base->ring->generators(), base->named);
  };
  if (const Json* pf = rd.field(doc, "pushforward", "", true)) {
    out.rule.codimension_shift = rd.integer(*pf, "codimension", "/pushforward", true).value_or(0);
    if (const Json* images = rd.field(*pf, "images", "/pushforward", true)) {
      if (!images->is_object()) {
        rd.issue("/pushforward/images", "expected an object");
      } else {
        for (const auto& [k, v] : images->items()) {
          if (auto p = rd.expr(v, child("/pushforward/images", k), parse_base)) out.rule.images.emplace(k, *p);
        }
      }
    }
    if (rd.ok()) {
      try {
        validate_rule(*out.ring, out.rule);
      } catch (const std::exception& e) {
        rd.issue("/pushforward", e.what());
      }
    }
  }

  ExprContext ctx{parse, parse_base, nullptr, parse};
  out.expected = read_expectations(rd, doc, ctx);
  rd.finish();
  return out;
}

LoadedTabulated load_tabulated_spec(const Json& doc, const RingResolver& resolve,
                                    const std::string& document) {
  DocReader rd(document);
  LoadedTabulated out;
  out.source = doc;
  out.name = rd.string(doc, "name", "", true).value_or("");
  out.title = rd.text(doc, "title", "");
  out.citation = rd.text(doc, "citation", "");
  out.target_name = rd.string(doc, "target", "", true).value_or("");
  const LoadedRing* target = out.target_name.empty() ? nullptr : resolve(out.target_name);
  if (!out.target_name.empty() && !target) rd.issue("/target", "unknown target ring '" + out.target_name + "'");
  rd.finish();

  Parse parse = [&](std::string_view t) { return target->parse(t); };
  std::vector<TabulatedSymbol> symbols;
  std::set<std::string> seen;
  const Json* arr = rd.array(doc, "symbols", "", true);
  for (std::size_t i = 0; arr && i < arr->size(); ++i) {
    const std::string sp = child("/symbols", i);
    const Json& s = (*arr)[i];
    auto name = rd.string(s, "name", sp, true);
    auto deg = rd.integer(s, "degree", sp, true);
    const Json* img = rd.field(s, "image", sp, true);
    if (!name || !deg || !img) continue;
    if (!is_identifier(*name)) {
      rd.issue(child(sp, "name"), "symbol names must be ASCII identifiers");
      continue;
    }
    if (!seen.insert(*name).second) {
      rd.issue(child(sp, "name"), "duplicate symbol '" + *name + "'");
      continue;
    }
    auto image = rd.expr(*img, child(sp, "image"), parse);
    if (!image) continue;
    if (!image->is_zero() && (!image->is_homogeneous() || *image->weighted_degree() != *deg)) {
      rd.issue(child(sp, "image"), "image must be homogeneous of degree " + std::to_string(*deg));
      continue;
    }
    symbols.push_back({*name, *deg, std::move(*image), rd.text(s, "citation", sp)});
  }
  rd.finish();
  out.map = std::make_shared<const TabulatedPushforward>(out.name, target->ring, std::move(symbols));

  NamedClasses with_images = target->named;
  for (const auto& sym : out.map->symbols()) with_images.emplace("img_" + sym.name, sym.image);
  Parse parse_images = [&](std::string_view t) {
    return parse_polynomial(t, target->ring->generators(), with_images);
  };
  ExprContext ctx{parse, nullptr, out.map.get(), parse_images};
  out.expected = read_expectations(rd, doc, ctx);
  rd.finish();
  return out;
}

Json save_ring_spec(const LoadedRing& ring) {
  Json doc;
  doc["name"] = ring.name;
  if (!ring.title.empty()) doc["title"] = ring.title;
  if (!ring.citation.empty()) doc["citation"] = ring.citation;
  const auto& gens = *ring.ring->generators();
  doc["generators"] = Json::array();
  for (const auto& g : gens.list()) doc["generators"].push_back({{"name", g.name}, {"degree", g.weight}});
  doc["relations"] = Json::array();
  for (const auto& r : ring.ring->presentation().relations) doc["relations"].push_back(render(r));
  if (ring.ring->presentation().chern_identity_genus) {
    doc["chern_identity_genus"] = *ring.ring->presentation().chern_identity_genus;
  }
  if (ring.functional) {
    doc["normalization"] = {{"element", render(ring.functional->reference_element())},
                            {"value", ring.functional->reference_value().str()}};
  }
  if (!ring.named_classes.empty()) {
    Json named = Json::object();
    for (const auto& nc : ring.named_classes) {
      named[nc.symbol] = {{"expr", render(nc.expression)}, {"citation", nc.citation}};
    }
    doc["named_classes"] = std::move(named);
  }
  if (ring.source.contains("expected")) doc["expected"] = ring.source["expected"];
  return doc;
}

}  // namespace chowring
