#include "linking/json_io.hpp"

#include "linking/errors.hpp"

namespace linking {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t natural(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw ParseError(std::string(what) + " must be a natural number");
  return j.get<std::size_t>();
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

IndexSet index_set_from_json(const Json& j) {
  std::vector<std::size_t> xs;
  for (const Json& x : array(j, "port set")) xs.push_back(natural(x, "port"));
  return IndexSet::from_elements(xs);
}

Json index_set_json(const IndexSet& s) {
  Json out = Json::array();
  for (std::size_t x : s.elements()) out.push_back(x);
  return out;
}

Multiset multiset_from_json(const Json& j) {
  std::vector<Count> c;
  for (const Json& x : array(j, "multiset")) c.push_back(natural(x, "multiplicity"));
  return Multiset(std::move(c));
}

std::vector<IndexSet> leg_sets(const Json& j, const char* what) {
  std::vector<IndexSet> out;
  for (const Json& x : array(j, what)) out.push_back(index_set_from_json(x));
  return out;
}

std::vector<Multiset> leg_rows(const Json& j, const char* what, std::size_t over) {
  std::vector<Multiset> out;
  for (const Json& x : array(j, what)) {
    out.push_back(multiset_from_json(x));
    if (out.back().over() != over) throw DomainError(std::string(what) + " row has the wrong length");
  }
  return out;
}

std::vector<std::size_t> index_map(const Json& j, const char* what) {
  std::vector<std::size_t> out;
  for (const Json& x : array(j, what)) out.push_back(natural(x, what));
  return out;
}

void expect_model(const Json& j, const char* model) {
  const auto it = j.find("model");
  if (it != j.end() && *it != model) throw ParseError(std::string("expected \"model\": \"") + model + "\"");
}

}  // namespace

Json to_json(const CSet& c) {
  Json pairs = Json::array();
  for (const auto& [a, b] : c.contention()) pairs.push_back({a, b});
  return Json{{"size", c.size()}, {"contention", pairs}};
}

Json to_json(const CRel& f) {
  Json map = Json::array();
  for (std::size_t x = 0; x < f.dom().size(); ++x) map.push_back(index_set_json(f(x)));
  return Json{{"dom", to_json(f.dom())}, {"cod", to_json(f.cod())}, {"map", map}};
}

Json to_json(const MRel& f) {
  Json map = Json::array();
  for (const Multiset& r : f.rows()) map.push_back(r.counts());
  return Json{{"dom", f.dom()}, {"cod", f.cod()}, {"map", map}};
}

Json to_json(const SpanC& s) {
  const SpanC c = canonical(s);
  Json l = Json::array(), r = Json::array();
  for (std::size_t x = 0; x < c.links(); ++x) {
    l.push_back(index_set_json(c.lleg()(x)));
    r.push_back(index_set_json(c.rleg()(x)));
  }
  return Json{{"model", "c"},   {"left", c.left()}, {"right", c.right()}, {"carrier", to_json(c.carrier())},
              {"lleg", l},      {"rleg", r}};
}

Json to_json(const SpanM& s) {
  const SpanM c = canonical(s);
  Json l = Json::array(), r = Json::array();
  for (const auto& [a, b] : c.images()) {
    l.push_back(a.counts());
    r.push_back(b.counts());
  }
  return Json{{"model", "m"}, {"left", c.left()}, {"right", c.right()}, {"carrier", c.links()},
              {"lleg", l},    {"rleg", r}};
}

Json to_json(const Cospan& c) {
  return Json{{"left", c.left}, {"right", c.right}, {"carrier", c.carrier}, {"lmap", c.lmap}, {"rmap", c.rmap}};
}

CSet cset_from_json(const Json& j) {
  const std::size_t n = natural(field(j, "size"), "size");
  std::vector<ContentionPair> pairs;
  for (const Json& p : array(field(j, "contention"), "contention")) {
    if (!p.is_array() || p.size() != 2) throw ParseError("contention entries must be pairs");
    pairs.emplace_back(natural(p[0], "contention index"), natural(p[1], "contention index"));
  }
  return CSet(n, std::move(pairs));
}

CRel crel_from_json(const Json& j) {
  CRel f(cset_from_json(field(j, "dom")), cset_from_json(field(j, "cod")), leg_sets(field(j, "map"), "map"));
  if (const auto v = f.validate()) throw DomainError(v->message);
  return f;
}

MRel mrel_from_json(const Json& j) {
  const std::size_t dom = natural(field(j, "dom"), "dom");
  const std::size_t cod = natural(field(j, "cod"), "cod");
  return MRel(dom, cod, leg_rows(field(j, "map"), "map", cod));
}

SpanC span_c_from_json(const Json& j) {
  expect_model(j, "c");
  return SpanC(natural(field(j, "left"), "left"), natural(field(j, "right"), "right"),
               cset_from_json(field(j, "carrier")), leg_sets(field(j, "lleg"), "lleg"),
               leg_sets(field(j, "rleg"), "rleg"));
}

SpanM span_m_from_json(const Json& j) {
  expect_model(j, "m");
  const std::size_t left = natural(field(j, "left"), "left");
  const std::size_t right = natural(field(j, "right"), "right");
  const std::size_t n = natural(field(j, "carrier"), "carrier");
  return SpanM(MRel(n, left, leg_rows(field(j, "lleg"), "lleg", left)),
               MRel(n, right, leg_rows(field(j, "rleg"), "rleg", right)));
}

Cospan cospan_from_json(const Json& j) {
  Cospan c{natural(field(j, "left"), "left"), natural(field(j, "right"), "right"),
           natural(field(j, "carrier"), "carrier"), index_map(field(j, "lmap"), "lmap"),
           index_map(field(j, "rmap"), "rmap")};
  c.check();
  return c;
}

AnySpan span_from_json(const Json& j) {
  const Json& model = field(j, "model");
  if (model == "c") return span_c_from_json(j);
  if (model == "m") return span_m_from_json(j);
  throw ParseError("\"model\" must be \"c\" or \"m\"");
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

}  // namespace linking
