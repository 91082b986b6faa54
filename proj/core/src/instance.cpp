#include "polycol/instance.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace polycol {

namespace {

using json = nlohmann::json;

// A number as written: rational, or an algebraic number awaiting the common field.
struct Raw {
  bool alg = false;
  Rational q;
  AlgebraicNumber a;
};

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

Rational rational_field(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
  fail(where, "expected a rational string");
}

Raw number(const json& j, const std::string& where) {
  Raw r;
  if (!j.is_object()) {
    r.q = rational_field(j, where);
    return r;
  }
  for (const char* k : {"poly", "re", "im", "rad"})
    if (!j.contains(k)) fail(where, std::string("algebraic number without '") + k + "'");
  if (!j["poly"].is_array() || j["poly"].size() < 2) fail(where + ".poly", "need at least two coefficients");
  std::vector<Integer> c;
  for (std::size_t i = 0; i < j["poly"].size(); ++i) {
    Rational v = rational_field(j["poly"][i], where + ".poly[" + std::to_string(i) + "]");
    if (v.get_den() != 1) fail(where + ".poly", "coefficients must be integers");
    c.push_back(v.get_num());
  }
  try {
    r.a = AlgebraicNumber::from_standard(ZPoly(c), rational_field(j["re"], where + ".re"),
                                         rational_field(j["im"], where + ".im"),
                                         rational_field(j["rad"], where + ".rad"));
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
  if (!r.a.is_real()) fail(where, "entries must be real");
  if (r.a.is_rational()) {
    r.q = r.a.rational_value();
    return r;
  }
  r.alg = true;
  return r;
}

struct RawHalfspace {
  std::vector<Raw> normal;
  Raw offset;
  bool eq = false;
};

std::vector<RawHalfspace> polytope(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("halfspaces") || !j["halfspaces"].is_array())
    fail(where, "expected an object with a 'halfspaces' array");
  const json& hs = j["halfspaces"];
  if (hs.empty()) fail(where, "polytope is the whole space");
  std::vector<RawHalfspace> out;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    std::string w = where + ".halfspaces[" + std::to_string(i) + "]";
    const json& h = hs[i];
    if (!h.is_object() || !h.contains("normal") || !h.contains("offset"))
      fail(w, "halfspace needs 'normal' and 'offset'");
    if (!h["normal"].is_array() || h["normal"].size() != 3) fail(w + ".normal", "expected three entries");
    RawHalfspace r;
    bool nonzero = false;
    for (std::size_t k = 0; k < 3; ++k) {
      r.normal.push_back(number(h["normal"][k], w + ".normal[" + std::to_string(k) + "]"));
      if (r.normal.back().alg || r.normal.back().q != 0) nonzero = true;
    }
    if (!nonzero) fail(w + ".normal", "zero normal vector");
    r.offset = number(h["offset"], w + ".offset");
    std::string rel = h.value("rel", std::string(">="));
    if (rel == "=") r.eq = true;
    else if (rel != ">=") fail(w + ".rel", "expected \">=\" or \"=\"");
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance: expected a JSON object");
  if (!doc.contains("matrix")) throw ParseError("matrix: missing");
  const json& m = doc["matrix"];
  if (!m.is_array() || m.size() != 3) fail("matrix", "expected 3 rows");
  std::vector<Raw> entries;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!m[i].is_array() || m[i].size() != 3) fail("matrix[" + std::to_string(i) + "]", "expected 3 entries");
    for (std::size_t j = 0; j < 3; ++j)
      entries.push_back(number(m[i][j], "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
  }
  if (!doc.contains("p1")) throw ParseError("p1: missing");
  if (!doc.contains("p2")) throw ParseError("p2: missing");
  auto h1 = polytope(doc["p1"], "p1"), h2 = polytope(doc["p2"], "p2");

  // One field for every algebraic input.
  std::vector<Raw*> all;
  for (auto& e : entries) all.push_back(&e);
  for (auto* hs : {&h1, &h2})
    for (auto& h : *hs) {
      for (auto& c : h.normal) all.push_back(&c);
      all.push_back(&h.offset);
    }
  std::vector<AlgebraicNumber> gens;
  for (Raw* r : all)
    if (r->alg && std::none_of(gens.begin(), gens.end(), [&](const AlgebraicNumber& g) { return g == r->a; }))
      gens.push_back(r->a);
  FieldPtr k;
  std::vector<Elem> images;
  if (!gens.empty()) {
    auto fb = build_field(gens);
    k = fb.field;
    images = fb.images;
  }
  auto elem = [&](const Raw& r) {
    if (!r.alg) return k ? Elem(k, r.q) : Elem(r.q);
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i] == r.a) return images[i];
    throw DomainError("lost algebraic generator");
  };

  Instance in;
  in.matrix = zero_matrix(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) in.matrix(i, j) = elem(entries[3 * i + j]);
  auto build = [&](const std::vector<RawHalfspace>& raw) {
    Polytope p;
    for (const auto& h : raw) {
      Halfspace hs;
      for (const auto& c : h.normal) hs.normal.push_back(elem(c));
      hs.offset = elem(h.offset);
      hs.equality = h.eq;
      p.hs.push_back(std::move(hs));
    }
    return p;
  };
  in.p1 = build(h1);
  in.p2 = build(h2);

  if (doc.contains("options")) {
    const json& o = doc["options"];
    if (!o.is_object()) fail("options", "expected an object");
    try {
      if (o.contains("max_witness")) in.options.max_witness = o["max_witness"].get<unsigned long>();
      if (o.contains("baker_exponent")) in.options.baker_exponent = o["baker_exponent"].get<unsigned>();
      if (o.contains("oracle_check")) in.options.oracle_check = o["oracle_check"].get<bool>();
      if (o.contains("emit_systems")) in.options.emit_systems = o["emit_systems"].get<bool>();
    } catch (const json::exception& e) {
      fail("options", e.what());
    }
  }
  return in;
}

std::string instance_json(const Instance& in) {
  auto q = [](const Elem& e) {
    if (!e.is_rational()) throw DomainError("instance_json handles rational instances only");
    return to_string(e.rational_value());
  };
  json doc;
  doc["matrix"] = json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < 3; ++j) row.push_back(q(in.matrix(i, j)));
    doc["matrix"].push_back(row);
  }
  auto poly = [&](const Polytope& p) {
    json hs = json::array();
    for (const auto& h : p.hs) {
      json n = json::array();
      for (const auto& c : h.normal) n.push_back(q(c));
      hs.push_back({{"normal", n}, {"offset", q(h.offset)}, {"rel", h.equality ? "=" : ">="}});
    }
    return json{{"halfspaces", hs}};
  };
  doc["p1"] = poly(in.p1);
  doc["p2"] = poly(in.p2);
  doc["options"] = {{"max_witness", in.options.max_witness},
                    {"baker_exponent", in.options.baker_exponent},
                    {"oracle_check", in.options.oracle_check},
                    {"emit_systems", in.options.emit_systems}};
  return doc.dump(2);
}

}  // namespace polycol
