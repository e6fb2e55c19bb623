#include "germkit/json_io.hpp"

#include <json.hpp>

namespace germkit {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

json fe_to_json(const NumberField& F, const FieldElement& c) {
  if (F.degree() == 1) return rat_str(c.coords[0]);
  json arr = json::array();
  for (const auto& q : c.coords) arr.push_back(rat_str(q));
  return arr;
}

FieldElement fe_from_json(const NumberField& F, const json& j) {
  if (j.is_string()) {
    if (F.degree() != 1)
      fail(Errc::ParseError, "scalar coefficient for an extension field element");
    return F.from_rational(rat_parse(j.get<std::string>()));
  }
  if (!j.is_array() || static_cast<int>(j.size()) != F.degree())
    fail(Errc::ParseError, "field element must list one coordinate per basis power");
  FieldElement e = F.zero();
  for (int k = 0; k < F.degree(); ++k)
    e.coords[k] = rat_parse(j.at(k).get<std::string>());
  return e;
}

json series_to_jobj(const Series& s) {
  json j;
  j["trunc"] = s.is_exact() ? json("exact") : json(s.trunc().degree());
  json terms = json::array();
  for (const auto& [e, c] : s.terms()) {
    json term;
    term["e"] = e;
    term["c"] = fe_to_json(s.ring().field(), c);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

Series series_from_jobj(const json& j, const Ring& ring) {
  Trunc t = Trunc::exact();
  if (!j.contains("trunc")) fail(Errc::ParseError, "series without trunc field");
  if (j["trunc"].is_string()) {
    if (j["trunc"].get<std::string>() != "exact")
      fail(Errc::ParseError, "trunc must be a degree or \"exact\"");
  } else {
    t = Trunc::at(j["trunc"].get<int>());
  }
  Series s(ring, t);
  for (const auto& term : j.at("terms")) {
    ExpVec e = term.at("e").get<ExpVec>();
    s.add_term(e, fe_from_json(ring.field(), term.at("c")));
  }
  return s;
}

json matrix_to_jobj(const std::vector<std::vector<long>>& M) {
  json j = json::array();
  for (const auto& row : M) j.push_back(row);
  return j;
}

std::vector<std::vector<long>> matrix_from_jobj(const json& j) {
  std::vector<std::vector<long>> M;
  for (const auto& row : j) M.push_back(row.get<std::vector<long>>());
  return M;
}

json cert_to_jobj(const Certification& c) {
  if (c.is_exact) return json("exact");
  json j;
  j["mod_degree"] = c.degree;
  return j;
}

Certification cert_from_jobj(const json& j) {
  Certification c;
  if (j.is_string()) {
    if (j.get<std::string>() != "exact")
      fail(Errc::ParseError, "certification must be \"exact\" or {\"mod_degree\": D}");
    return c;
  }
  c.is_exact = false;
  c.degree = j.at("mod_degree").get<int>();
  return c;
}

json disc_to_jobj(const DiscriminantRecord& rec) {
  json j;
  j["delta"] = series_to_jobj(rec.delta);
  j["vanished_below"] = rec.vanished_below;
  j["certification"] = cert_to_jobj(rec.certification);
  return j;
}

} // namespace

std::string canonical_json_text(const std::string& json_text) {
  return dump(parse(json_text));
}

std::string field_to_json(const NumberField& F) {
  json j;
  j["generator"] = F.generator();
  json mp = json::array();
  for (const auto& c : F.min_poly()) mp.push_back(rat_str(c));
  j["min_poly"] = std::move(mp);
  return dump(j);
}

NumberField field_from_json(const std::string& text) {
  json j = parse(text);
  std::string gen = j.at("generator").get<std::string>();
  std::vector<Rational> mp;
  for (const auto& c : j.at("min_poly")) mp.push_back(rat_parse(c.get<std::string>()));
  return NumberField(gen, std::move(mp));
}

std::string series_to_json(const Series& s) { return dump(series_to_jobj(s)); }

Series series_from_json(const std::string& text, const Ring& ring) {
  return series_from_jobj(parse(text), ring);
}

std::string preparation_to_json(const PreparationResult& p) {
  json j;
  j["unit"] = series_to_jobj(p.unit);
  json poly;
  poly["dist_var"] = p.poly.ring.var_name(p.poly.dist_var);
  poly["degree"] = p.poly.degree;
  json coeffs = json::array();
  for (const auto& a : p.poly.coeffs) coeffs.push_back(series_to_jobj(a));
  poly["coeffs"] = std::move(coeffs);
  j["poly"] = std::move(poly);
  j["valid_to"] = p.valid_to;
  return dump(j);
}

std::string disc_record_to_json(const DiscriminantRecord& rec) {
  json j = disc_to_jobj(rec);
  j["j"] = rec.j;
  return dump(j);
}

std::string tower_to_json(const Tower& t) {
  json j;
  j["mode"] = t.kind == GermKind::Set ? "set" : "function";
  json stages = json::array();
  for (const auto& st : t.stages) {
    json s;
    s["i"] = st.level;
    s["p"] = st.f.degree;
    s["q"] = st.q;
    s["valid_to"] = st.valid_to;
    s["unit"] = series_to_jobj(st.unit);
    json coeffs = json::array();
    for (const auto& a : st.f.coeffs) coeffs.push_back(series_to_jobj(a));
    s["coeffs"] = std::move(coeffs);
    s["change"] = matrix_to_jobj(st.change);
    if (st.disc) {
      s["j"] = st.disc->j;
      s["disc"] = disc_to_jobj(*st.disc);
    }
    stages.push_back(std::move(s));
  }
  j["stages"] = std::move(stages);
  json entries = json::array();
  for (const auto& e : t.transversality) {
    json te;
    te["level"] = e.level;
    te["orders"] = e.orders;
    te["mults"] = e.mults;
    te["strict"] = e.strict;
    entries.push_back(std::move(te));
  }
  j["transversality"] = json{{"entries", std::move(entries)}};
  if (t.kind == GermKind::Function) {
    json b = json::array();
    for (const auto& row : t.b) {
      json brow = json::array();
      for (const auto& s : row) brow.push_back(series_to_jobj(s));
      b.push_back(std::move(brow));
    }
    j["b"] = std::move(b);
  }
  return dump(j);
}

Tower tower_from_json(const std::string& text, const Ring& ring) {
  json j = parse(text);
  Tower t;
  t.ring = ring;
  std::string mode = j.at("mode").get<std::string>();
  if (mode == "set")
    t.kind = GermKind::Set;
  else if (mode == "function")
    t.kind = GermKind::Function;
  else
    fail(Errc::ParseError, "mode must be \"set\" or \"function\"");
  for (const auto& s : j.at("stages")) {
    TowerStage st;
    st.level = s.at("i").get<int>();
    st.q = s.at("q").get<int>();
    st.valid_to = s.at("valid_to").get<int>();
    st.unit = series_from_jobj(s.at("unit"), ring);
    st.change = matrix_from_jobj(s.at("change"));
    int p = s.at("p").get<int>();
    st.f = WeierstrassPoly{ring, std::max(st.level - 1, 0), p, {}};
    for (const auto& c : s.at("coeffs")) st.f.coeffs.push_back(series_from_jobj(c, ring));
    if (static_cast<int>(st.f.coeffs.size()) != p)
      fail(Errc::ParseError, "stage coefficient count does not match its degree");
    if (s.contains("disc")) {
      DiscriminantRecord rec;
      rec.j = s.at("j").get<int>();
      rec.delta = series_from_jobj(s.at("disc").at("delta"), ring);
      rec.vanished_below = s.at("disc").at("vanished_below").get<std::vector<int>>();
      rec.certification = cert_from_jobj(s.at("disc").at("certification"));
      st.disc = std::move(rec);
    }
    t.stages.push_back(std::move(st));
  }
  for (const auto& e : j.at("transversality").at("entries")) {
    TransversalityEntry te;
    te.level = e.at("level").get<int>();
    te.orders = e.at("orders").get<std::vector<int>>();
    te.mults = e.at("mults").get<std::vector<int>>();
    te.strict = e.at("strict").get<bool>();
    t.transversality.push_back(std::move(te));
  }
  if (j.contains("b"))
    for (const auto& row : j.at("b")) {
      std::vector<Series> brow;
      for (const auto& s : row) brow.push_back(series_from_jobj(s, ring));
      t.b.push_back(std::move(brow));
    }
  return t;
}

std::string tower_report_to_json(const TowerReport& r) {
  json j;
  j["ok"] = r.ok;
  json stages = json::array();
  for (const auto& c : r.stages) {
    json s;
    s["level"] = c.level;
    s["reconstruction_ok"] = c.reconstruction_ok;
    s["agreement_degree"] = c.agreement_degree;
    s["checked_to"] = c.checked_to;
    s["vanishing_ok"] = c.vanishing_ok;
    s["note"] = c.note;
    stages.push_back(std::move(s));
  }
  j["stages"] = std::move(stages);
  return dump(j);
}

std::string eisenstein_to_json(const EisensteinResult& res) {
  json j;
  j["e"] = res.e;
  j["out_degree"] = res.out_degree;
  j["b"] = series_to_jobj(res.b);
  j["r"] = series_to_jobj(res.r);
  j["R"] = series_to_jobj(res.Rfull);
  json nums = json::array();
  for (const auto& [alpha, poly] : res.numerators) {
    json n;
    n["alpha"] = alpha;
    n["num"] = series_to_jobj(poly);
    nums.push_back(std::move(n));
  }
  j["numerators"] = std::move(nums);
  return dump(j);
}

EisensteinResult eisenstein_from_json(const std::string& text, const Ring& tring,
                                      const Ring& txring) {
  json j = parse(text);
  EisensteinResult res;
  res.tring = tring;
  res.txring = txring;
  res.e = j.at("e").get<int>();
  res.out_degree = j.at("out_degree").get<int>();
  res.b = series_from_jobj(j.at("b"), tring);
  res.r = series_from_jobj(j.at("r"), tring);
  res.Rfull = series_from_jobj(j.at("R"), txring);
  for (const auto& n : j.at("numerators")) {
    ExpVec alpha = n.at("alpha").get<ExpVec>();
    res.numerators.emplace(alpha, series_from_jobj(n.at("num"), tring));
  }
  return res;
}

std::string eisenstein_report_to_json(const EisensteinReport& r) {
  json j;
  j["ok"] = r.ok;
  j["checked_to"] = r.checked_to;
  j["mismatches"] = r.mismatches;
  return dump(j);
}

} // namespace germkit
