#include "ordtop/report.hpp"

namespace ordtop {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json set_to_json(const finite_space& x, subset s) {
  json out = json::array();
  for (int i : bits_of(s)) out.push_back(x.name(i));
  return out;
}

json family_to_json(const finite_space& x, const std::vector<subset>& fam) {
  json out = json::array();
  for (subset s : fam) out.push_back(set_to_json(x, s));
  return out;
}

json poset_to_json(const finite_poset& p) {
  json pairs = json::array();
  for (int a = 0; a < p.size(); ++a)
    for (int b : bits_of(p.up_of(a)))
      if (b != a) pairs.push_back(json::array({p.name(a), p.name(b)}));
  return json{{"kind", "finite-poset"}, {"elements", p.names()}, {"pairs", pairs}};
}

json space_to_json(const finite_space& x) {
  json opens = json::array();
  for (subset u : x.opens()) opens.push_back(set_to_json(x, u));
  return json{{"kind", "finite-space"}, {"carrier", x.names()}, {"opens", opens}};
}

json report_to_json(const property_report& r) {
  json flags{{"t1", r.t1},
             {"d_space", r.d_space},
             {"strong_d", r.strong_d},
             {"well_filtered", r.well_filtered},
             {"sober", r.sober},
             {"coherent", r.coherent},
             {"locally_compact", r.locally_compact},
             {"locally_hypercompact", r.locally_hypercompact}};
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    json parts = json::array();
    for (const auto& p : w.parts) parts.push_back(json{{"label", p.label}, {"elements", p.elements}});
    witnesses.push_back(json{{"flag", w.flag}, {"detail", w.detail}, {"parts", parts}});
  }
  return json{{"flags", flags}, {"witnesses", witnesses}};
}

json checks_to_json(const std::vector<check_result>& checks) {
  json out = json::array();
  for (const auto& c : checks) {
    json e{{"check", c.id}, {"status", c.pass ? "PASS" : "FAIL"}};
    if (!c.pass) e["witness"] = c.detail;
    out.push_back(e);
  }
  return out;
}

space_descriptor parse_space_descriptor(const json& j) {
  if (!j.is_object() || !j.contains("kind")) fail(errc::bad_input, "descriptor needs a kind");
  space_descriptor d;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "finite-poset") {
    d.k = space_descriptor::kind::finite_poset;
    std::vector<std::string> elements = j.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> pairs;
    if (j.contains("pairs"))
      for (const auto& p : j.at("pairs")) pairs.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    d.poset = finite_poset::from_pairs(std::move(elements), pairs);
    return d;
  }
  if (kind == "finite-space") {
    d.k = space_descriptor::kind::finite_space;
    d.has_explicit_space = true;
    d.carrier = j.at("carrier").get<std::vector<std::string>>();
    d.opens = j.at("opens").get<std::vector<std::vector<std::string>>>();
    return d;
  }
  if (kind == "zoo") {
    d.k = space_descriptor::kind::zoo;
    d.zoo_id = zoo::parse_space_id(j.at("space").get<std::string>());
    return d;
  }
  fail(errc::bad_input, "unknown descriptor kind '" + kind + "'");
}

finite_space descriptor_space(const space_descriptor& d) {
  if (d.k == space_descriptor::kind::finite_poset) return finite_space::alexandroff(d.poset);
  if (d.k != space_descriptor::kind::finite_space) fail(errc::bad_input, "zoo descriptors have no finite space");
  std::vector<std::string> carrier = d.carrier;
  std::sort(carrier.begin(), carrier.end());
  auto index_of = [&](const std::string& name) {
    auto it = std::lower_bound(carrier.begin(), carrier.end(), name);
    if (it == carrier.end() || *it != name) fail(errc::unknown_element, "open set names unknown point '" + name + "'");
    return static_cast<int>(it - carrier.begin());
  };
  std::vector<subset> opens;
  for (const auto& open : d.opens) {
    subset u = 0;
    for (const auto& name : open) u |= subset{1} << index_of(name);
    opens.push_back(u);
  }
  return finite_space::from_opens(std::move(carrier), std::move(opens));
}

json claim_to_json(const zoo::claim& c) {
  json j{{"space", zoo::space_id_name(c.space)}, {"kind", zoo::claim_kind_name(c.kind)}};
  if (c.family)
    j["family"] = json{{"member", zoo::sym_to_string(c.family->member)}, {"sample_bound", c.family->sample_bound}};
  if (c.open_u) j["open"] = zoo::expr_to_string(*c.open_u);
  if (c.point_seq) {
    j["points"] = zoo::sym_atom_to_string(*c.point_seq);
    j["sample_bound"] = c.sample_bound;
  }
  if (c.point_x) j["x"] = zoo::point_to_string(*c.point_x);
  if (c.k1) j["k1"] = zoo::expr_to_string(*c.k1);
  if (c.k2) j["k2"] = zoo::expr_to_string(*c.k2);
  if (c.closed_a) j["closed"] = zoo::expr_to_string(*c.closed_a);
  if (c.kind == zoo::claim_kind::not_coherent && c.family) {
    j.erase("family");
    j["cover"] = json{{"member", zoo::sym_to_string(c.family->member)}, {"sample_bound", c.family->sample_bound}};
  }
  if (!c.derived_by.empty()) j["derived_by"] = c.derived_by;
  return j;
}

zoo::claim claim_from_json(const json& j) {
  zoo::claim c;
  c.space = zoo::parse_space_id(j.at("space").get<std::string>());
  c.kind = zoo::parse_claim_kind(j.at("kind").get<std::string>());
  zoo::grammar_id g = zoo::grammar_of(c.space);
  auto read_family = [&](const char* key) -> std::optional<zoo::family_spec> {
    if (!j.contains(key)) return std::nullopt;
    zoo::family_spec f;
    f.member = zoo::parse_sym_expr(g, j.at(key).at("member").get<std::string>());
    if (j.at(key).contains("sample_bound")) f.sample_bound = j.at(key).at("sample_bound").get<long>();
    return f;
  };
  c.family = read_family("family");
  if (!c.family) c.family = read_family("cover");
  if (j.contains("open")) c.open_u = zoo::parse_expr(g, j.at("open").get<std::string>());
  if (j.contains("points")) c.point_seq = zoo::parse_sym_point(g, j.at("points").get<std::string>());
  if (j.contains("x")) c.point_x = zoo::parse_point(g, j.at("x").get<std::string>());
  if (j.contains("k1")) c.k1 = zoo::parse_expr(g, j.at("k1").get<std::string>());
  if (j.contains("k2")) c.k2 = zoo::parse_expr(g, j.at("k2").get<std::string>());
  if (j.contains("closed")) c.closed_a = zoo::parse_expr(g, j.at("closed").get<std::string>());
  if (j.contains("sample_bound")) c.sample_bound = j.at("sample_bound").get<long>();
  if (j.contains("derived_by")) c.derived_by = j.at("derived_by").get<std::string>();
  return c;
}

json curated_to_json(const std::vector<zoo::curated_entry>& entries) {
  json out = json::array();
  for (const auto& e : entries) {
    json row{{"statement", e.description}, {"status", e.verified ? "VERIFIED" : "ASSUMED"}};
    if (e.backing) row["claim"] = claim_to_json(*e.backing);
    if (!e.note.empty()) row["note"] = e.note;
    out.push_back(row);
  }
  return out;
}

} // namespace ordtop
