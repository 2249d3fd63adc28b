#include "qorder_cli/io.hpp"

#include <fstream>
#include <sstream>

namespace qorder::cli {

namespace {

Element element_from(const nlohmann::json& v, std::size_t base, std::size_t n, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string(what) + " entries must be integers");
  const auto raw = v.get<long long>();
  if (raw < static_cast<long long>(base) || raw >= static_cast<long long>(base + n)) {
    throw ParseError(std::string(what) + " entry " + std::to_string(raw) + " is outside " +
                     std::to_string(base) + ".." + std::to_string(base + n - 1));
  }
  return static_cast<Element>(raw - static_cast<long long>(base));
}

Table table_from(const nlohmann::json& doc, std::size_t base) {
  if (!doc.contains("table") || !doc["table"].is_array() || doc["table"].empty()) {
    throw ParseError("\"table\" must be a nonempty array of rows");
  }
  const auto& rows = doc["table"];
  const std::size_t n = rows.size();
  Table t(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) {
      throw ParseError("table is not square at row " + std::to_string(i + base));
    }
    for (std::size_t j = 0; j < n; ++j) {
      t(static_cast<Element>(i), static_cast<Element>(j)) = element_from(rows[i][j], base, n, "table");
    }
  }
  return t;
}

std::size_t index_base_from(const nlohmann::json& doc) {
  if (!doc.contains("index_base")) return 0;
  const auto& b = doc["index_base"];
  if (!b.is_number_integer() || (b.get<long long>() != 0 && b.get<long long>() != 1)) {
    throw ParseError("\"index_base\" must be 0 or 1");
  }
  return static_cast<std::size_t>(b.get<long long>());
}

std::vector<Element> elements_from(const nlohmann::json& v, const char* key) {
  if (!v.is_object() || !v.contains(key) || !v[key].is_array()) {
    throw ParseError(std::string("expected an object with array field \"") + key + "\"");
  }
  std::vector<Element> out;
  const std::size_t n = v[key].size();
  for (const auto& x : v[key]) out.push_back(element_from(x, 0, n, key));
  return out;
}

Json elements_json(std::span<const Element> xs) {
  Json a = Json::array();
  for (Element x : xs) a.push_back(x);
  return a;
}

Json table_json(const Table& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows()) rows.push_back(elements_json(r));
  return rows;
}

Json shifted(const std::vector<Element>& xs, std::size_t base) {
  Json a = Json::array();
  for (Element x : xs) a.push_back(x + base);
  return a;
}

}  // namespace

ParsedInput parse_input(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("input document must be a JSON object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    throw ParseError("input document needs a string field \"kind\"");
  }
  const auto kind = doc["kind"].get<std::string>();
  const auto base = index_base_from(doc);
  ParsedInput in{FiniteQuandle{}, base, std::nullopt};
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("\"name\" must be a string");
    in.name = doc["name"].get<std::string>();
  }
  if (kind == "quandle") {
    in.value = FiniteQuandle::from_table(table_from(doc, base));
  } else if (kind == "group") {
    auto t = table_from(doc, base);
    if (!doc.contains("identity")) throw ParseError("group document needs \"identity\"");
    const Element e = element_from(doc["identity"], base, t.size(), "identity");
    in.value = FiniteGroup::from_table(std::move(t), e);
  } else {
    throw ParseError("unknown kind \"" + kind + "\" (expected quandle or group)");
  }
  return in;
}

ParsedInput parse_input_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_input(doc);
}

ParsedInput load_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input_text(buf.str());
}

Json serialize(const FiniteQuandle& q, const std::optional<std::string>& name) {
  Json j{{"kind", "quandle"}, {"index_base", 0}, {"table", table_json(q.table())}};
  if (name) j["name"] = *name;
  return j;
}

Json serialize(const FiniteGroup& g) {
  return Json{{"kind", "group"},
              {"index_base", 0},
              {"identity", g.identity()},
              {"table", table_json(g.table())}};
}

Json to_json(const CyclicOrder& c) { return Json{{"arrangement", elements_json(c.arrangement())}}; }

Json to_json(const LinearOrder& o) { return Json{{"ranking", elements_json(o.ranking())}}; }

Json to_json(const TripleFunction& f) {
  Json entries = Json::array();
  const auto n = static_cast<Element>(f.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (!is_degenerate_triple(x, y, z)) entries.push_back(Json::array({x, y, z, f(x, y, z)}));
      }
    }
  }
  return entries;
}

CyclicOrder cyclic_order_from_json(const nlohmann::json& doc) {
  return CyclicOrder::from_arrangement(elements_from(doc, "arrangement"));
}

LinearOrder linear_order_from_json(const nlohmann::json& doc) {
  return LinearOrder::from_ranking(elements_from(doc, "ranking"));
}

TripleFunction triple_function_from_json(const nlohmann::json& doc, std::size_t n) {
  if (!doc.is_array()) throw ParseError("triple function must be an array of [x,y,z,value]");
  TripleFunction f(n);
  for (const auto& e : doc) {
    if (!e.is_array() || e.size() != 4) throw ParseError("triple entries have four fields");
    const Element x = element_from(e[0], 0, n, "triple");
    const Element y = element_from(e[1], 0, n, "triple");
    const Element z = element_from(e[2], 0, n, "triple");
    if (is_degenerate_triple(x, y, z)) throw ParseError("degenerate triples are not listed");
    if (!e[3].is_number_integer() || e[3].get<int>() < -1 || e[3].get<int>() > 1) {
      throw ParseError("triple values lie in {-1,0,1}");
    }
    f.set(x, y, z, e[3].get<int>());
  }
  return f;
}

Json to_json(const Certificate& cert) {
  Json j{{"kind", to_string(cert.kind)}, {"description", cert.describe()}};
  switch (cert.kind) {
    case CertificateKind::NonCyclicAction:
      j["translations"] = to_string(cert.translations);
      j["group_order"] = cert.group_order;
      j["max_element_order"] = cert.max_element_order;
      break;
    case CertificateKind::NonSemiregularAction:
      j["translations"] = to_string(cert.translations);
      j["group_order"] = cert.group_order;
      j["fixing_element"] = elements_json(cert.fixing_element->images());
      j["fixed_point"] = cert.fixed_point;
      break;
    case CertificateKind::NonInjectiveLeftTranslation:
    case CertificateKind::NonIdentityTranslation:
      j["side"] = to_string(cert.side);
      j["base"] = cert.base;
      j["points"] = elements_json(cert.points);
      break;
    case CertificateKind::ExhaustiveSearch:
      j["candidates_checked"] = cert.candidates_checked;
      break;
  }
  return j;
}

Json to_json(const Verdict& v) {
  Json j{{"property", to_string(v.property)},
         {"answer", v.answer ? "yes" : "no"},
         {"tier", to_string(v.tier)},
         {"oracle_checked", v.oracle_checked}};
  if (const auto* c = std::get_if<CyclicOrder>(&v.witness)) {
    j["witness"] = to_json(*c);
  } else if (const auto* o = std::get_if<LinearOrder>(&v.witness)) {
    j["witness"] = to_json(*o);
  } else {
    j["witness"] = nullptr;
  }
  j["certificate"] = v.certificate ? to_json(*v.certificate) : Json(nullptr);
  return j;
}

Json to_json(const OrderSpace& space) {
  Json members = Json::array();
  if (space.is_circular()) {
    for (const auto& c : space.circular) members.push_back(to_json(c));
  } else {
    for (const auto& o : space.linear) members.push_back(to_json(o));
  }
  return Json{{"kind", to_string(space.kind)},
              {"carrier_size", space.carrier_size},
              {"count", space.size()},
              {"members", std::move(members)}};
}

Json to_json(const EmbeddingReport& report) {
  Json fibers = Json::array();
  for (const auto& f : report.fibers) {
    Json pre = Json::array();
    for (const auto& o : f.preimage) pre.push_back(to_json(o));
    fibers.push_back(Json{{"target", to_json(f.target)},
                          {"size", f.preimage.size()},
                          {"preimage", std::move(pre)}});
  }
  return Json{{"side", to_string(report.side)},
              {"domain_size", report.domain.size()},
              {"image_size", report.image.size()},
              {"injective", report.injective()},
              {"image_in_space", report.image_in_space},
              {"fibers", std::move(fibers)}};
}

Json to_json(const CensusRecord& r) {
  Json orbit_sizes = Json::array();
  for (auto s : r.orbit_sizes) orbit_sizes.push_back(s);
  return Json{{"order", r.order},
              {"class_id", r.class_id},
              {"representative_table", table_json(r.representative.table())},
              {"right_circular", r.right_circular},
              {"left_circular", r.left_circular},
              {"bi_circular", r.bi_circular},
              {"right_orderable", r.right_orderable},
              {"left_orderable", r.left_orderable},
              {"latin", r.latin},
              {"involutory", r.involutory},
              {"trivial", r.trivial},
              {"orbit_sizes", std::move(orbit_sizes)},
              {"automorphisms", r.automorphisms},
              {"rco_size", r.rco_size},
              {"lco_size", r.lco_size},
              {"bco_size", r.bco_size},
              {"ro_size", r.ro_size},
              {"lo_size", r.lo_size}};
}

Json error_to_json(const std::exception& e, std::size_t index_base) {
  Json j{{"message", e.what()}};
  if (const auto* q = dynamic_cast<const NotAQuandle*>(&e)) {
    j["kind"] = "NotAQuandle";
    j["axiom"] = to_string(q->axiom());
    j["witness"] = elements_json(q->witness());
    j["witness_in_input_base"] = shifted(q->witness(), index_base);
  } else if (const auto* g = dynamic_cast<const NotAGroup*>(&e)) {
    j["kind"] = "NotAGroup";
    j["reason"] = g->reason();
    j["witness"] = elements_json(g->witness());
    j["witness_in_input_base"] = shifted(g->witness(), index_base);
  } else if (dynamic_cast<const ParseError*>(&e)) {
    j["kind"] = "ParseError";
  } else if (dynamic_cast<const ResourceLimit*>(&e)) {
    j["kind"] = "ResourceLimit";
  } else if (dynamic_cast<const NotInvertible*>(&e)) {
    j["kind"] = "NotInvertible";
  } else if (dynamic_cast<const NotAnAutomorphism*>(&e)) {
    j["kind"] = "NotAnAutomorphism";
  } else if (dynamic_cast<const OracleMismatch*>(&e)) {
    j["kind"] = "OracleMismatch";
  } else {
    j["kind"] = "Error";
  }
  return j;
}

}  // namespace qorder::cli
