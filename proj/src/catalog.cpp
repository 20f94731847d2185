#include "gwakit/catalog.hpp"

#include <fstream>
#include <sstream>

#include "gwakit/parallel.hpp"

namespace gwakit {

namespace {

template <class F>
auto decoding(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw CatalogError(std::string("malformed ") + what + ": " + e.what());
  } catch (const ValidationError& e) {
    throw CatalogError(std::string("invalid ") + what + ": " + e.what());
  }
}

ActionTable square(const json& j, std::size_t rows, std::size_t cols, const char* what) {
  auto t = j.get<ActionTable>();
  if (t.size() != rows) throw CatalogError(std::string(what) + ": expected " + std::to_string(rows) + " rows");
  for (const auto& r : t)
    if (r.size() != cols) throw CatalogError(std::string(what) + ": expected rows of length " + std::to_string(cols));
  return t;
}

int parse_int(const std::string& s) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw CatalogError("not an integer: '" + s + "'");
  return v;
}

}  // namespace

GroupPtr resolve_group_spec(const std::string& spec) {
  if (spec == "A4") return make_alternating_4();
  if (spec == "klein4") return small_group(4, 2);
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw CatalogError("unknown group spec '" + spec + "'");
  return small_group(parse_int(spec.substr(0, colon)), parse_int(spec.substr(colon + 1)));
}

json group_to_json(const Group& g) {
  json j;
  j["order"] = g.order();
  j["table"] = g.table_rows();
  if (const auto& id = g.catalog_id())
    j["catalog_id"] = {id->order, id->index};
  else
    j["catalog_id"] = nullptr;
  if (g.names().empty())
    j["names"] = nullptr;
  else
    j["names"] = g.names();
  return j;
}

GroupPtr group_from_json(const json& j) {
  return decoding("group", [&] {
    const auto n = j.at("order").get<std::size_t>();
    auto table = square(j.at("table"), n, n, "group table");
    std::optional<CatalogId> id;
    if (!j.at("catalog_id").is_null()) {
      const auto v = j.at("catalog_id").get<std::vector<int>>();
      if (v.size() != 2) throw CatalogError("catalog_id must be [order, index]");
      id = CatalogId{v[0], v[1]};
    }
    std::vector<std::string> names;
    if (j.contains("names") && !j.at("names").is_null()) names = j.at("names").get<std::vector<std::string>>();
    if (!names.empty() && names.size() != n) throw CatalogError("names must list every element");
    return make_group(Group::from_table(std::move(table), id, std::move(names)));
  });
}

json gwa_to_json(const GroupWithAction& g) { return {{"group", group_to_json(g.group())}, {"act", g.table()}}; }

GroupWithAction gwa_from_json(const json& j) {
  return decoding("group with action", [&] {
    GroupPtr g = group_from_json(j.at("group"));
    const auto n = static_cast<std::size_t>(g->order());
    return GroupWithAction(g, square(j.at("act"), n, n, "action table"));
  });
}

json xmod_to_json(const XModGwA& x) {
  return {{"source", gwa_to_json(x.source())},
          {"range", gwa_to_json(x.range())},
          {"boundary", x.boundary.image},
          {"dot", x.action.dot},
          {"star", x.action.star},
          {"level", x.level == XModLevel::full ? "full" : "pre"}};
}

XModGwA xmod_from_json(const json& j) {
  return decoding("crossed module", [&] {
    GroupWithAction s = gwa_from_json(j.at("source"));
    GroupWithAction r = gwa_from_json(j.at("range"));
    const auto ns = static_cast<std::size_t>(s.order()), nr = static_cast<std::size_t>(r.order());
    auto image = j.at("boundary").get<std::vector<Elem>>();
    if (image.size() != ns) throw CatalogError("boundary must map every source element");
    for (Elem e : image)
      if (e < 0 || static_cast<std::size_t>(e) >= nr) throw CatalogError("boundary value out of range");
    auto dot = square(j.at("dot"), nr, ns, "dot");
    auto star = square(j.at("star"), nr, ns, "star");
    for (const auto* t : {&dot, &star})
      for (const auto& row : *t)
        for (Elem e : row)
          if (e < 0 || static_cast<std::size_t>(e) >= ns) throw CatalogError("action value out of range");
    XModGwA x = pre_xmod_obj(gwa_morphism(s, r, std::move(image)), dot, star);
    const auto level = j.at("level").get<std::string>();
    if (level != "pre" && level != "full") throw CatalogError("level must be \"pre\" or \"full\"");
    if (level == "full" && x.level != XModLevel::full) throw CatalogError("item marked full fails CM2 or CM4");
    if (!is_pre_xmod(x)) throw CatalogError("item fails CM1 or CM3");
    return x;
  });
}

json enumeration_to_json(const XModEnumeration& e, std::optional<std::size_t> c1_count) {
  json items = json::array();
  for (const auto& x : e.pre) items.push_back(xmod_to_json(x));
  json j{{"pre_count", e.pre.size()}, {"full_count", e.full.size()}, {"items", std::move(items)}};
  if (c1_count) j["c1_count"] = *c1_count;
  return j;
}

XModEnumeration enumeration_from_json(const json& j) {
  return decoding("xmod enumeration", [&] {
    XModEnumeration e;
    for (const auto& item : j.at("items")) {
      e.pre.push_back(xmod_from_json(item));
      if (e.pre.back().level == XModLevel::full) e.full.push_back(e.pre.back());
    }
    if (j.at("pre_count").get<std::size_t>() != e.pre.size() || j.at("full_count").get<std::size_t>() != e.full.size())
      throw CatalogError("pre_count/full_count disagree with items");
    return e;
  });
}

json simplicial_to_json(const TruncatedSimplicialGwA& t) {
  return {{"g0", gwa_to_json(t.g0)},
          {"g1", gwa_to_json(t.g1)},
          {"d0", t.d0.image},
          {"d1", t.d1.image},
          {"s0", t.s0.image}};
}

json roundtrip_to_json(std::size_t xmod_id, const RoundTripReport& r) {
  json j{{"xmod_id", xmod_id},
         {"roundtrip_ok", r.ok()},
         {"bracket_zero", r.bracket_zero},
         {"simplicial_ok", r.simplicial_ok},
         {"evaluations_ok", r.evaluations_ok},
         {"moore_length", r.moore_length}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

// Classification ---------------------------------------------------------------

std::vector<ClassificationRow> classify(std::span<const GroupWithAction> list, int jobs) {
  const auto classes = isomorphism_classes(list, jobs);
  std::vector<ClassificationRow> rows(classes.size());
  parallel_for(classes.size(), jobs, [&](std::size_t k) {
    const auto& rep = list[classes[k].front()];
    rows[k] = {static_cast<int>(k + 1),  classes[k].size(),          classes[k].front(),
               all_ideals(rep).size(),   nilpotency_class(rep),      satisfies_condition1(rep)};
  });
  return rows;
}

std::string classification_to_csv(std::span<const ClassificationRow> rows) {
  std::ostringstream out;
  out << kClassificationCsvHeader << '\n';
  for (const auto& r : rows)
    out << r.family << ',' << r.members << ',' << r.representative_index << ',' << r.ideals << ','
        << r.nilpotency_class << ',' << (r.condition1 ? "true" : "false") << '\n';
  return out.str();
}

json classification_to_json(std::span<const ClassificationRow> rows, bool trivial_group) {
  json out = json::array();
  for (const auto& r : rows) {
    json j{{"family", r.family},
           {"members", r.members},
           {"representative_index", r.representative_index},
           {"ideals", r.ideals},
           {"nilpotency_class", r.nilpotency_class},
           {"condition1", r.condition1}};
    if (trivial_group) j["note"] = "trivial group: nilpotency class 1 by convention";
    out.push_back(std::move(j));
  }
  return out;
}

std::vector<ClassificationRow> classification_from_json(const json& j) {
  return decoding("classification", [&] {
    std::vector<ClassificationRow> rows;
    for (const auto& r : j)
      rows.push_back({r.at("family").get<int>(), r.at("members").get<std::size_t>(),
                      r.at("representative_index").get<std::size_t>(), r.at("ideals").get<std::size_t>(),
                      r.at("nilpotency_class").get<int>(), r.at("condition1").get<bool>()});
    return rows;
  });
}

// Catalog files ----------------------------------------------------------------

std::string to_string(CatalogKind k) {
  switch (k) {
    case CatalogKind::gwa_list: return "gwa_list";
    case CatalogKind::xmod_enumeration: return "xmod_enumeration";
    case CatalogKind::classification: return "classification";
    case CatalogKind::roundtrip_report: return "roundtrip_report";
  }
  return "?";
}

CatalogKind catalog_kind_from_string(const std::string& s) {
  for (auto k : {CatalogKind::gwa_list, CatalogKind::xmod_enumeration, CatalogKind::classification,
                 CatalogKind::roundtrip_report})
    if (to_string(k) == s) return k;
  throw CatalogError("unknown catalog kind '" + s + "'");
}

json catalog_to_json(const CatalogFile& f) {
  return {{"schema_version", f.schema_version},
          {"kind", to_string(f.kind)},
          {"payload", f.payload},
          {"provenance", f.provenance}};
}

CatalogFile catalog_from_json(const json& j) {
  return decoding("catalog", [&] {
    CatalogFile f;
    f.schema_version = j.at("schema_version").get<int>();
    if (f.schema_version != kSchemaVersion)
      throw CatalogError("unsupported schema_version " + std::to_string(f.schema_version));
    f.kind = catalog_kind_from_string(j.at("kind").get<std::string>());
    f.payload = j.at("payload");
    f.provenance = j.value("provenance", json::object());
    return f;
  });
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error("cannot rename into " + path.string() + ": " + ec.message());
  }
}

void write_catalog(const std::filesystem::path& path, const CatalogFile& f) {
  write_text_atomic(path, catalog_to_json(f).dump(1) + "\n");
}

CatalogFile read_catalog(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CatalogError("cannot read " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw CatalogError(path.string() + " is not valid JSON");
  return catalog_from_json(j);
}

const char* tool_version() { return GWAKIT_VERSION; }

json make_provenance(const std::string& command, json params) {
  return {{"command", command}, {"params", std::move(params)}, {"tool", "gwakit"}, {"tool_version", tool_version()}};
}

}  // namespace gwakit
