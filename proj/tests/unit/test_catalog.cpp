#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gwakit/catalog.hpp"

using namespace gwakit;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "gwakit_unit";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("group specs") {
  CHECK(resolve_group_spec("8:5")->order() == 8);
  CHECK(resolve_group_spec("A4")->order() == 12);
  CHECK(*resolve_group_spec("klein4") == *small_group(4, 2));
  for (const char* bad : {"", "8", "8:", ":3", "x:1", "8:9", "S4", "4:2:1"})
    CHECK_THROWS_AS(resolve_group_spec(bad), CatalogError);
}

TEST_CASE("group and GwA JSON round trip") {
  for (const auto& g : all_gwa_on_group(small_group(4, 2))) {
    auto j = gwa_to_json(g);
    CHECK(j["group"]["catalog_id"] == json::array({4, 2}));
    CHECK(j["group"]["names"] == json::array({"e", "a", "b", "ab"}));
    CHECK(gwa_from_json(j) == g);
    CHECK(gwa_from_json(json::parse(j.dump())) == g);
  }
  auto a4 = make_alternating_4();
  auto j = group_to_json(*a4);
  CHECK(j["catalog_id"].is_null());
  CHECK(*group_from_json(j) == *a4);
}

TEST_CASE("malformed documents") {
  auto good = gwa_to_json(gwa_trivial(small_group(4, 2)));
  auto j = good;
  j["act"][1] = {0, 0, 2, 3};
  CHECK_THROWS_AS(gwa_from_json(j), CatalogError);
  j = good;
  j["group"]["order"] = 3;
  CHECK_THROWS_AS(gwa_from_json(j), CatalogError);
  j = good;
  j.erase("act");
  CHECK_THROWS_AS(gwa_from_json(j), CatalogError);
  j = good;
  j["group"]["table"][1][1] = "x";
  CHECK_THROWS_AS(gwa_from_json(j), CatalogError);
  CHECK_THROWS_AS(catalog_from_json(json{{"schema_version", 99}, {"kind", "gwa_list"}, {"payload", {}}}), CatalogError);
  CHECK_THROWS_AS(catalog_from_json(json{{"schema_version", 1}, {"kind", "other"}, {"payload", {}}}), CatalogError);
}

TEST_CASE("crossed module JSON") {
  auto e = all_xmods_by_id(4, 1, 4, 2, 2);
  for (std::size_t k = 0; k < e.pre.size(); k += 37) {
    auto j = xmod_to_json(e.pre[k]);
    auto x = xmod_from_json(j);
    CHECK(x.level == e.pre[k].level);
    CHECK(x.boundary.image == e.pre[k].boundary.image);
    CHECK(x.action.dot == e.pre[k].action.dot);
    CHECK(xmod_to_json(x) == j);
  }
  auto j = xmod_to_json(e.full.front());
  j["boundary"][1] = 1;
  j["boundary"][2] = 2;
  CHECK_THROWS_AS(xmod_from_json(j), CatalogError);

  auto doc = enumeration_to_json(e, 88);
  CHECK(doc["pre_count"] == 416);
  CHECK(doc["full_count"] == 184);
  CHECK(doc["c1_count"] == 88);
  auto back = enumeration_from_json(doc);
  CHECK(back.pre.size() == 416);
  CHECK(back.full.size() == 184);
  doc["full_count"] = 3;
  CHECK_THROWS_AS(enumeration_from_json(doc), CatalogError);
}

TEST_CASE("simplicial and round-trip JSON") {
  auto x = identity_xmod(gwa_trivial(small_group(2, 1)));
  auto t = simplicial_from_xmod(x);
  auto j = simplicial_to_json(t);
  CHECK(j["d0"].size() == 4);
  CHECK(j["s0"] == json::array({0, 2}));
  CHECK(gwa_from_json(j["g1"]) == t.g1);
  auto r = roundtrip_to_json(3, roundtrip(x));
  CHECK(r["xmod_id"] == 3);
  CHECK(r["roundtrip_ok"] == true);
  CHECK(r["bracket_zero"] == true);
}

TEST_CASE("classification rows and renderings") {
  auto list = all_gwa_on_group(small_group(4, 2));
  auto rows = classify(list, 2);
  std::size_t members = 0;
  for (const auto& r : rows) members += r.members;
  CHECK(members == 10);
  CHECK(rows.front().family == 1);
  CHECK(rows.front().representative_index == 0);

  auto csv = classification_to_csv(rows);
  CHECK(csv.rfind("family,members,representative,ideals,nilpotency_class,condition1\n", 0) == 0);
  auto parsed = classification_from_json(classification_to_json(rows));
  CHECK(parsed == rows);

  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  for (const auto& r : rows) {
    std::getline(in, line);
    std::ostringstream expect;
    expect << r.family << ',' << r.members << ',' << r.representative_index << ',' << r.ideals << ','
           << r.nilpotency_class << ',' << (r.condition1 ? "true" : "false");
    CHECK(line == expect.str());
  }

  auto trivial = classify(all_gwa_on_group(small_group(1, 1)));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].nilpotency_class == 1);
  CHECK(classification_to_json(trivial, true)[0].contains("note"));
}

TEST_CASE("catalog files are deterministic and atomic") {
  auto list = all_gwa_on_group(small_group(4, 2));
  json items = json::array();
  for (const auto& g : list) items.push_back(gwa_to_json(g));
  CatalogFile f{kSchemaVersion, CatalogKind::gwa_list, {{"count", list.size()}, {"items", items}},
                make_provenance("gwa enumerate", {{"group", "4:2"}})};
  auto p1 = scratch("a.json"), p2 = scratch("b.json");
  write_catalog(p1, f);
  write_catalog(p2, f);
  CHECK(slurp(p1) == slurp(p2));
  CHECK_FALSE(fs::exists(p1.string() + ".tmp"));
  auto back = read_catalog(p1);
  CHECK(back.kind == CatalogKind::gwa_list);
  CHECK(back.payload == f.payload);
  CHECK(back.provenance["tool_version"] == tool_version());

  std::ofstream(scratch("junk.json")) << "{not json";
  CHECK_THROWS_AS(read_catalog(scratch("junk.json")), CatalogError);
  CHECK_THROWS_AS(read_catalog(scratch("missing.json")), CatalogError);
  for (auto k : {CatalogKind::gwa_list, CatalogKind::xmod_enumeration, CatalogKind::classification,
                 CatalogKind::roundtrip_report})
    CHECK(catalog_kind_from_string(to_string(k)) == k);
}
