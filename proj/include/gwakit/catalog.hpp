#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "gwakit/simplicial.hpp"

namespace gwakit {

using json = nlohmann::json;

// Resolution of group specs ---------------------------------------------------

/// "order:index", "A4" or "klein4". Throws CatalogError on anything else.
GroupPtr resolve_group_spec(const std::string& spec);

// JSON encodings ---------------------------------------------------------------
//
// Decoders re-run every validation and throw CatalogError when a document is
// structurally wrong or describes an invalid object.

json group_to_json(const Group& g);
GroupPtr group_from_json(const json& j);

json gwa_to_json(const GroupWithAction& g);
GroupWithAction gwa_from_json(const json& j);

json xmod_to_json(const XModGwA& x);
XModGwA xmod_from_json(const json& j);

json enumeration_to_json(const XModEnumeration& e, std::optional<std::size_t> c1_count = std::nullopt);
/// Rebuilds the items; pre_count/full_count must agree with them.
XModEnumeration enumeration_from_json(const json& j);

json simplicial_to_json(const TruncatedSimplicialGwA& t);

json roundtrip_to_json(std::size_t xmod_id, const RoundTripReport& r);

// Classification ----------------------------------------------------------------

struct ClassificationRow {
  int family = 0;
  std::size_t members = 0;
  /// 0-based position of the representative in the input list.
  std::size_t representative_index = 0;
  std::size_t ideals = 0;
  int nilpotency_class = 0;
  bool condition1 = false;

  bool operator==(const ClassificationRow&) const = default;
};

/// One row per isomorphism class, families numbered from 1 in class order.
std::vector<ClassificationRow> classify(std::span<const GroupWithAction> list, int jobs = 1);

inline constexpr const char* kClassificationCsvHeader =
    "family,members,representative,ideals,nilpotency_class,condition1";

std::string classification_to_csv(std::span<const ClassificationRow> rows);
json classification_to_json(std::span<const ClassificationRow> rows, bool trivial_group = false);
std::vector<ClassificationRow> classification_from_json(const json& j);

// Catalog files -----------------------------------------------------------------

enum class CatalogKind { gwa_list, xmod_enumeration, classification, roundtrip_report };

std::string to_string(CatalogKind k);
CatalogKind catalog_kind_from_string(const std::string& s);

inline constexpr int kSchemaVersion = 1;

struct CatalogFile {
  int schema_version = kSchemaVersion;
  CatalogKind kind = CatalogKind::gwa_list;
  json payload;
  /// Command parameters and tool version; no timestamps, so reruns are
  /// byte-identical.
  json provenance;
};

json catalog_to_json(const CatalogFile& f);
CatalogFile catalog_from_json(const json& j);

/// Writes to a temporary sibling and renames it into place.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);
void write_catalog(const std::filesystem::path& path, const CatalogFile& f);
/// Throws CatalogError on unreadable files, parse errors or schema mismatch.
CatalogFile read_catalog(const std::filesystem::path& path);

json make_provenance(const std::string& command, json params);
const char* tool_version();

}  // namespace gwakit
