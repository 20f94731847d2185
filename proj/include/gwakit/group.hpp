#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gwakit/error.hpp"

namespace gwakit {

/// Element of a finite group, identified by its row in the Cayley table.
using Elem = int;

/// Sorted list of element indices.
using ElementSet = std::vector<Elem>;

struct CatalogId {
  int order = 0;
  int index = 0;
  bool operator==(const CatalogId&) const = default;
};

/// Finite group stored as a Cayley table. Index 0 is always the identity and
/// the operation is written additively (it need not be commutative).
///
/// Instances are immutable once constructed; enumeration code shares them
/// through `GroupPtr`.
class Group {
 public:
  /// Validates identity, inverses, Latin-square rows/columns and
  /// associativity. Throws ValidationError on the first violation.
  static Group from_table(std::vector<std::vector<Elem>> table,
                          std::optional<CatalogId> catalog_id = std::nullopt,
                          std::vector<std::string> names = {});

  /// Group of the given permutations of {0..m-1} under "apply left, then
  /// right" composition. The list must be closed and contain the identity;
  /// elements are indexed in lexicographic order of their images, so the
  /// identity lands on index 0.
  static Group from_permutations(std::vector<std::vector<int>> perms);

  int order() const { return order_; }
  Elem op(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a * order_ + b)]; }
  Elem inv(Elem a) const { return inverse_[static_cast<std::size_t>(a)]; }
  /// -a + b + a
  Elem conj(Elem b, Elem a) const { return op(op(inv(a), b), a); }
  /// -a - b + a + b
  Elem commutator(Elem a, Elem b) const { return op(op(inv(a), inv(b)), op(a, b)); }

  int element_order(Elem a) const { return element_orders_[static_cast<std::size_t>(a)]; }
  bool is_abelian() const;

  std::vector<std::vector<Elem>> table_rows() const;
  const std::optional<CatalogId>& catalog_id() const { return catalog_id_; }
  const std::vector<std::string>& names() const { return names_; }
  /// Display name; falls back to the index.
  std::string name(Elem a) const;

  /// Deterministic generating set (greedy over elements of decreasing order).
  const std::vector<Elem>& generators() const { return generators_; }

  /// BFS spanning tree over right multiplication by generators: for every
  /// non-identity element `e`, `e = parent + generators[gen]`. Entries are in
  /// BFS order, so parents always precede children.
  struct TreeEdge {
    Elem element;
    Elem parent;
    int gen;
  };
  const std::vector<TreeEdge>& spanning_tree() const { return tree_; }

  /// Smallest subgroup containing `seed`.
  ElementSet closure(std::span<const Elem> seed) const;
  bool is_subgroup(std::span<const Elem> elements) const;
  bool is_normal(std::span<const Elem> elements) const;

  bool operator==(const Group& other) const { return order_ == other.order_ && table_ == other.table_; }

 private:
  Group() = default;
  void finish();

  int order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<int> element_orders_;
  std::vector<Elem> generators_;
  std::vector<TreeEdge> tree_;
  std::optional<CatalogId> catalog_id_;
  std::vector<std::string> names_;
};

using GroupPtr = std::shared_ptr<const Group>;

GroupPtr make_group(Group g);

/// Homomorphism between two finite groups, stored as an image array.
struct GroupHom {
  GroupPtr src;
  GroupPtr dst;
  std::vector<Elem> image;

  Elem operator()(Elem a) const { return image[static_cast<std::size_t>(a)]; }
  bool is_bijective() const;
  ElementSet kernel() const;
};

CheckResult check_homomorphism(const Group& src, const Group& dst, std::span<const Elem> image);

/// A subgroup re-indexed as a group of its own. `embedding[i]` is the parent
/// index of the subgroup's element `i`; element order follows the sorted
/// parent indices, so the identity stays at 0.
struct Subgroup {
  GroupPtr group;
  std::vector<Elem> embedding;
  /// Parent index -> subgroup index, -1 outside.
  std::vector<Elem> locate;
};

Subgroup induced_subgroup(const Group& parent, std::span<const Elem> elements);

// Constructors ---------------------------------------------------------------

GroupPtr make_cyclic(int n);
GroupPtr make_dihedral(int n);  // order n, n even
GroupPtr make_quaternion8();
GroupPtr make_alternating_4();
GroupPtr direct_product(const Group& g, const Group& h);

/// Catalog of groups of order <= 8 numbered as in the standard small-groups
/// library (order 4: 1 = C4, 2 = C2^2; order 8: 1 = C8, 2 = C4xC2, 3 = D8,
/// 4 = Q8, 5 = C2^3). Results are cached and shared.
GroupPtr small_group(int order, int index);
/// Number of catalog entries of the given order (0 when not covered).
int small_group_count(int order);

// Enumeration ----------------------------------------------------------------

/// Calls `visit` for each homomorphism src -> dst; candidates are found by
/// assigning images to the generators of `src`. With `bijective` only
/// isomorphisms are produced. Order of visits is not canonical. `visit`
/// returns false to stop early.
void for_each_homomorphism(const Group& src, const Group& dst, bool bijective,
                           const std::function<bool(std::span<const Elem>)>& visit);

/// All homomorphisms, sorted lexicographically by image array.
std::vector<GroupHom> all_homomorphisms(const GroupPtr& src, const GroupPtr& dst);
/// Sorted lexicographically by image array; the identity is first.
std::vector<GroupHom> automorphisms(const GroupPtr& g);
std::vector<GroupHom> isomorphisms(const GroupPtr& src, const GroupPtr& dst);
std::optional<GroupHom> find_isomorphism(const GroupPtr& src, const GroupPtr& dst);

/// Automorphism group as permutations under "apply left, then right"
/// composition. Element i of `group` is `perms[i]`.
struct AutomorphismGroup {
  GroupPtr group;
  std::vector<std::vector<Elem>> perms;
};
AutomorphismGroup automorphism_group(const GroupPtr& g);

struct SubgroupEntry {
  ElementSet elements;
  bool normal = false;
};
/// Every subgroup, sorted by (size, elements).
std::vector<SubgroupEntry> all_subgroups(const Group& g);

}  // namespace gwakit
