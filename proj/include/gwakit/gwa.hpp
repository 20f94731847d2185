#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gwakit/group.hpp"

namespace gwakit {

/// Square table indexed [actor][operand], stored row-major.
using ActionTable = std::vector<std::vector<Elem>>;

/// Order bound for exhaustive enumeration. Reads GWAKIT_MAX_ORDER, default 12.
int max_order();

/// A group acting on itself from the right by automorphisms:
/// `act(h, g)` is g^h, the action of the actor h on the operand g.
class GroupWithAction {
 public:
  /// Throws ValidationError naming the first failed axiom.
  GroupWithAction(GroupPtr group, const ActionTable& act);

  static GroupWithAction trivial(GroupPtr group);
  static GroupWithAction conjugation(GroupPtr group);

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int order() const { return group_->order(); }

  Elem act(Elem actor, Elem operand) const {
    return act_[static_cast<std::size_t>(actor * group_->order() + operand)];
  }
  const std::vector<Elem>& flat_table() const { return act_; }
  ActionTable table() const;

  bool operator==(const GroupWithAction& other) const {
    return *group_ == *other.group_ && act_ == other.act_;
  }

 private:
  struct Unchecked {};
  GroupWithAction(GroupPtr group, std::vector<Elem> flat, Unchecked);
  friend std::vector<GroupWithAction> all_gwa_on_group(const GroupPtr&, std::optional<int>);

  GroupPtr group_;
  std::vector<Elem> act_;
};

/// Checks the four axioms in the order: right action (g^(h1+h2) = (g^h1)^h2),
/// g^0 = g, each actor acts by an endomorphism, 0^h = 0.
CheckResult is_gwa(const Group& group, const ActionTable& act);

GroupWithAction gwa_trivial(GroupPtr group);
GroupWithAction gwa_conjugation(GroupPtr group);
GroupWithAction gwa_from_table(GroupPtr group, const ActionTable& act);

/// Every action on `group`, sorted lexicographically by flattened table.
/// Built from the homomorphisms group -> Aut(group). Throws CapacityError
/// when the order exceeds `bound` (default: max_order()).
std::vector<GroupWithAction> all_gwa_on_group(const GroupPtr& group, std::optional<int> bound = std::nullopt);

/// Restriction of a GwA to a subset closed under the group operation and the
/// action. Throws ValidationError if the subset is not closed.
struct SubGwA {
  GroupWithAction gwa;
  Subgroup sub;
};
SubGwA restrict_gwa(const GroupWithAction& gwa, std::span<const Elem> elements);

GroupWithAction gwa_direct_product(const GroupWithAction& a, const GroupWithAction& b);

// Morphisms ------------------------------------------------------------------

struct GwAMorphism {
  GroupWithAction src;
  GroupWithAction dst;
  std::vector<Elem> image;

  Elem operator()(Elem a) const { return image[static_cast<std::size_t>(a)]; }
  bool is_bijective() const;
};

CheckResult is_gwa_morphism(std::span<const Elem> image, const GroupWithAction& src, const GroupWithAction& dst);
/// Throws ValidationError if `image` is not a GwA morphism.
GwAMorphism gwa_morphism(const GroupWithAction& src, const GroupWithAction& dst, std::vector<Elem> image);
std::vector<GwAMorphism> all_gwa_morphisms(const GroupWithAction& src, const GroupWithAction& dst);
GwAMorphism identity_morphism(const GroupWithAction& g);

// Isomorphism ----------------------------------------------------------------

std::optional<GwAMorphism> find_gwa_isomorphism(const GroupWithAction& a, const GroupWithAction& b);
bool are_isomorphic_gwa(const GroupWithAction& a, const GroupWithAction& b);
/// Indices of every entry in `list` isomorphic to `x`.
std::vector<std::size_t> isomorphic_family(const GroupWithAction& x, std::span<const GroupWithAction> list);

/// Partition of a list into isomorphism classes. Classes are ordered by
/// their first member; each class lists member indices in increasing order,
/// the first being the representative.
std::vector<std::vector<std::size_t>> isomorphism_classes(std::span<const GroupWithAction> list, int jobs = 1);
std::vector<std::size_t> isomorphism_class_representatives(std::span<const GroupWithAction> list);

// Ideals ---------------------------------------------------------------------

struct Ideal {
  ElementSet elements;
};

bool is_ideal(std::span<const Elem> elements, const GroupWithAction& g);
/// Ideals sorted by (size, elements).
std::vector<Ideal> all_ideals(const GroupWithAction& g);
Ideal ideal_closure(std::span<const Elem> seed, const GroupWithAction& g);

/// x - x^(z^x) + x^(y + z^x) - x + x^z - x^(z + y^z) = 0 for all x, y, z.
bool satisfies_condition1(const GroupWithAction& g);

// Commutators and nilpotency -------------------------------------------------

/// Generators of the commutator ideal. `standard` uses -x-y+x+y, -x+x^y and
/// -y+y^x; `without_right_twist` drops -y+y^x.
enum class CommutatorRule { standard, without_right_twist };

/// Smallest ideal containing the generators for x in a, y in b.
/// Throws ValidationError when a or b is not an ideal.
Ideal commutator_ideal(const Ideal& a, const Ideal& b, const GroupWithAction& g,
                       CommutatorRule rule = CommutatorRule::standard);
bool is_perfect(const GroupWithAction& g, CommutatorRule rule = CommutatorRule::standard);
/// G = L1 > L2 > ... with L(k+1) = [L(k), G], listed until a term repeats.
std::vector<Ideal> lower_central_series(const GroupWithAction& g, CommutatorRule rule = CommutatorRule::standard);
/// Smallest c with L(c+1) = 0; 0 when the series stalls above the trivial
/// ideal. The trivial GwA reports 1.
int nilpotency_class(const GroupWithAction& g, CommutatorRule rule = CommutatorRule::standard);
bool is_nilpotent(const GroupWithAction& g);

}  // namespace gwakit
