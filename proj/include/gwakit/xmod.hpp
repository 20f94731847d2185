#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gwakit/gwa.hpp"

namespace gwakit {

/// Two actions of a range GwA R on a source GwA S, stored as |R| x |S|
/// tables: `dot[r][s]` is r.s and `star[r][s]` is r*s.
///
/// Both are right actions, i.e. (r + r1).s = r1.(r.s). This is the reading
/// under which conjugation -r + s + r and the action s^r of an ideal are
/// admissible, which every crossed module of an ideal needs.
struct DerivedActionPair {
  GroupWithAction source;
  GroupWithAction range;
  ActionTable dot;
  ActionTable star;

  Elem apply_dot(Elem r, Elem s) const { return dot[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)]; }
  Elem apply_star(Elem r, Elem s) const { return star[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)]; }
};

/// Conditions i) - viii) on (dot, star):
///   i)   (r + r1).s = r1.(r.s)       iv)  (r + r1)*s = r1*(r*s)
///   ii)  r.(s + s1) = r.s + r.s1     v)   r*(s + s1) = r*s + r*s1
///   iii) 0.s = s, r.0 = 0            vi)  0*s = s, r*0 = 0
///   vii) r*(r1.s) = (r1^r).(r*s)
///   viii) (r*s)^(r.s1) = r*(s^s1)
/// The diagnostic names the first failed condition and its witnesses.
CheckResult is_gwa_action(const GroupWithAction& source, const GroupWithAction& range, const ActionTable& dot,
                          const ActionTable& star);

/// Every admissible pair, sorted lexicographically by (dot, star). Each of
/// dot and star ranges over the homomorphisms R -> Aut(S); pairs are kept
/// when vii) and viii) hold.
std::vector<DerivedActionPair> all_xmod_gwa_actions(const GroupWithAction& source, const GroupWithAction& range,
                                                    std::optional<int> bound = std::nullopt);

enum class XModLevel { pre, full };

/// Boundary S -> R with a derived action pair.
///   CM1: d(r.s) = -r + d(s) + r       CM2: d(s).s1 = -s + s1 + s
///   CM3: d(r*s) = d(s)^r              CM4: d(s)*s1 = s1^s
/// `level` records which conditions were verified when the object was made.
struct XModGwA {
  GwAMorphism boundary;
  DerivedActionPair action;
  XModLevel level = XModLevel::pre;

  const GroupWithAction& source() const { return boundary.src; }
  const GroupWithAction& range() const { return boundary.dst; }
};

/// Packages a boundary with an action pair. Throws ValidationError when the
/// pair fails i) - viii) or the boundary is not a GwA morphism between the
/// pair's source and range. The level is set from is_xmod.
XModGwA pre_xmod_obj(const GwAMorphism& boundary, const ActionTable& dot, const ActionTable& star);

/// CM1 and CM3.
CheckResult is_pre_xmod(const XModGwA& x);
/// CM1 - CM4. On failure the message reads
///   Condition k is fail
///   For s = <s> and s1 = <s1> => <lhs> <> <rhs>
/// (with r in place of s for CM1 and CM3).
CheckResult is_xmod(const XModGwA& x);

/// Inclusion of an ideal with r.s = -r + s + r and r*s = s^r. Throws
/// ValidationError when `ideal` is not an ideal of `range`.
XModGwA xmod_by_ideal(const GroupWithAction& range, const Ideal& ideal);

/// Componentwise product. Each R_i acts on its own S_i and trivially on the
/// other factor.
XModGwA xmod_direct_product(const XModGwA& x1, const XModGwA& x2);

/// Source = range = trivial group.
XModGwA trivial_xmod();
/// Identity boundary with conjugation and the GwA action.
XModGwA identity_xmod(const GroupWithAction& g);

// Morphisms ------------------------------------------------------------------

/// (alpha, beta) with alpha on sources and beta on ranges:
///   i) beta(d1(s)) = d2(alpha(s))
///   ii) alpha(r .1 s) = beta(r) .2 alpha(s)
///   iii) alpha(r *1 s) = beta(r) *2 alpha(s)
CheckResult is_xmod_morphism(const GwAMorphism& alpha, const GwAMorphism& beta, const XModGwA& x1,
                             const XModGwA& x2);

struct XModMorphism {
  XModGwA src;
  XModGwA dst;
  GwAMorphism alpha;
  GwAMorphism beta;
};

/// Throws ValidationError if the pair is not a morphism.
XModMorphism xmod_morphism(const XModGwA& x1, const XModGwA& x2, GwAMorphism alpha, GwAMorphism beta);

/// Restriction of the boundary and both actions to ker alpha -> ker beta.
/// Throws ValidationError with a witness when something fails to restrict.
XModGwA kernel_xmod(const XModMorphism& m);

/// Searches bijective (alpha, beta) pairs over GwA isomorphisms.
std::optional<XModMorphism> find_xmod_isomorphism(const XModGwA& x1, const XModGwA& x2);

// Enumeration ----------------------------------------------------------------

/// Pre list holds every structure passing CM1 and CM3, full ones included;
/// full list holds those passing CM1 - CM4. Both in canonical order: by
/// boundary image array, then by action pair.
struct XModEnumeration {
  std::vector<XModGwA> pre;
  std::vector<XModGwA> full;
};

XModEnumeration all_xmods(const GroupWithAction& source, const GroupWithAction& range,
                          std::optional<int> bound = std::nullopt);

/// Union over every GwA on small_group(source_order, source_index) as source
/// and every GwA on small_group(range_order, range_index) as range, ordered
/// by (source GwA index, range GwA index).
XModEnumeration all_xmods_by_id(int source_order, int source_index, int range_order, int range_index,
                                int jobs = 1, std::optional<int> bound = std::nullopt);

/// Both source and range satisfy Condition 1.
bool is_xmod_c1(const XModGwA& x);

/// Independent re-check of CM1 - CM4 reading only the raw tables; shares no
/// code with is_xmod.
bool recheck_xmod_tables(const XModGwA& x);

}  // namespace gwakit
