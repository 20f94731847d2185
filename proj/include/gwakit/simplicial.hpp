#pragma once

#include <string>

#include "gwakit/xmod.hpp"

namespace gwakit {

/// Levels G0, G1 of a simplicial group with action, with faces d0, d1 and
/// degeneracy s0. All three maps are GwA morphisms.
struct TruncatedSimplicialGwA {
  GroupWithAction g0;
  GroupWithAction g1;
  GwAMorphism d0;
  GwAMorphism d1;
  GwAMorphism s0;
};

struct MooreComplex {
  GroupWithAction ng0;
  /// ker d0 re-indexed; `sub.embedding` maps back into g1.
  SubGwA ng1;
  GwAMorphism partial1;
  int length = 0;
};

/// `strict` only accepts twists that also satisfy the two evaluations of
/// check_semidirect_evaluations; `relaxed` falls back to any twist giving a
/// GwA with d0 and d1 morphisms.
enum class SemidirectMode { strict, relaxed };

/// Index of the pair (r, s) in the semidirect product R x| S.
inline Elem pair_index(const XModGwA& x, Elem r, Elem s) { return r * x.source().order() + s; }

/// R x| S with (r,s) + (r1,s1) = (r + r1, r1.s + s1). The pair (r1, s1)
/// acts by first (r,s) -> (r^r1, r1*s), then (r,s) -> (r, t(r,s1) + s^s1),
/// where t is a twisting term fixed by a search: t(-, s1) is a crossed
/// homomorphism R -> S lifting r -> -r + r^d(s1). Once d0 and s0 are
/// required to be morphisms and ker d0 to carry the action of S, every
/// admissible action has this shape, so the search is exhaustive. Throws
/// ValidationError when no twisting term gives a GwA on which d1 is a
/// morphism.
GroupWithAction semidirect_gwa(const XModGwA& x, SemidirectMode mode = SemidirectMode::strict);

/// (0,s1)^(-ds, s) = (0,s1) and (-ds, s)^(0,s1) = (-ds, s) for all s, s1.
CheckResult check_semidirect_evaluations(const XModGwA& x, const GroupWithAction& g1);

/// Pre: x is a full crossed module. d0(r,s) = r, d1(r,s) = r + ds,
/// s0(r) = (r,0). Throws ValidationError on any failed verification.
TruncatedSimplicialGwA simplicial_from_xmod(const XModGwA& x, SemidirectMode mode = SemidirectMode::strict);

/// Morphism checks plus d0 s0 = id and d1 s0 = id.
CheckResult verify_simplicial(const TruncatedSimplicialGwA& t);

/// Throws ValidationError when the action does not restrict to ker d0.
MooreComplex moore_complex(const TruncatedSimplicialGwA& t);

/// Every commutator of ker d0 with ker d1 is zero.
CheckResult kernel_bracket_trivial(const TruncatedSimplicialGwA& t);

/// Source ng1, range g0, boundary partial1, r.s = -s0(r) + s + s0(r) and
/// r*s = s^s0(r). Throws ValidationError if a value leaves ng1 or the result
/// is not a full crossed module.
XModGwA xmod_from_simplicial(const TruncatedSimplicialGwA& t);

struct RoundTripReport {
  bool simplicial_ok = false;
  bool evaluations_ok = false;
  bool bracket_zero = false;
  int moore_length = -1;
  bool roundtrip_ok = false;
  std::string error;

  bool ok() const { return simplicial_ok && bracket_zero && moore_length <= 1 && roundtrip_ok; }
};

/// Runs the whole chain on x and never throws; failures land in `error`.
RoundTripReport roundtrip(const XModGwA& x, SemidirectMode mode = SemidirectMode::strict);

}  // namespace gwakit
