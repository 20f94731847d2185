#include "gwakit/simplicial.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gwakit {

namespace {

using Twist = std::vector<Elem>;  // t[r * |S| + s1]

GroupPtr semidirect_group(const XModGwA& x) {
  const Group& R = x.range().group();
  const Group& S = x.source().group();
  const int nr = R.order(), ns = S.order();
  std::vector<std::vector<Elem>> table(static_cast<std::size_t>(nr * ns), std::vector<Elem>(static_cast<std::size_t>(nr * ns)));
  std::vector<std::string> names;
  for (Elem r = 0; r < nr; ++r)
    for (Elem s = 0; s < ns; ++s) {
      names.push_back("(" + R.name(r) + "," + S.name(s) + ")");
      for (Elem r1 = 0; r1 < nr; ++r1)
        for (Elem s1 = 0; s1 < ns; ++s1)
          table[static_cast<std::size_t>(r * ns + s)][static_cast<std::size_t>(r1 * ns + s1)] =
              pair_index(x, R.op(r, r1), S.op(x.action.apply_dot(r1, s), s1));
    }
  return make_group(Group::from_table(std::move(table), std::nullopt, std::move(names)));
}

// Crossed homomorphisms c: R -> S, c(r + g) = g.c(r) + c(g), with
// d(c(r)) = -r + r^d(h) on generators.
std::vector<std::vector<Elem>> twists_for(const XModGwA& x, Elem h) {
  const Group& R = x.range().group();
  const Group& S = x.source().group();
  const auto& gens = R.generators();
  const Elem dh = x.boundary(h);

  std::vector<std::vector<Elem>> fibres;
  for (Elem g : gens) {
    const Elem target = R.op(R.inv(g), x.range().act(dh, g));
    std::vector<Elem> f;
    for (Elem c = 0; c < S.order(); ++c)
      if (x.boundary(c) == target) f.push_back(c);
    if (f.empty()) return {};
    fibres.push_back(std::move(f));
  }

  std::vector<std::vector<Elem>> out;
  std::vector<Elem> choice(gens.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i < gens.size()) {
      for (Elem c : fibres[i]) {
        choice[i] = c;
        rec(i + 1);
      }
      return;
    }
    std::vector<Elem> c(static_cast<std::size_t>(R.order()), -1);
    c[0] = 0;
    for (const auto& e : R.spanning_tree()) {
      const Elem g = gens[static_cast<std::size_t>(e.gen)];
      c[static_cast<std::size_t>(e.element)] =
          S.op(x.action.apply_dot(g, c[static_cast<std::size_t>(e.parent)]), choice[static_cast<std::size_t>(e.gen)]);
    }
    for (Elem r = 0; r < R.order(); ++r)
      for (std::size_t k = 0; k < gens.size(); ++k)
        if (c[static_cast<std::size_t>(R.op(r, gens[k]))] !=
            S.op(x.action.apply_dot(gens[k], c[static_cast<std::size_t>(r)]), choice[k]))
          return;
    out.push_back(std::move(c));
  };
  rec(0);
  return out;
}

// Extends per-generator crossed homs to t(r, s1) with
// t(r, s1 + h) = t(r, h) + t(r, s1)^h. Empty on inconsistency.
Twist extend_twist(const XModGwA& x, const std::vector<const std::vector<Elem>*>& per_gen) {
  const Group& R = x.range().group();
  const Group& S = x.source().group();
  const GroupWithAction& sw = x.source();
  const int nr = R.order(), ns = S.order();
  const auto& gens = S.generators();
  Twist t(static_cast<std::size_t>(nr * ns), 0);
  auto at = [&](Elem r, Elem s) -> Elem& { return t[static_cast<std::size_t>(r * ns + s)]; };
  for (const auto& e : S.spanning_tree()) {
    const Elem h = gens[static_cast<std::size_t>(e.gen)];
    const auto& th = *per_gen[static_cast<std::size_t>(e.gen)];
    for (Elem r = 0; r < nr; ++r) at(r, e.element) = S.op(th[static_cast<std::size_t>(r)], sw.act(h, at(r, e.parent)));
  }
  for (Elem s = 0; s < ns; ++s)
    for (std::size_t k = 0; k < gens.size(); ++k)
      for (Elem r = 0; r < nr; ++r)
        if (at(r, S.op(s, gens[k])) != S.op((*per_gen[k])[static_cast<std::size_t>(r)], sw.act(gens[k], at(r, s))))
          return {};
  return t;
}

ActionTable semidirect_table(const XModGwA& x, const Twist& t) {
  const GroupWithAction& rw = x.range();
  const GroupWithAction& sw = x.source();
  const int nr = rw.order(), ns = sw.order();
  ActionTable act(static_cast<std::size_t>(nr * ns), std::vector<Elem>(static_cast<std::size_t>(nr * ns)));
  for (Elem r1 = 0; r1 < nr; ++r1)
    for (Elem s1 = 0; s1 < ns; ++s1)
      for (Elem r = 0; r < nr; ++r)
        for (Elem s = 0; s < ns; ++s) {
          const Elem a = rw.act(r1, r);
          const Elem b = x.action.apply_star(r1, s);
          const Elem c = sw.group().op(t[static_cast<std::size_t>(a * ns + s1)], sw.act(s1, b));
          act[static_cast<std::size_t>(r1 * ns + s1)][static_cast<std::size_t>(r * ns + s)] = pair_index(x, a, c);
        }
  return act;
}

CheckResult evaluations(const XModGwA& x, const Group& g, const ActionTable& act) {
  const Group& R = x.range().group();
  const int ns = x.source().order();
  auto at = [&](Elem actor, Elem operand) { return act[static_cast<std::size_t>(actor)][static_cast<std::size_t>(operand)]; };
  for (Elem s = 0; s < ns; ++s) {
    const Elem p = pair_index(x, R.inv(x.boundary(s)), s);
    for (Elem s1 = 0; s1 < ns; ++s1) {
      const Elem q = pair_index(x, 0, s1);
      if (at(p, q) != q)
        return CheckResult::fail("(0,s1)^(-ds,s) = (0,s1) fails for " + g.name(q) + "^" + g.name(p) + " = " +
                                 g.name(at(p, q)));
      if (at(q, p) != p)
        return CheckResult::fail("(-ds,s)^(0,s1) = (-ds,s) fails for " + g.name(p) + "^" + g.name(q) + " = " +
                                 g.name(at(q, p)));
    }
  }
  return CheckResult::pass();
}

std::vector<Elem> d1_image(const XModGwA& x) {
  const Group& R = x.range().group();
  const int nr = R.order(), ns = x.source().order();
  std::vector<Elem> img(static_cast<std::size_t>(nr * ns));
  for (Elem r = 0; r < nr; ++r)
    for (Elem s = 0; s < ns; ++s) img[static_cast<std::size_t>(r * ns + s)] = R.op(r, x.boundary(s));
  return img;
}

}  // namespace

GroupWithAction semidirect_gwa(const XModGwA& x, SemidirectMode mode) {
  if (auto r = is_xmod(x); !r) throw ValidationError("semidirect_gwa needs a crossed module: " + r.message);
  const GroupPtr g = semidirect_group(x);
  const int nr = x.range().order(), ns = x.source().order();
  const auto& sgens = x.source().group().generators();

  std::vector<std::vector<std::vector<Elem>>> options;
  for (Elem h : sgens) {
    auto opts = twists_for(x, h);
    if (opts.empty())
      throw ValidationError("no crossed homomorphism t: R -> S with d(t(r)) = -r + r^d(" + x.source().group().name(h) +
                            ") for all r");
    options.push_back(std::move(opts));
  }

  const auto d1 = d1_image(x);
  std::vector<Elem> d0(static_cast<std::size_t>(nr * ns));
  for (Elem p = 0; p < nr * ns; ++p) d0[static_cast<std::size_t>(p)] = p / ns;

  std::string last_failure = "no consistent twisting term";
  std::string eval_failure;
  std::optional<GroupWithAction> fallback;
  std::vector<std::size_t> idx(sgens.size(), 0);
  for (;;) {
    std::vector<const std::vector<Elem>*> per_gen;
    for (std::size_t k = 0; k < sgens.size(); ++k) per_gen.push_back(&options[k][idx[k]]);
    if (Twist t = extend_twist(x, per_gen); !t.empty()) {
      ActionTable act = semidirect_table(x, t);
      const auto e = evaluations(x, *g, act);
      if (!e && eval_failure.empty()) eval_failure = e.message;
      if (e || (mode == SemidirectMode::relaxed && !fallback)) {
        if (auto a = is_gwa(*g, act); !a) {
          last_failure = a.message;
        } else {
          GroupWithAction gw(g, act);
          if (auto m = is_gwa_morphism(d1, gw, x.range()); !m)
            last_failure = "d1 is not a GwA morphism: " + m.message;
          else if (auto m0 = is_gwa_morphism(d0, gw, x.range()); !m0)
            last_failure = "d0 is not a GwA morphism: " + m0.message;
          else if (e)
            return gw;
          else
            fallback = std::move(gw);
        }
      }
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == options[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  if (fallback) return *fallback;
  if (!eval_failure.empty() && mode == SemidirectMode::strict)
    last_failure += "; every GwA-compatible twist violates " + eval_failure;
  throw ValidationError("semidirect product admits no action: " + last_failure);
}

CheckResult check_semidirect_evaluations(const XModGwA& x, const GroupWithAction& g1) {
  if (g1.order() != x.range().order() * x.source().order())
    return CheckResult::fail("order mismatch");
  return evaluations(x, g1.group(), g1.table());
}

TruncatedSimplicialGwA simplicial_from_xmod(const XModGwA& x, SemidirectMode mode) {
  GroupWithAction g1 = semidirect_gwa(x, mode);
  const GroupWithAction& g0 = x.range();
  const int nr = g0.order(), ns = x.source().order();
  std::vector<Elem> d0(static_cast<std::size_t>(nr * ns)), s0(static_cast<std::size_t>(nr));
  for (Elem p = 0; p < nr * ns; ++p) d0[static_cast<std::size_t>(p)] = p / ns;
  for (Elem r = 0; r < nr; ++r) s0[static_cast<std::size_t>(r)] = pair_index(x, r, 0);
  auto wrap = [](const char* what, auto&& f) {
    try {
      return f();
    } catch (const ValidationError& e) {
      throw ValidationError(std::string(what) + ": " + e.what());
    }
  };
  TruncatedSimplicialGwA t{
      g0, g1,
      wrap("d0", [&] { return gwa_morphism(g1, g0, d0); }),
      wrap("d1", [&] { return gwa_morphism(g1, g0, d1_image(x)); }),
      wrap("s0", [&] { return gwa_morphism(g0, g1, s0); }),
  };
  if (auto r = verify_simplicial(t); !r) throw ValidationError(r.message);
  return t;
}

CheckResult verify_simplicial(const TruncatedSimplicialGwA& t) {
  if (auto r = is_gwa_morphism(t.d0.image, t.g1, t.g0); !r) return CheckResult::fail("d0: " + r.message);
  if (auto r = is_gwa_morphism(t.d1.image, t.g1, t.g0); !r) return CheckResult::fail("d1: " + r.message);
  if (auto r = is_gwa_morphism(t.s0.image, t.g0, t.g1); !r) return CheckResult::fail("s0: " + r.message);
  for (Elem r = 0; r < t.g0.order(); ++r) {
    if (t.d0(t.s0(r)) != r) return CheckResult::fail("d0 s0 = id fails at " + t.g0.group().name(r));
    if (t.d1(t.s0(r)) != r) return CheckResult::fail("d1 s0 = id fails at " + t.g0.group().name(r));
  }
  return CheckResult::pass();
}

MooreComplex moore_complex(const TruncatedSimplicialGwA& t) {
  ElementSet ker;
  for (Elem p = 0; p < t.g1.order(); ++p)
    if (t.d0(p) == 0) ker.push_back(p);
  SubGwA ng1 = restrict_gwa(t.g1, ker);
  std::vector<Elem> img;
  for (Elem p : ng1.sub.embedding) img.push_back(t.d1(p));
  GwAMorphism partial1 = gwa_morphism(ng1.gwa, t.g0, std::move(img));
  const int length = ng1.gwa.order() == 1 ? 0 : 1;
  return {t.g0, std::move(ng1), std::move(partial1), length};
}

CheckResult kernel_bracket_trivial(const TruncatedSimplicialGwA& t) {
  const Group& g = t.g1.group();
  ElementSet k0, k1;
  for (Elem p = 0; p < g.order(); ++p) {
    if (t.d0(p) == 0) k0.push_back(p);
    if (t.d1(p) == 0) k1.push_back(p);
  }
  for (Elem a : k0)
    for (Elem b : k1)
      if (g.commutator(a, b) != 0)
        return CheckResult::fail("[" + g.name(a) + ", " + g.name(b) + "] = " + g.name(g.commutator(a, b)));
  return CheckResult::pass();
}

XModGwA xmod_from_simplicial(const TruncatedSimplicialGwA& t) {
  MooreComplex m = moore_complex(t);
  const Group& g = t.g1.group();
  const auto& emb = m.ng1.sub.embedding;
  const auto& loc = m.ng1.sub.locate;
  const int nr = t.g0.order();
  const int nk = static_cast<int>(emb.size());
  ActionTable dot(static_cast<std::size_t>(nr), std::vector<Elem>(static_cast<std::size_t>(nk)));
  ActionTable star = dot;
  for (Elem r = 0; r < nr; ++r) {
    const Elem lift = t.s0(r);
    for (Elem k = 0; k < nk; ++k) {
      const Elem c = g.conj(emb[static_cast<std::size_t>(k)], lift);
      const Elem a = t.g1.act(lift, emb[static_cast<std::size_t>(k)]);
      const Elem lc = loc[static_cast<std::size_t>(c)], la = loc[static_cast<std::size_t>(a)];
      if (lc < 0 || la < 0)
        throw ValidationError("action of " + t.g0.group().name(r) + " leaves ker d0 at " + g.name(emb[static_cast<std::size_t>(k)]));
      dot[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] = lc;
      star[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] = la;
    }
  }
  XModGwA x = pre_xmod_obj(m.partial1, dot, star);
  if (auto r = is_xmod(x); !r) throw ValidationError(r.message);
  return x;
}

RoundTripReport roundtrip(const XModGwA& x, SemidirectMode mode) {
  RoundTripReport rep;
  try {
    TruncatedSimplicialGwA t = simplicial_from_xmod(x, mode);
    rep.evaluations_ok = check_semidirect_evaluations(x, t.g1).ok;
    rep.simplicial_ok = static_cast<bool>(verify_simplicial(t));
    auto b = kernel_bracket_trivial(t);
    rep.bracket_zero = b.ok;
    if (!b) rep.error = b.message;
    rep.moore_length = moore_complex(t).length;
    XModGwA back = xmod_from_simplicial(t);
    rep.roundtrip_ok = find_xmod_isomorphism(x, back).has_value();
    if (!rep.roundtrip_ok && rep.error.empty()) rep.error = "round trip is not isomorphic to the input";
  } catch (const std::exception& e) {
    rep.error = e.what();
  }
  return rep;
}

}  // namespace gwakit
