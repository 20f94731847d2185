#include "gwakit/xmod.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <string>

#include "gwakit/parallel.hpp"

namespace gwakit {

namespace {

std::size_t idx(Elem e) { return static_cast<std::size_t>(e); }

bool shape_ok(const ActionTable& t, int rows, int cols) {
  if (static_cast<int>(t.size()) != rows) return false;
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != cols) return false;
    for (Elem x : row)
      if (x < 0 || x >= cols) return false;
  }
  return true;
}

// Checks one action table for the three "is an action" conditions. `base`
// is the number of the first condition (1 for dot, 4 for star).
CheckResult check_single_action(const Group& r, const Group& s, const ActionTable& t, int base, const char* symbol) {
  auto at = [&](Elem a, Elem b) { return t[idx(a)][idx(b)]; };
  const std::string sym(symbol);
  for (Elem r0 = 0; r0 < r.order(); ++r0)
    for (Elem r1 = 0; r1 < r.order(); ++r1)
      for (Elem x = 0; x < s.order(); ++x)
        if (at(r.op(r0, r1), x) != at(r1, at(r0, x)))
          return CheckResult::fail("Condition " + std::to_string(base) + " is fail\nFor r = " + r.name(r0) +
                                   ", r1 = " + r.name(r1) + " and s = " + s.name(x) + " => (r+r1)" + sym + "s <> r1" +
                                   sym + "(r" + sym + "s)");
  for (Elem r0 = 0; r0 < r.order(); ++r0)
    for (Elem x = 0; x < s.order(); ++x)
      for (Elem y = 0; y < s.order(); ++y)
        if (at(r0, s.op(x, y)) != s.op(at(r0, x), at(r0, y)))
          return CheckResult::fail("Condition " + std::to_string(base + 1) + " is fail\nFor r = " + r.name(r0) +
                                   ", s = " + s.name(x) + " and s1 = " + s.name(y));
  for (Elem x = 0; x < s.order(); ++x)
    if (at(0, x) != x)
      return CheckResult::fail("Condition " + std::to_string(base + 2) + " is fail\nFor s = " + s.name(x));
  for (Elem r0 = 0; r0 < r.order(); ++r0)
    if (at(r0, 0) != 0)
      return CheckResult::fail("Condition " + std::to_string(base + 2) + " is fail\nFor r = " + r.name(r0));
  return CheckResult::pass();
}

bool vii_viii_hold(const GroupWithAction& source, const GroupWithAction& range, const ActionTable& dot,
                   const ActionTable& star, std::string* why) {
  const Group& s = source.group();
  const Group& r = range.group();
  for (Elem r0 = 0; r0 < r.order(); ++r0)
    for (Elem r1 = 0; r1 < r.order(); ++r1)
      for (Elem x = 0; x < s.order(); ++x) {
        const Elem lhs = star[idx(r0)][idx(dot[idx(r1)][idx(x)])];
        const Elem rhs = dot[idx(range.act(r0, r1))][idx(star[idx(r0)][idx(x)])];
        if (lhs != rhs) {
          if (why)
            *why = "Condition 7 is fail\nFor r = " + r.name(r0) + ", r1 = " + r.name(r1) + " and s = " + s.name(x) +
                   " => " + s.name(lhs) + " <> " + s.name(rhs);
          return false;
        }
      }
  for (Elem r0 = 0; r0 < r.order(); ++r0)
    for (Elem x = 0; x < s.order(); ++x)
      for (Elem y = 0; y < s.order(); ++y) {
        const Elem lhs = source.act(dot[idx(r0)][idx(y)], star[idx(r0)][idx(x)]);
        const Elem rhs = star[idx(r0)][idx(source.act(y, x))];
        if (lhs != rhs) {
          if (why)
            *why = "Condition 8 is fail\nFor r = " + r.name(r0) + ", s = " + s.name(x) + " and s1 = " + s.name(y) +
                   " => " + s.name(lhs) + " <> " + s.name(rhs);
          return false;
        }
      }
  return true;
}

// Returns the first failing CM condition among those requested, 0 if none.
// Witnesses are written to `w` as (first, second, lhs, rhs).
int first_failed_cm(const XModGwA& x, bool full, std::array<Elem, 4>* w) {
  const Group& s = x.source().group();
  const Group& r = x.range().group();
  const auto& d = x.boundary.image;
  const auto& dot = x.action.dot;
  const auto& star = x.action.star;
  auto report = [&](int k, Elem a, Elem b, Elem lhs, Elem rhs) {
    if (w) *w = {a, b, lhs, rhs};
    return k;
  };
  for (Elem r0 = 0; r0 < r.order(); ++r0)
    for (Elem y = 0; y < s.order(); ++y) {
      const Elem lhs = d[idx(dot[idx(r0)][idx(y)])];
      const Elem rhs = r.conj(d[idx(y)], r0);
      if (lhs != rhs) return report(1, r0, y, lhs, rhs);
    }
  if (full)
    for (Elem y = 0; y < s.order(); ++y)
      for (Elem y1 = 0; y1 < s.order(); ++y1) {
        const Elem lhs = dot[idx(d[idx(y)])][idx(y1)];
        const Elem rhs = s.conj(y1, y);
        if (lhs != rhs) return report(2, y, y1, lhs, rhs);
      }
  for (Elem r0 = 0; r0 < r.order(); ++r0)
    for (Elem y = 0; y < s.order(); ++y) {
      const Elem lhs = d[idx(star[idx(r0)][idx(y)])];
      const Elem rhs = x.range().act(r0, d[idx(y)]);
      if (lhs != rhs) return report(3, r0, y, lhs, rhs);
    }
  if (full)
    for (Elem y = 0; y < s.order(); ++y)
      for (Elem y1 = 0; y1 < s.order(); ++y1) {
        const Elem lhs = star[idx(d[idx(y)])][idx(y1)];
        const Elem rhs = x.source().act(y, y1);
        if (lhs != rhs) return report(4, y, y1, lhs, rhs);
      }
  return 0;
}

CheckResult describe_cm(const XModGwA& x, bool full) {
  std::array<Elem, 4> w{};
  const int k = first_failed_cm(x, full, &w);
  if (k == 0) return CheckResult::pass();
  const Group& s = x.source().group();
  const Group& r = x.range().group();
  std::string msg = "Condition " + std::to_string(k) + " is fail\n";
  if (k == 1 || k == 3)
    msg += "For r = " + r.name(w[0]) + " and s = " + s.name(w[1]) + " => " + r.name(w[2]) + " <> " + r.name(w[3]);
  else
    msg += "For s = " + s.name(w[0]) + " and s1 = " + s.name(w[1]) + " => " + s.name(w[2]) + " <> " + s.name(w[3]);
  return CheckResult::fail(msg);
}

ActionTable tables_from_perms(const std::vector<std::vector<Elem>>& perms, std::span<const Elem> image) {
  ActionTable t;
  t.reserve(image.size());
  for (Elem a : image) t.push_back(perms[idx(a)]);
  return t;
}

std::vector<GwAMorphism> gwa_isomorphisms(const GroupWithAction& a, const GroupWithAction& b) {
  std::vector<GwAMorphism> out;
  const int n = a.order();
  for_each_homomorphism(a.group(), b.group(), true, [&](std::span<const Elem> image) {
    for (Elem h = 0; h < n; ++h)
      for (Elem g = 0; g < n; ++g)
        if (image[idx(a.act(h, g))] != b.act(image[idx(h)], image[idx(g)])) return true;
    out.push_back({a, b, std::vector<Elem>(image.begin(), image.end())});
    return true;
  });
  return out;
}

void check_bound(int order, std::optional<int> bound) {
  const int limit = bound.value_or(max_order());
  if (order > limit)
    throw CapacityError("group order " + std::to_string(order) + " exceeds bound " + std::to_string(limit));
}

}  // namespace

CheckResult is_gwa_action(const GroupWithAction& source, const GroupWithAction& range, const ActionTable& dot,
                          const ActionTable& star) {
  const Group& s = source.group();
  const Group& r = range.group();
  if (!shape_ok(dot, r.order(), s.order()) || !shape_ok(star, r.order(), s.order()))
    return CheckResult::fail("action tables must be |R| x |S| with entries in S");
  if (auto c = check_single_action(r, s, dot, 1, "."); !c) return c;
  if (auto c = check_single_action(r, s, star, 4, "*"); !c) return c;
  std::string why;
  if (!vii_viii_hold(source, range, dot, star, &why)) return CheckResult::fail(why);
  return CheckResult::pass();
}

std::vector<DerivedActionPair> all_xmod_gwa_actions(const GroupWithAction& source, const GroupWithAction& range,
                                                    std::optional<int> bound) {
  check_bound(source.order(), bound);
  check_bound(range.order(), bound);
  const AutomorphismGroup aut = automorphism_group(source.group_ptr());
  std::vector<ActionTable> candidates;
  for (const auto& hom : all_homomorphisms(range.group_ptr(), aut.group))
    candidates.push_back(tables_from_perms(aut.perms, hom.image));

  std::vector<DerivedActionPair> out;
  for (const auto& dot : candidates)
    for (const auto& star : candidates)
      if (vii_viii_hold(source, range, dot, star, nullptr)) out.push_back({source, range, dot, star});
  return out;
}

XModGwA pre_xmod_obj(const GwAMorphism& boundary, const ActionTable& dot, const ActionTable& star) {
  if (auto r = is_gwa_morphism(boundary.image, boundary.src, boundary.dst); !r)
    throw ValidationError("boundary is not a GwA morphism: " + r.message);
  if (auto r = is_gwa_action(boundary.src, boundary.dst, dot, star); !r)
    throw ValidationError("invalid action pair: " + r.message);
  XModGwA x{boundary, {boundary.src, boundary.dst, dot, star}, XModLevel::pre};
  if (first_failed_cm(x, true, nullptr) == 0) x.level = XModLevel::full;
  return x;
}

CheckResult is_pre_xmod(const XModGwA& x) { return describe_cm(x, false); }
CheckResult is_xmod(const XModGwA& x) { return describe_cm(x, true); }

XModGwA xmod_by_ideal(const GroupWithAction& range, const Ideal& ideal) {
  if (!is_ideal(ideal.elements, range)) throw ValidationError("element set is not an ideal");
  SubGwA sub = restrict_gwa(range, ideal.elements);
  const Group& r = range.group();
  const auto& emb = sub.sub.embedding;
  const auto& loc = sub.sub.locate;
  const int m = sub.gwa.order();
  ActionTable dot(idx(r.order()), std::vector<Elem>(idx(m)));
  ActionTable star(idx(r.order()), std::vector<Elem>(idx(m)));
  for (Elem r0 = 0; r0 < r.order(); ++r0)
    for (Elem y = 0; y < m; ++y) {
      dot[idx(r0)][idx(y)] = loc[idx(r.conj(emb[idx(y)], r0))];
      star[idx(r0)][idx(y)] = loc[idx(range.act(r0, emb[idx(y)]))];
    }
  XModGwA x{{sub.gwa, range, emb}, {sub.gwa, range, std::move(dot), std::move(star)}, XModLevel::full};
  if (auto c = is_xmod(x); !c) throw ValidationError("ideal inclusion is not a crossed module: " + c.message);
  return x;
}

XModGwA xmod_direct_product(const XModGwA& x1, const XModGwA& x2) {
  GroupWithAction s = gwa_direct_product(x1.source(), x2.source());
  GroupWithAction r = gwa_direct_product(x1.range(), x2.range());
  const int ns2 = x2.source().order();
  const int nr2 = x2.range().order();
  std::vector<Elem> d(idx(s.order()));
  for (Elem y = 0; y < s.order(); ++y) d[idx(y)] = x1.boundary(y / ns2) * nr2 + x2.boundary(y % ns2);
  ActionTable dot(idx(r.order()), std::vector<Elem>(idx(s.order())));
  ActionTable star = dot;
  for (Elem r0 = 0; r0 < r.order(); ++r0)
    for (Elem y = 0; y < s.order(); ++y) {
      dot[idx(r0)][idx(y)] = x1.action.apply_dot(r0 / nr2, y / ns2) * ns2 + x2.action.apply_dot(r0 % nr2, y % ns2);
      star[idx(r0)][idx(y)] =
          x1.action.apply_star(r0 / nr2, y / ns2) * ns2 + x2.action.apply_star(r0 % nr2, y % ns2);
    }
  return pre_xmod_obj(gwa_morphism(s, r, std::move(d)), dot, star);
}

XModGwA trivial_xmod() {
  GroupWithAction t = gwa_trivial(small_group(1, 1));
  return identity_xmod(t);
}

XModGwA identity_xmod(const GroupWithAction& g) {
  Ideal whole;
  for (Elem x = 0; x < g.order(); ++x) whole.elements.push_back(x);
  return xmod_by_ideal(g, whole);
}

// Morphisms ------------------------------------------------------------------

CheckResult is_xmod_morphism(const GwAMorphism& alpha, const GwAMorphism& beta, const XModGwA& x1,
                             const XModGwA& x2) {
  if (!(alpha.src == x1.source()) || !(alpha.dst == x2.source()))
    return CheckResult::fail("alpha must map source to source");
  if (!(beta.src == x1.range()) || !(beta.dst == x2.range())) return CheckResult::fail("beta must map range to range");
  if (auto r = is_gwa_morphism(alpha.image, alpha.src, alpha.dst); !r) return CheckResult::fail("alpha: " + r.message);
  if (auto r = is_gwa_morphism(beta.image, beta.src, beta.dst); !r) return CheckResult::fail("beta: " + r.message);
  const Group& s1 = x1.source().group();
  const Group& r1 = x1.range().group();
  for (Elem y = 0; y < s1.order(); ++y)
    if (beta(x1.boundary(y)) != x2.boundary(alpha(y)))
      return CheckResult::fail("condition i fails for s = " + s1.name(y));
  for (Elem r0 = 0; r0 < r1.order(); ++r0)
    for (Elem y = 0; y < s1.order(); ++y) {
      if (alpha(x1.action.apply_dot(r0, y)) != x2.action.apply_dot(beta(r0), alpha(y)))
        return CheckResult::fail("condition ii fails for r = " + r1.name(r0) + " and s = " + s1.name(y));
      if (alpha(x1.action.apply_star(r0, y)) != x2.action.apply_star(beta(r0), alpha(y)))
        return CheckResult::fail("condition iii fails for r = " + r1.name(r0) + " and s = " + s1.name(y));
    }
  return CheckResult::pass();
}

XModMorphism xmod_morphism(const XModGwA& x1, const XModGwA& x2, GwAMorphism alpha, GwAMorphism beta) {
  if (auto r = is_xmod_morphism(alpha, beta, x1, x2); !r) throw ValidationError(r.message);
  return {x1, x2, std::move(alpha), std::move(beta)};
}

XModGwA kernel_xmod(const XModMorphism& m) {
  const ElementSet ker_alpha = GroupHom{m.alpha.src.group_ptr(), m.alpha.dst.group_ptr(), m.alpha.image}.kernel();
  const ElementSet ker_beta = GroupHom{m.beta.src.group_ptr(), m.beta.dst.group_ptr(), m.beta.image}.kernel();
  SubGwA ks = restrict_gwa(m.src.source(), ker_alpha);
  SubGwA kr = restrict_gwa(m.src.range(), ker_beta);
  const Group& s = m.src.source().group();
  const Group& r = m.src.range().group();

  std::vector<Elem> d(idx(ks.gwa.order()));
  for (Elem y = 0; y < ks.gwa.order(); ++y) {
    const Elem img = m.src.boundary(ks.sub.embedding[idx(y)]);
    const Elem at = kr.sub.locate[idx(img)];
    if (at < 0) throw ValidationError("boundary does not map ker alpha into ker beta at s = " + s.name(ks.sub.embedding[idx(y)]));
    d[idx(y)] = at;
  }
  ActionTable dot(idx(kr.gwa.order()), std::vector<Elem>(idx(ks.gwa.order())));
  ActionTable star = dot;
  for (Elem r0 = 0; r0 < kr.gwa.order(); ++r0)
    for (Elem y = 0; y < ks.gwa.order(); ++y) {
      const Elem rr = kr.sub.embedding[idx(r0)];
      const Elem ss = ks.sub.embedding[idx(y)];
      const Elem a = ks.sub.locate[idx(m.src.action.apply_dot(rr, ss))];
      const Elem b = ks.sub.locate[idx(m.src.action.apply_star(rr, ss))];
      if (a < 0 || b < 0)
        throw ValidationError("actions do not restrict to the kernel at r = " + r.name(rr) + ", s = " + s.name(ss));
      dot[idx(r0)][idx(y)] = a;
      star[idx(r0)][idx(y)] = b;
    }
  return pre_xmod_obj(gwa_morphism(ks.gwa, kr.gwa, std::move(d)), dot, star);
}

std::optional<XModMorphism> find_xmod_isomorphism(const XModGwA& x1, const XModGwA& x2) {
  if (x1.source().order() != x2.source().order() || x1.range().order() != x2.range().order()) return std::nullopt;
  const auto betas = gwa_isomorphisms(x1.range(), x2.range());
  if (betas.empty()) return std::nullopt;
  const auto alphas = gwa_isomorphisms(x1.source(), x2.source());
  const Group& s1 = x1.source().group();
  const Group& r1 = x1.range().group();
  for (const auto& beta : betas)
    for (const auto& alpha : alphas) {
      bool ok = true;
      for (Elem y = 0; y < s1.order() && ok; ++y) ok = beta(x1.boundary(y)) == x2.boundary(alpha(y));
      for (Elem r0 = 0; r0 < r1.order() && ok; ++r0)
        for (Elem y = 0; y < s1.order() && ok; ++y)
          ok = alpha(x1.action.apply_dot(r0, y)) == x2.action.apply_dot(beta(r0), alpha(y)) &&
               alpha(x1.action.apply_star(r0, y)) == x2.action.apply_star(beta(r0), alpha(y));
      if (ok) return XModMorphism{x1, x2, alpha, beta};
    }
  return std::nullopt;
}

// Enumeration ----------------------------------------------------------------

XModEnumeration all_xmods(const GroupWithAction& source, const GroupWithAction& range, std::optional<int> bound) {
  XModEnumeration out;
  const auto actions = all_xmod_gwa_actions(source, range, bound);
  for (const auto& bdy : all_gwa_morphisms(source, range))
    for (const auto& act : actions) {
      XModGwA x{bdy, act, XModLevel::pre};
      if (first_failed_cm(x, false, nullptr) != 0) continue;
      if (first_failed_cm(x, true, nullptr) == 0) {
        x.level = XModLevel::full;
        out.full.push_back(x);
      }
      out.pre.push_back(std::move(x));
    }
  return out;
}

XModEnumeration all_xmods_by_id(int source_order, int source_index, int range_order, int range_index, int jobs,
                                std::optional<int> bound) {
  const auto sources = all_gwa_on_group(small_group(source_order, source_index), bound);
  const auto ranges = all_gwa_on_group(small_group(range_order, range_index), bound);
  std::vector<XModEnumeration> parts(sources.size() * ranges.size());
  parallel_for(parts.size(), jobs, [&](std::size_t k) {
    parts[k] = all_xmods(sources[k / ranges.size()], ranges[k % ranges.size()], bound);
  });
  XModEnumeration out;
  for (auto& p : parts) {
    std::move(p.pre.begin(), p.pre.end(), std::back_inserter(out.pre));
    std::move(p.full.begin(), p.full.end(), std::back_inserter(out.full));
  }
  return out;
}

bool is_xmod_c1(const XModGwA& x) { return satisfies_condition1(x.source()) && satisfies_condition1(x.range()); }

bool recheck_xmod_tables(const XModGwA& x) {
  const auto st = x.source().group().table_rows();
  const auto rt = x.range().group().table_rows();
  const auto se = x.source().table();
  const auto re = x.range().table();
  const auto& d = x.boundary.image;
  const auto& dot = x.action.dot;
  const auto& star = x.action.star;
  const std::size_t ns = st.size(), nr = rt.size();

  auto inverse_in = [](const std::vector<std::vector<Elem>>& t, std::size_t a) {
    for (std::size_t b = 0; b < t.size(); ++b)
      if (t[a][b] == 0) return b;
    return t.size();
  };
  // -a + b + a in a table-defined group
  auto conj_in = [&](const std::vector<std::vector<Elem>>& t, std::size_t b, std::size_t a) {
    return static_cast<std::size_t>(t[static_cast<std::size_t>(t[inverse_in(t, a)][b])][a]);
  };

  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t s = 0; s < ns; ++s) {
      if (static_cast<std::size_t>(d[static_cast<std::size_t>(dot[r][s])]) != conj_in(rt, static_cast<std::size_t>(d[s]), r))
        return false;
      if (d[static_cast<std::size_t>(star[r][s])] != re[r][static_cast<std::size_t>(d[s])]) return false;
    }
  for (std::size_t s = 0; s < ns; ++s)
    for (std::size_t s1 = 0; s1 < ns; ++s1) {
      if (static_cast<std::size_t>(dot[static_cast<std::size_t>(d[s])][s1]) != conj_in(st, s1, s)) return false;
      if (star[static_cast<std::size_t>(d[s])][s1] != se[s][s1]) return false;
    }
  return true;
}

}  // namespace gwakit
