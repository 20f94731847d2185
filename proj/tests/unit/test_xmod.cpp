#include <doctest.h>

#include <algorithm>
#include <set>

#include "gwakit/xmod.hpp"
#include "oracles.hpp"

using namespace gwakit;

namespace {

// Right actions of R on S by automorphisms, by assigning a row to every r.
std::vector<ActionTable> right_actions(const Group& r, const Group& s) {
  const auto aut = oracle::automorphisms(s.table_rows());
  const auto rt = r.table_rows();
  const int nr = r.order();
  std::vector<ActionTable> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(nr), 0);
  ActionTable a(static_cast<std::size_t>(nr));
  for (;;) {
    for (int k = 0; k < nr; ++k) a[static_cast<std::size_t>(k)] = aut[pick[static_cast<std::size_t>(k)]];
    bool ok = true;
    for (int x = 0; x < nr && ok; ++x)
      for (int y = 0; y < nr && ok; ++y)
        for (int e = 0; e < s.order() && ok; ++e)
          ok = a[static_cast<std::size_t>(rt[x][y])][e] == a[static_cast<std::size_t>(y)][a[static_cast<std::size_t>(x)][e]];
    if (ok) out.push_back(a);
    int k = 1;
    while (k < nr && ++pick[static_cast<std::size_t>(k)] == aut.size()) pick[static_cast<std::size_t>(k++)] = 0;
    if (k == nr) break;
  }
  return out;
}

std::size_t oracle_pair_count(const GroupWithAction& s, const GroupWithAction& r) {
  const auto st = s.group().table_rows(), rt = r.group().table_rows();
  const auto sa = s.table(), ra = r.table();
  const auto acts = right_actions(r.group(), s.group());
  std::size_t n = 0;
  for (const auto& d : acts)
    for (const auto& st_ : acts) n += oracle::action_pair_ok(st, sa, rt, ra, d, st_);
  return n;
}

bool oracle_cm(const XModGwA& x) {
  return oracle::cm_ok(x.source().group().table_rows(), x.source().table(), x.range().group().table_rows(),
                       x.range().table(), x.boundary.image, x.action.dot, x.action.star);
}

}  // namespace

TEST_CASE("action pairs match brute force over right actions") {
  auto c4 = all_gwa_on_group(small_group(4, 1));
  auto kl4 = all_gwa_on_group(small_group(4, 2));
  for (const auto& s : c4)
    for (const auto& r : kl4) {
      auto pairs = all_xmod_gwa_actions(s, r);
      CHECK(pairs.size() == oracle_pair_count(s, r));
      for (const auto& p : pairs) CHECK(is_gwa_action(s, r, p.dot, p.star));
    }
  for (std::size_t i : {0u, 4u, 9u})
    for (std::size_t j : {0u, 5u}) CHECK(all_xmod_gwa_actions(kl4[i], kl4[j]).size() == oracle_pair_count(kl4[i], kl4[j]));
}

TEST_CASE("action pair diagnostics") {
  auto s = gwa_trivial(small_group(4, 2));
  auto r = gwa_trivial(small_group(2, 1));
  ActionTable id = {{0, 1, 2, 3}, {0, 1, 2, 3}};
  ActionTable swap = {{0, 1, 2, 3}, {0, 2, 1, 3}};
  CHECK(is_gwa_action(s, r, id, id));
  CHECK(is_gwa_action(s, r, swap, swap));
  ActionTable broken = {{0, 1, 2, 3}, {0, 1, 1, 3}};
  auto res = is_gwa_action(s, r, broken, id);
  CHECK_FALSE(res);
  CHECK(res.message.rfind("Condition", 0) == 0);
}

TEST_CASE("enumeration of (4,1,4,2)") {
  auto e = all_xmods_by_id(4, 1, 4, 2, 4);
  CHECK(e.pre.size() == 416);
  CHECK(e.full.size() == 184);
  std::size_t c1 = 0, full_in_pre = 0;
  for (const auto& x : e.full) {
    CHECK(is_xmod(x));
    CHECK(recheck_xmod_tables(x));
    CHECK(oracle_cm(x));
    c1 += is_xmod_c1(x);
  }
  for (const auto& x : e.pre) {
    CHECK(is_pre_xmod(x));
    CHECK(oracle::action_pair_ok(x.source().group().table_rows(), x.source().table(), x.range().group().table_rows(),
                                 x.range().table(), x.action.dot, x.action.star));
    full_in_pre += oracle_cm(x);
  }
  CHECK(c1 == 88);
  CHECK(full_in_pre == 184);
}

TEST_CASE("pre-crossed count matches boundaries times action pairs") {
  auto ss = all_gwa_on_group(small_group(4, 1));
  auto rs = all_gwa_on_group(small_group(4, 2));
  std::size_t pre = 0, full = 0;
  for (const auto& s : ss)
    for (const auto& r : rs) {
      auto pairs = all_xmod_gwa_actions(s, r);
      for (const auto& d : all_gwa_morphisms(s, r))
        for (const auto& p : pairs) {
          XModGwA x{d, p, XModLevel::pre};
          const auto rt = r.group().table_rows();
          bool cm13 = true;
          for (Elem a = 0; a < r.order(); ++a)
            for (Elem b = 0; b < s.order(); ++b) {
              cm13 = cm13 && d(p.apply_dot(a, b)) == r.group().conj(d(b), a);
              cm13 = cm13 && d(p.apply_star(a, b)) == r.act(a, d(b));
            }
          pre += cm13;
          full += cm13 && oracle_cm(x);
        }
    }
  CHECK(pre == 416);
  CHECK(full == 184);
}

TEST_CASE("Condition 4 failure message") {
  auto e = all_xmods_by_id(4, 1, 4, 2, 4);
  bool seen = false;
  for (const auto& x : e.pre) {
    auto r = is_xmod(x);
    if (r || r.message.rfind("Condition 4 is fail\nFor s = ", 0) != 0) continue;
    CHECK(r.message.find(" and s1 = ") != std::string::npos);
    CHECK(r.message.find(" <> ") != std::string::npos);
    seen = true;
    break;
  }
  CHECK(seen);
}

TEST_CASE("pre_xmod_obj validates its input") {
  auto s = gwa_trivial(small_group(2, 1));
  auto r = gwa_trivial(small_group(2, 1));
  auto d = gwa_morphism(s, r, {0, 1});
  ActionTable id = {{0, 1}, {0, 1}};
  auto x = pre_xmod_obj(d, id, id);
  CHECK(x.level == XModLevel::full);
  ActionTable bad = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(pre_xmod_obj(d, bad, id), ValidationError);
}

TEST_CASE("ideal inclusions are crossed modules") {
  for (int o = 1; o <= 8; ++o)
    for (int i = 1; i <= small_group_count(o); ++i)
      for (const auto& g : all_gwa_on_group(small_group(o, i)))
        for (const auto& id : all_ideals(g)) {
          auto x = xmod_by_ideal(g, id);
          CHECK(x.level == XModLevel::full);
          CHECK(oracle_cm(x));
        }
  auto g = gwa_conjugation(small_group(6, 1));
  CHECK_THROWS_AS(xmod_by_ideal(g, Ideal{{0, 3}}), ValidationError);
}

TEST_CASE("ideal sub-GwA source on C4 x C2 gives (66, 10)") {
  auto list = all_gwa_on_group(small_group(8, 2));
  int hits = 0;
  for (const auto& r : list)
    for (const auto& id : all_ideals(r)) {
      if (id.elements.size() != 4) continue;
      auto s = restrict_gwa(r, id.elements).gwa;
      auto e = all_xmods(s, r);
      if (e.pre.size() == 66 && e.full.size() == 10) ++hits;
    }
  CHECK(hits > 0);
}

TEST_CASE("morphisms and isomorphisms of crossed modules") {
  auto e = all_xmods_by_id(4, 1, 4, 2, 4);
  for (std::size_t k = 0; k < e.full.size(); k += 17) {
    const auto& x = e.full[k];
    auto a = identity_morphism(x.source()), b = identity_morphism(x.range());
    CHECK(is_xmod_morphism(a, b, x, x));
    auto iso = find_xmod_isomorphism(x, x);
    REQUIRE(iso);
    CHECK(iso->alpha.is_bijective());
    auto ker = kernel_xmod(xmod_morphism(x, x, a, b));
    CHECK(ker.source().order() == 1);
    CHECK(ker.range().order() == 1);
  }
  CHECK_FALSE(find_xmod_isomorphism(e.full.front(), trivial_xmod()).has_value());
}

TEST_CASE("kernel of the projection to the trivial crossed module") {
  auto x = identity_xmod(gwa_conjugation(small_group(6, 1)));
  auto t = trivial_xmod();
  auto to_t = [](const GroupWithAction& g, const GroupWithAction& z) {
    return GwAMorphism{g, z, std::vector<Elem>(static_cast<std::size_t>(g.order()), 0)};
  };
  auto m = xmod_morphism(x, t, to_t(x.source(), t.source()), to_t(x.range(), t.range()));
  auto k = kernel_xmod(m);
  CHECK(k.source().order() == 6);
  CHECK(is_xmod(k));
}

TEST_CASE("direct product and trivial crossed modules") {
  auto a = identity_xmod(gwa_conjugation(small_group(6, 1)));
  auto b = xmod_by_ideal(gwa_trivial(small_group(4, 2)), Ideal{{0, 1}});
  auto p = xmod_direct_product(a, b);
  CHECK(p.source().order() == 12);
  CHECK(p.range().order() == 24);
  CHECK(is_xmod(p));
  CHECK(recheck_xmod_tables(p));
  auto t = all_xmods_by_id(1, 1, 1, 1);
  CHECK(t.pre.size() == 1);
  CHECK(t.full.size() == 1);
}
