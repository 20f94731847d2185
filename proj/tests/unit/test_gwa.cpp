#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "gwakit/gwa.hpp"
#include "oracles.hpp"

using namespace gwakit;

namespace {

std::vector<ActionTable> tables(const std::vector<GroupWithAction>& gs) {
  std::vector<ActionTable> out;
  for (const auto& g : gs) out.push_back(g.table());
  return out;
}

const ActionTable kEps1 = {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 1, 3, 2}};
const ActionTable kEps2 = {{0, 1, 2, 3}, {0, 3, 2, 1}, {0, 1, 2, 3}, {0, 3, 2, 1}};
const ActionTable kEps3 = {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}};

bool condition1_raw(const GroupWithAction& g) {
  const Group& G = g.group();
  const int n = G.order();
  auto e = [&](Elem actor, Elem x) { return g.act(actor, x); };
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        const Elem zx = e(x, z), yz = e(z, y);
        Elem v = x;
        v = G.op(v, G.inv(e(zx, x)));
        v = G.op(v, e(G.op(y, zx), x));
        v = G.op(v, G.inv(x));
        v = G.op(v, e(z, x));
        v = G.op(v, G.inv(e(G.op(z, yz), x)));
        if (v != 0) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("GwA counts") {
  CHECK(all_gwa_on_group(small_group(1, 1)).size() == 1);
  CHECK(all_gwa_on_group(small_group(2, 1)).size() == 1);
  CHECK(all_gwa_on_group(small_group(4, 1)).size() == 2);
  CHECK(all_gwa_on_group(small_group(4, 2)).size() == 10);
  CHECK(all_gwa_on_group(small_group(8, 2)).size() == 32);
  CHECK(all_gwa_on_group(small_group(8, 5)).size() == 736);
}

TEST_CASE("row-assignment oracle reproduces the enumeration") {
  for (auto [o, i] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 1}, {4, 2}, {5, 1}, {6, 1}, {6, 2}, {8, 2}}) {
    auto g = small_group(o, i);
    CAPTURE(o);
    CAPTURE(i);
    CHECK(tables(all_gwa_on_group(g)) == oracle::gwa_by_rows(oracle::cayley(*g)));
  }
}

TEST_CASE("the three printed Kl4 actions appear verbatim") {
  auto kl4 = small_group(4, 2);
  auto all = tables(all_gwa_on_group(kl4));
  for (const auto* t : {&kEps1, &kEps2, &kEps3}) {
    CHECK(is_gwa(*kl4, *t));
    CHECK(std::find(all.begin(), all.end(), *t) != all.end());
  }
}

TEST_CASE("is_gwa names the failed axiom") {
  auto kl4 = small_group(4, 2);
  ActionTable t = kEps3;
  t[0] = {0, 2, 1, 3};
  auto r = is_gwa(*kl4, t);
  CHECK_FALSE(r);
  CHECK(r.message.find("axiom") != std::string::npos);
  ActionTable bad = kEps3;
  bad[1] = {0, 0, 2, 3};
  CHECK_FALSE(is_gwa(*kl4, bad));
  CHECK_THROWS_AS(gwa_from_table(kl4, bad), ValidationError);
  // Rows that are automorphisms but do not compose as a right action.
  ActionTable mixed = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}, {0, 1, 2, 3}};
  auto m = is_gwa(*kl4, mixed);
  CHECK_FALSE(m);
  CHECK(m.message.find("axiom 1") != std::string::npos);
}

TEST_CASE("conjugation GwA") {
  CHECK(gwa_conjugation(small_group(4, 2)) == gwa_trivial(small_group(4, 2)));
  auto d6 = gwa_conjugation(small_group(6, 1));
  CHECK_FALSE(d6 == gwa_trivial(small_group(6, 1)));
  CHECK(is_gwa(d6.group(), d6.table()));
}

TEST_CASE("capacity bound") {
  CHECK_THROWS_AS(all_gwa_on_group(small_group(8, 5), 4), CapacityError);
  CHECK_NOTHROW(all_gwa_on_group(small_group(4, 2), 4));
}

TEST_CASE("isomorphism classes agree with the bijection oracle") {
  for (auto [o, i] : std::vector<std::pair<int, int>>{{4, 2}, {6, 1}, {8, 2}}) {
    auto list = all_gwa_on_group(small_group(o, i));
    auto classes = isomorphism_classes(list, 2);
    std::vector<std::size_t> cls_of(list.size());
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (auto k : classes[c]) cls_of[k] = c;
    const auto t = oracle::cayley(list[0].group());
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b)
        CHECK((cls_of[a] == cls_of[b]) == oracle::isomorphic(t, list[a].table(), t, list[b].table()));
  }
}

TEST_CASE("isomorphism is an equivalence relation on C2^3 samples") {
  auto list = all_gwa_on_group(small_group(8, 5));
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, list.size() - 1);
  for (int k = 0; k < 60; ++k) {
    const auto& a = list[pick(rng)];
    const auto& b = list[pick(rng)];
    const auto& c = list[pick(rng)];
    CHECK(are_isomorphic_gwa(a, a));
    CHECK(are_isomorphic_gwa(a, b) == are_isomorphic_gwa(b, a));
    if (are_isomorphic_gwa(a, b) && are_isomorphic_gwa(b, c)) CHECK(are_isomorphic_gwa(a, c));
  }
  auto iso = find_gwa_isomorphism(list[3], list[3]);
  REQUIRE(iso);
  CHECK(iso->is_bijective());
}

TEST_CASE("classification of C2^3") {
  auto list = all_gwa_on_group(small_group(8, 5));
  auto classes = isomorphism_classes(list, 4);
  CHECK(classes.size() == 14);
  std::size_t total = 0;
  std::multiset<std::size_t> sizes;
  for (const auto& c : classes) {
    total += c.size();
    sizes.insert(c.size());
    CHECK(std::is_sorted(c.begin(), c.end()));
    CHECK(isomorphic_family(list[c.front()], list) == c);
  }
  CHECK(total == 736);
  CHECK(sizes == std::multiset<std::size_t>{1, 84, 21, 42, 84, 168, 14, 21, 7, 56, 84, 42, 84, 28});
  int c1 = 0;
  for (const auto& c : classes) c1 += satisfies_condition1(list[c.front()]);
  CHECK(c1 == 6);
  CHECK(isomorphism_class_representatives(list).size() == 14);
}

TEST_CASE("ideals agree with the subset oracle") {
  for (auto [o, i] : std::vector<std::pair<int, int>>{{4, 2}, {6, 1}, {8, 2}, {8, 3}, {8, 4}}) {
    for (const auto& g : all_gwa_on_group(small_group(o, i))) {
      std::vector<std::vector<int>> mine;
      for (auto& id : all_ideals(g)) mine.push_back(id.elements);
      CHECK(mine == oracle::ideals(oracle::cayley(g.group()), g.table()));
    }
  }
  std::map<std::size_t, int> hist;
  for (const auto& g : all_gwa_on_group(small_group(8, 2))) ++hist[all_ideals(g).size()];
  CHECK(hist[6] > 0);
}

TEST_CASE("ideal closure is the smallest ideal containing the seed") {
  std::mt19937 rng(11);
  auto list = all_gwa_on_group(small_group(8, 2));
  for (std::size_t k = 0; k < list.size(); k += 3) {
    const auto& g = list[k];
    const auto t = oracle::cayley(g.group());
    const auto a = g.table();
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Elem> seed{static_cast<Elem>(rng() % 8), static_cast<Elem>(rng() % 8)};
      std::vector<int> expect = oracle::ideal_hull(t, a, seed);
      CHECK(ideal_closure(seed, g).elements == expect);
    }
  }
}

TEST_CASE("Condition 1 matches the literal formula") {
  for (auto [o, i] : std::vector<std::pair<int, int>>{{4, 2}, {6, 1}, {8, 3}, {8, 4}})
    for (const auto& g : all_gwa_on_group(small_group(o, i))) CHECK(satisfies_condition1(g) == condition1_raw(g));
  CHECK(satisfies_condition1(gwa_trivial(small_group(8, 5))));
}

TEST_CASE("nilpotency on Kl4 and A4") {
  std::multiset<int> classes;
  for (const auto& g : all_gwa_on_group(small_group(4, 2))) {
    classes.insert(nilpotency_class(g));
    CHECK_FALSE(is_perfect(g));
  }
  CHECK(classes == std::multiset<int>{1, 2, 2, 2, 0, 0, 0, 0, 0, 0});

  auto a4 = gwa_conjugation(make_alternating_4());
  auto series = lower_central_series(a4);
  REQUIRE(series.size() == 2);
  CHECK(series[0].elements.size() == 12);
  CHECK(series[1].elements.size() == 4);
  for (Elem e : series[1].elements)
    if (e != 0) CHECK(a4.group().element_order(e) == 2);
  CHECK(nilpotency_class(a4) == 0);
  CHECK(nilpotency_class(gwa_trivial(small_group(1, 1))) == 1);
  CHECK(nilpotency_class(gwa_trivial(small_group(8, 5))) == 1);
  CHECK(nilpotency_class(gwa_conjugation(small_group(8, 3))) == 2);
}

TEST_CASE("commutator ideal") {
  auto g = gwa_conjugation(small_group(6, 1));
  Ideal whole{{0, 1, 2, 3, 4, 5}};
  auto c = commutator_ideal(whole, whole, g);
  CHECK(c.elements.size() == 3);
  CHECK(is_ideal(c.elements, g));
  CHECK_THROWS_AS(commutator_ideal(Ideal{{0, 3}}, whole, g), ValidationError);
}

TEST_CASE("GwA morphisms from the Kl4 session") {
  auto a4 = gwa_conjugation(make_alternating_4());
  Elem x = -1;
  for (Elem e = 0; e < 12; ++e)
    if (a4.group().name(e) == "(1,2)(3,4)") x = e;
  REQUIRE(x > 0);
  // a and b both go to (1,2)(3,4), ab to the identity.
  std::vector<Elem> image{0, x, x, 0};
  CHECK(check_homomorphism(*small_group(4, 2), a4.group(), image));
  int hits = 0;
  for (const auto& g : all_gwa_on_group(small_group(4, 2))) hits += static_cast<bool>(is_gwa_morphism(image, g, a4));
  CHECK(hits > 0);
}

TEST_CASE("morphisms compose and identities are morphisms") {
  auto list = all_gwa_on_group(small_group(4, 2));
  for (const auto& g : list) CHECK(is_gwa_morphism(identity_morphism(g).image, g, g));
  for (std::size_t a = 0; a < list.size(); a += 3)
    for (std::size_t b = 0; b < list.size(); b += 4)
      for (const auto& f : all_gwa_morphisms(list[a], list[b]))
        for (const auto& h : all_gwa_morphisms(list[b], list[a])) {
          std::vector<Elem> comp(4);
          for (Elem e = 0; e < 4; ++e) comp[static_cast<std::size_t>(e)] = h(f(e));
          CHECK(is_gwa_morphism(comp, list[a], list[a]));
        }
}

TEST_CASE("sub-GwAs and products") {
  auto g = gwa_conjugation(small_group(8, 3));
  auto ideals = all_ideals(g);
  for (const auto& id : ideals) {
    auto sub = restrict_gwa(g, id.elements);
    CHECK(sub.gwa.order() == static_cast<int>(id.elements.size()));
  }
  std::vector<Elem> not_closed{0, 1};
  CHECK_THROWS_AS(restrict_gwa(g, not_closed), ValidationError);
  auto p = gwa_direct_product(gwa_trivial(small_group(2, 1)), gwa_conjugation(small_group(6, 1)));
  CHECK(p.order() == 12);
  CHECK(is_gwa(p.group(), p.table()));
}
