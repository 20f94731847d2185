#include "gwakit/gwa.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <string>

#include "gwakit/parallel.hpp"

namespace gwakit {

namespace {

std::string triple(Elem a, Elem b, Elem c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

std::vector<Elem> flatten(const Group& group, const ActionTable& act) {
  const int n = group.order();
  if (static_cast<int>(act.size()) != n) throw ValidationError("action table has wrong number of rows");
  std::vector<Elem> flat;
  flat.reserve(static_cast<std::size_t>(n * n));
  for (const auto& row : act) {
    if (static_cast<int>(row.size()) != n) throw ValidationError("action table row has wrong length");
    for (Elem x : row) {
      if (x < 0 || x >= n) throw ValidationError("action table entry out of range");
      flat.push_back(x);
    }
  }
  return flat;
}

CheckResult check_flat(const Group& g, const std::vector<Elem>& act) {
  const int n = g.order();
  auto at = [&](Elem h, Elem x) { return act[static_cast<std::size_t>(h * n + x)]; };
  for (Elem h1 = 0; h1 < n; ++h1)
    for (Elem h2 = 0; h2 < n; ++h2)
      for (Elem x = 0; x < n; ++x)
        if (at(g.op(h1, h2), x) != at(h2, at(h1, x)))
          return CheckResult::fail("axiom 1 (right action) fails for (actor1, actor2, operand) = " + triple(h1, h2, x));
  for (Elem x = 0; x < n; ++x)
    if (at(0, x) != x) return CheckResult::fail("axiom 2 (identity acts trivially) fails for operand " + std::to_string(x));
  for (Elem h = 0; h < n; ++h)
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (at(h, g.op(a, b)) != g.op(at(h, a), at(h, b)))
          return CheckResult::fail("axiom 3 (action by endomorphisms) fails for (actor, a, b) = " + triple(h, a, b));
  for (Elem h = 0; h < n; ++h)
    if (at(h, 0) != 0) return CheckResult::fail("axiom 4 (identity is fixed) fails for actor " + std::to_string(h));
  return CheckResult::pass();
}

}  // namespace

int max_order() {
  if (const char* env = std::getenv("GWAKIT_MAX_ORDER")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 12;
}

GroupWithAction::GroupWithAction(GroupPtr group, const ActionTable& act) : group_(std::move(group)) {
  act_ = flatten(*group_, act);
  if (auto r = check_flat(*group_, act_); !r) throw ValidationError(r.message);
}

GroupWithAction::GroupWithAction(GroupPtr group, std::vector<Elem> flat, Unchecked)
    : group_(std::move(group)), act_(std::move(flat)) {}

GroupWithAction GroupWithAction::trivial(GroupPtr group) {
  const int n = group->order();
  std::vector<Elem> flat(static_cast<std::size_t>(n * n));
  for (int h = 0; h < n; ++h)
    for (int x = 0; x < n; ++x) flat[static_cast<std::size_t>(h * n + x)] = x;
  return {std::move(group), std::move(flat), Unchecked{}};
}

GroupWithAction GroupWithAction::conjugation(GroupPtr group) {
  const int n = group->order();
  std::vector<Elem> flat(static_cast<std::size_t>(n * n));
  for (int h = 0; h < n; ++h)
    for (int x = 0; x < n; ++x) flat[static_cast<std::size_t>(h * n + x)] = group->conj(x, h);
  return {std::move(group), std::move(flat), Unchecked{}};
}

ActionTable GroupWithAction::table() const {
  const int n = order();
  ActionTable rows(static_cast<std::size_t>(n));
  for (int h = 0; h < n; ++h) rows[static_cast<std::size_t>(h)].assign(act_.begin() + h * n, act_.begin() + (h + 1) * n);
  return rows;
}

CheckResult is_gwa(const Group& group, const ActionTable& act) {
  std::vector<Elem> flat;
  try {
    flat = flatten(group, act);
  } catch (const ValidationError& e) {
    return CheckResult::fail(e.what());
  }
  return check_flat(group, flat);
}

GroupWithAction gwa_trivial(GroupPtr group) { return GroupWithAction::trivial(std::move(group)); }
GroupWithAction gwa_conjugation(GroupPtr group) { return GroupWithAction::conjugation(std::move(group)); }
GroupWithAction gwa_from_table(GroupPtr group, const ActionTable& act) { return {std::move(group), act}; }

std::vector<GroupWithAction> all_gwa_on_group(const GroupPtr& group, std::optional<int> bound) {
  const int limit = bound.value_or(max_order());
  if (group->order() > limit)
    throw CapacityError("group order " + std::to_string(group->order()) + " exceeds bound " + std::to_string(limit));
  const AutomorphismGroup aut = automorphism_group(group);
  const int n = group->order();
  std::vector<std::vector<Elem>> tables;
  for_each_homomorphism(*group, *aut.group, false, [&](std::span<const Elem> image) {
    std::vector<Elem> flat(static_cast<std::size_t>(n * n));
    for (int h = 0; h < n; ++h) {
      const auto& perm = aut.perms[static_cast<std::size_t>(image[static_cast<std::size_t>(h)])];
      std::copy(perm.begin(), perm.end(), flat.begin() + h * n);
    }
    tables.push_back(std::move(flat));
    return true;
  });
  std::sort(tables.begin(), tables.end());
  std::vector<GroupWithAction> out;
  out.reserve(tables.size());
  for (auto& t : tables) {
    if (auto r = check_flat(*group, t); !r) throw ValidationError("enumerated action fails: " + r.message);
    out.push_back(GroupWithAction(group, std::move(t), GroupWithAction::Unchecked{}));
  }
  return out;
}

SubGwA restrict_gwa(const GroupWithAction& gwa, std::span<const Elem> elements) {
  Subgroup sub = induced_subgroup(gwa.group(), elements);
  const int m = sub.group->order();
  ActionTable act(static_cast<std::size_t>(m), std::vector<Elem>(static_cast<std::size_t>(m)));
  for (int h = 0; h < m; ++h)
    for (int x = 0; x < m; ++x) {
      Elem y = sub.locate[static_cast<std::size_t>(
          gwa.act(sub.embedding[static_cast<std::size_t>(h)], sub.embedding[static_cast<std::size_t>(x)]))];
      if (y < 0) throw ValidationError("action does not restrict to the subset");
      act[static_cast<std::size_t>(h)][static_cast<std::size_t>(x)] = y;
    }
  GroupWithAction restricted(sub.group, act);
  return {std::move(restricted), std::move(sub)};
}

GroupWithAction gwa_direct_product(const GroupWithAction& a, const GroupWithAction& b) {
  GroupPtr prod = direct_product(a.group(), b.group());
  const int nb = b.order();
  const int n = prod->order();
  ActionTable act(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n)));
  for (int h = 0; h < n; ++h)
    for (int x = 0; x < n; ++x)
      act[static_cast<std::size_t>(h)][static_cast<std::size_t>(x)] =
          a.act(h / nb, x / nb) * nb + b.act(h % nb, x % nb);
  return {prod, act};
}

// Morphisms ------------------------------------------------------------------

bool GwAMorphism::is_bijective() const {
  return GroupHom{src.group_ptr(), dst.group_ptr(), image}.is_bijective();
}

CheckResult is_gwa_morphism(std::span<const Elem> image, const GroupWithAction& src, const GroupWithAction& dst) {
  if (auto r = check_homomorphism(src.group(), dst.group(), image); !r) return r;
  for (Elem h = 0; h < src.order(); ++h)
    for (Elem g = 0; g < src.order(); ++g)
      if (image[static_cast<std::size_t>(src.act(h, g))] !=
          dst.act(image[static_cast<std::size_t>(h)], image[static_cast<std::size_t>(g)]))
        return CheckResult::fail("action not preserved for (actor, operand) = (" + std::to_string(h) + ", " +
                                 std::to_string(g) + ")");
  return CheckResult::pass();
}

GwAMorphism gwa_morphism(const GroupWithAction& src, const GroupWithAction& dst, std::vector<Elem> image) {
  if (auto r = is_gwa_morphism(image, src, dst); !r) throw ValidationError(r.message);
  return {src, dst, std::move(image)};
}

std::vector<GwAMorphism> all_gwa_morphisms(const GroupWithAction& src, const GroupWithAction& dst) {
  std::vector<GwAMorphism> out;
  for (auto& hom : all_homomorphisms(src.group_ptr(), dst.group_ptr())) {
    bool ok = true;
    for (Elem h = 0; h < src.order() && ok; ++h)
      for (Elem g = 0; g < src.order(); ++g)
        if (hom.image[static_cast<std::size_t>(src.act(h, g))] != dst.act(hom(h), hom(g))) {
          ok = false;
          break;
        }
    if (ok) out.push_back({src, dst, std::move(hom.image)});
  }
  return out;
}

GwAMorphism identity_morphism(const GroupWithAction& g) {
  std::vector<Elem> image(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) image[static_cast<std::size_t>(i)] = i;
  return {g, g, std::move(image)};
}

// Isomorphism ----------------------------------------------------------------

std::optional<GwAMorphism> find_gwa_isomorphism(const GroupWithAction& a, const GroupWithAction& b) {
  std::optional<GwAMorphism> found;
  const int n = a.order();
  for_each_homomorphism(a.group(), b.group(), true, [&](std::span<const Elem> image) {
    for (Elem h = 0; h < n; ++h)
      for (Elem g = 0; g < n; ++g)
        if (image[static_cast<std::size_t>(a.act(h, g))] !=
            b.act(image[static_cast<std::size_t>(h)], image[static_cast<std::size_t>(g)]))
          return true;
    found = GwAMorphism{a, b, std::vector<Elem>(image.begin(), image.end())};
    return false;
  });
  return found;
}

bool are_isomorphic_gwa(const GroupWithAction& a, const GroupWithAction& b) {
  return find_gwa_isomorphism(a, b).has_value();
}

std::vector<std::size_t> isomorphic_family(const GroupWithAction& x, std::span<const GroupWithAction> list) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < list.size(); ++i)
    if (are_isomorphic_gwa(x, list[i])) out.push_back(i);
  return out;
}

namespace {

// Cheap isomorphism invariant: per actor, (element order, fixed points,
// order of the induced automorphism), sorted.
std::vector<std::array<int, 3>> gwa_signature(const GroupWithAction& g) {
  const int n = g.order();
  std::vector<std::array<int, 3>> sig;
  sig.reserve(static_cast<std::size_t>(n));
  for (Elem h = 0; h < n; ++h) {
    int fixed = 0;
    for (Elem x = 0; x < n; ++x)
      if (g.act(h, x) == x) ++fixed;
    int aut_order = 1;
    for (Elem p = h; p != 0; p = g.group().op(p, h)) {
      bool identity = true;
      for (Elem x = 0; x < n && identity; ++x) identity = g.act(p, x) == x;
      if (identity) break;
      ++aut_order;
    }
    sig.push_back({g.group().element_order(h), fixed, aut_order});
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace

std::vector<std::vector<std::size_t>> isomorphism_classes(std::span<const GroupWithAction> list, int jobs) {
  std::vector<std::pair<int, std::vector<std::array<int, 3>>>> keys(list.size());
  parallel_for(list.size(), jobs, [&](std::size_t i) { keys[i] = {list[i].order(), gwa_signature(list[i])}; });

  std::map<std::pair<int, std::vector<std::array<int, 3>>>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < list.size(); ++i) buckets[keys[i]].push_back(i);
  std::vector<std::vector<std::size_t>> bucket_list;
  for (auto& [key, members] : buckets) bucket_list.push_back(std::move(members));

  std::vector<std::vector<std::vector<std::size_t>>> per_bucket(bucket_list.size());
  parallel_for(bucket_list.size(), jobs, [&](std::size_t b) {
    auto& classes = per_bucket[b];
    for (std::size_t i : bucket_list[b]) {
      bool placed = false;
      for (auto& cls : classes)
        if (are_isomorphic_gwa(list[cls.front()], list[i])) {
          cls.push_back(i);
          placed = true;
          break;
        }
      if (!placed) classes.push_back({i});
    }
  });

  std::vector<std::vector<std::size_t>> out;
  for (auto& classes : per_bucket)
    for (auto& cls : classes) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::vector<std::size_t> isomorphism_class_representatives(std::span<const GroupWithAction> list) {
  std::vector<std::size_t> reps;
  for (const auto& cls : isomorphism_classes(list)) reps.push_back(cls.front());
  return reps;
}

// Ideals ---------------------------------------------------------------------

bool is_ideal(std::span<const Elem> elements, const GroupWithAction& g) {
  const Group& grp = g.group();
  if (!grp.is_normal(elements)) return false;
  std::vector<bool> in(static_cast<std::size_t>(grp.order()), false);
  for (Elem e : elements) in[static_cast<std::size_t>(e)] = true;
  for (Elem a : elements)
    for (Elem x = 0; x < grp.order(); ++x) {
      if (!in[static_cast<std::size_t>(g.act(x, a))]) return false;
      if (!in[static_cast<std::size_t>(grp.op(grp.inv(x), g.act(a, x)))]) return false;
    }
  return true;
}

std::vector<Ideal> all_ideals(const GroupWithAction& g) {
  std::vector<Ideal> out;
  for (auto& sub : all_subgroups(g.group()))
    if (sub.normal && is_ideal(sub.elements, g)) out.push_back({std::move(sub.elements)});
  return out;
}

Ideal ideal_closure(std::span<const Elem> seed, const GroupWithAction& g) {
  const Group& grp = g.group();
  const int n = grp.order();
  ElementSet current = grp.closure(seed);
  while (true) {
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    for (Elem e : current) in[static_cast<std::size_t>(e)] = true;
    ElementSet extra;
    auto add = [&](Elem y) {
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = true;
        extra.push_back(y);
      }
    };
    for (Elem a : current)
      for (Elem x = 0; x < n; ++x) {
        add(grp.conj(a, x));
        add(g.act(x, a));
        add(grp.op(grp.inv(x), g.act(a, x)));
      }
    if (extra.empty()) return {current};
    current.insert(current.end(), extra.begin(), extra.end());
    current = grp.closure(current);
  }
}

bool satisfies_condition1(const GroupWithAction& g) {
  const Group& grp = g.group();
  const int n = grp.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        const Elem zx = g.act(x, z);
        const Elem yz = g.act(z, y);
        Elem sum = x;
        sum = grp.op(sum, grp.inv(g.act(zx, x)));
        sum = grp.op(sum, g.act(grp.op(y, zx), x));
        sum = grp.op(sum, grp.inv(x));
        sum = grp.op(sum, g.act(z, x));
        sum = grp.op(sum, grp.inv(g.act(grp.op(z, yz), x)));
        if (sum != 0) return false;
      }
  return true;
}

// Commutators and nilpotency -------------------------------------------------

Ideal commutator_ideal(const Ideal& a, const Ideal& b, const GroupWithAction& g, CommutatorRule rule) {
  if (!is_ideal(a.elements, g) || !is_ideal(b.elements, g))
    throw ValidationError("commutator arguments must be ideals");
  const Group& grp = g.group();
  ElementSet gens;
  for (Elem x : a.elements)
    for (Elem y : b.elements) {
      gens.push_back(grp.commutator(x, y));
      gens.push_back(grp.op(grp.inv(x), g.act(y, x)));
      if (rule == CommutatorRule::standard) gens.push_back(grp.op(grp.inv(y), g.act(x, y)));
    }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return ideal_closure(gens, g);
}

namespace {

Ideal whole(const GroupWithAction& g) {
  Ideal all;
  for (Elem x = 0; x < g.order(); ++x) all.elements.push_back(x);
  return all;
}

}  // namespace

bool is_perfect(const GroupWithAction& g, CommutatorRule rule) {
  const Ideal all = whole(g);
  return commutator_ideal(all, all, g, rule).elements == all.elements;
}

std::vector<Ideal> lower_central_series(const GroupWithAction& g, CommutatorRule rule) {
  const Ideal all = whole(g);
  std::vector<Ideal> series{all};
  while (true) {
    Ideal next = commutator_ideal(series.back(), all, g, rule);
    if (next.elements == series.back().elements) return series;
    series.push_back(std::move(next));
  }
}

int nilpotency_class(const GroupWithAction& g, CommutatorRule rule) {
  if (g.order() == 1) return 1;
  const auto series = lower_central_series(g, rule);
  if (series.back().elements.size() != 1) return 0;
  return static_cast<int>(series.size()) - 1;
}

bool is_nilpotent(const GroupWithAction& g) { return nilpotency_class(g) > 0; }

}  // namespace gwakit
