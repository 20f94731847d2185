#include "gwakit/group.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace gwakit {

namespace {

std::string witness(std::initializer_list<Elem> xs) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (Elem x : xs) {
    if (!first) os << ", ";
    os << x;
    first = false;
  }
  os << ")";
  return os.str();
}

std::string cycle_notation(const std::vector<int>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ",";
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(perm[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace

Group Group::from_table(std::vector<std::vector<Elem>> table, std::optional<CatalogId> catalog_id,
                        std::vector<std::string> names) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw ValidationError("group table is empty");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw ValidationError("group table is not square");
    for (Elem x : row)
      if (x < 0 || x >= n) throw ValidationError("group table entry out of range");
  }
  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw ValidationError("element name list has wrong length");

  Group g;
  g.order_ = n;
  g.table_.reserve(static_cast<std::size_t>(n * n));
  for (const auto& row : table) g.table_.insert(g.table_.end(), row.begin(), row.end());
  g.catalog_id_ = catalog_id;
  g.names_ = std::move(names);

  for (Elem a = 0; a < n; ++a)
    if (g.op(0, a) != a || g.op(a, 0) != a)
      throw ValidationError("index 0 is not the identity at " + witness({a}));

  for (Elem a = 0; a < n; ++a) {
    std::vector<bool> row_seen(static_cast<std::size_t>(n)), col_seen(static_cast<std::size_t>(n));
    for (Elem b = 0; b < n; ++b) {
      row_seen[static_cast<std::size_t>(g.op(a, b))] = true;
      col_seen[static_cast<std::size_t>(g.op(b, a))] = true;
    }
    if (std::find(row_seen.begin(), row_seen.end(), false) != row_seen.end() ||
        std::find(col_seen.begin(), col_seen.end(), false) != col_seen.end())
      throw ValidationError("row/column of " + std::to_string(a) + " is not a permutation");
  }

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
          throw ValidationError("associativity fails at " + witness({a, b, c}));

  g.finish();
  return g;
}

Group Group::from_permutations(std::vector<std::vector<int>> perms) {
  std::sort(perms.begin(), perms.end());
  perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
  if (perms.empty()) throw ValidationError("empty permutation list");
  std::vector<int> id(perms.front().size());
  std::iota(id.begin(), id.end(), 0);
  if (perms.front() != id) throw ValidationError("permutation list lacks the identity");

  std::map<std::vector<int>, Elem> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<Elem>(i));

  const std::size_t n = perms.size();
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  std::vector<int> prod(id.size());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < id.size(); ++x)
        prod[x] = perms[b][static_cast<std::size_t>(perms[a][x])];
      auto it = index.find(prod);
      if (it == index.end()) throw ValidationError("permutation list is not closed");
      table[a][b] = it->second;
    }

  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& p : perms) names.push_back(cycle_notation(p));
  return from_table(std::move(table), std::nullopt, std::move(names));
}

void Group::finish() {
  const int n = order_;
  inverse_.assign(static_cast<std::size_t>(n), 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (op(a, b) == 0) inverse_[static_cast<std::size_t>(a)] = b;

  element_orders_.assign(static_cast<std::size_t>(n), 1);
  for (Elem a = 0; a < n; ++a) {
    int k = 1;
    for (Elem x = a; x != 0; x = op(x, a)) ++k;
    element_orders_[static_cast<std::size_t>(a)] = k;
  }

  std::vector<Elem> by_order(static_cast<std::size_t>(n));
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Elem x, Elem y) { return element_order(x) > element_order(y); });
  ElementSet span{0};
  for (Elem x : by_order) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    generators_.push_back(x);
    span = closure(generators_);
  }

  tree_.clear();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  seen[0] = true;
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    Elem e = queue.front();
    queue.pop_front();
    for (std::size_t gi = 0; gi < generators_.size(); ++gi) {
      Elem next = op(e, generators_[gi]);
      if (seen[static_cast<std::size_t>(next)]) continue;
      seen[static_cast<std::size_t>(next)] = true;
      tree_.push_back({next, e, static_cast<int>(gi)});
      queue.push_back(next);
    }
  }
}

bool Group::is_abelian() const {
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = a + 1; b < order_; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

std::vector<std::vector<Elem>> Group::table_rows() const {
  std::vector<std::vector<Elem>> rows(static_cast<std::size_t>(order_));
  for (Elem a = 0; a < order_; ++a)
    rows[static_cast<std::size_t>(a)].assign(table_.begin() + a * order_, table_.begin() + (a + 1) * order_);
  return rows;
}

std::string Group::name(Elem a) const {
  if (!names_.empty()) return names_[static_cast<std::size_t>(a)];
  return std::to_string(a);
}

ElementSet Group::closure(std::span<const Elem> seed) const {
  std::vector<bool> in(static_cast<std::size_t>(order_), false);
  ElementSet members{0};
  in[0] = true;
  for (Elem s : seed)
    if (!in[static_cast<std::size_t>(s)]) {
      in[static_cast<std::size_t>(s)] = true;
      members.push_back(s);
    }
  // Finite group: closure under the operation alone yields a subgroup.
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (Elem p : {op(members[i], members[j]), op(members[j], members[i])})
        if (!in[static_cast<std::size_t>(p)]) {
          in[static_cast<std::size_t>(p)] = true;
          members.push_back(p);
        }
  std::sort(members.begin(), members.end());
  return members;
}

bool Group::is_subgroup(std::span<const Elem> elements) const {
  std::vector<bool> in(static_cast<std::size_t>(order_), false);
  for (Elem e : elements) in[static_cast<std::size_t>(e)] = true;
  if (elements.empty() || !in[0]) return false;
  for (Elem a : elements)
    for (Elem b : elements)
      if (!in[static_cast<std::size_t>(op(a, b))]) return false;
  return true;
}

bool Group::is_normal(std::span<const Elem> elements) const {
  if (!is_subgroup(elements)) return false;
  std::vector<bool> in(static_cast<std::size_t>(order_), false);
  for (Elem e : elements) in[static_cast<std::size_t>(e)] = true;
  for (Elem h : elements)
    for (Elem g = 0; g < order_; ++g)
      if (!in[static_cast<std::size_t>(conj(h, g))]) return false;
  return true;
}

GroupPtr make_group(Group g) { return std::make_shared<const Group>(std::move(g)); }

bool GroupHom::is_bijective() const {
  std::vector<Elem> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  return src->order() == dst->order() && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

ElementSet GroupHom::kernel() const {
  ElementSet k;
  for (Elem a = 0; a < src->order(); ++a)
    if (image[static_cast<std::size_t>(a)] == 0) k.push_back(a);
  return k;
}

CheckResult check_homomorphism(const Group& src, const Group& dst, std::span<const Elem> image) {
  if (static_cast<int>(image.size()) != src.order())
    return CheckResult::fail("image array has length " + std::to_string(image.size()) + ", expected " +
                             std::to_string(src.order()));
  for (Elem x : image)
    if (x < 0 || x >= dst.order()) return CheckResult::fail("image entry out of range");
  if (image[0] != 0) return CheckResult::fail("identity is not mapped to identity");
  for (Elem a = 0; a < src.order(); ++a)
    for (Elem b = 0; b < src.order(); ++b)
      if (image[static_cast<std::size_t>(src.op(a, b))] !=
          dst.op(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)]))
        return CheckResult::fail("not a homomorphism at " + witness({a, b}));
  return CheckResult::pass();
}

Subgroup induced_subgroup(const Group& parent, std::span<const Elem> elements) {
  ElementSet sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!parent.is_subgroup(sorted)) throw ValidationError("element set is not a subgroup");

  Subgroup sub;
  sub.embedding = sorted;
  sub.locate.assign(static_cast<std::size_t>(parent.order()), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) sub.locate[static_cast<std::size_t>(sorted[i])] = static_cast<Elem>(i);

  const std::size_t m = sorted.size();
  std::vector<std::vector<Elem>> table(m, std::vector<Elem>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      table[i][j] = sub.locate[static_cast<std::size_t>(parent.op(sorted[i], sorted[j]))];
  std::vector<std::string> names;
  if (!parent.names().empty())
    for (Elem e : sorted) names.push_back(parent.name(e));
  sub.group = make_group(Group::from_table(std::move(table), std::nullopt, std::move(names)));
  return sub;
}

// Constructors ---------------------------------------------------------------

GroupPtr make_cyclic(int n) {
  if (n < 1) throw ValidationError("cyclic group order must be positive");
  std::vector<std::vector<Elem>> table(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  return make_group(Group::from_table(std::move(table)));
}

GroupPtr make_dihedral(int n) {
  if (n < 2 || n % 2 != 0) throw ValidationError("dihedral group order must be even");
  const int m = n / 2;
  // r^k s^f stored at k + f*m; s r = r^-1 s.
  std::vector<std::vector<Elem>> table(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int k1 = a % m, f1 = a / m, k2 = b % m, f2 = b / m;
      const int k = ((f1 ? k1 - k2 : k1 + k2) % m + m) % m;
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = k + (f1 ^ f2) * m;
    }
  return make_group(Group::from_table(std::move(table)));
}

GroupPtr make_quaternion8() {
  // Units 1,i,j,k with sign; index = 2*unit + (negative ? 1 : 0).
  static constexpr std::array<std::array<int, 4>, 4> unit{{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  static constexpr std::array<std::array<int, 4>, 4> sign{{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}};
  std::vector<std::vector<Elem>> table(8, std::vector<Elem>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, ub = b / 2;
      const int s = (a % 2) ^ (b % 2) ^ sign[static_cast<std::size_t>(ua)][static_cast<std::size_t>(ub)];
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 2 * unit[static_cast<std::size_t>(ua)][static_cast<std::size_t>(ub)] + s;
    }
  return make_group(Group::from_table(std::move(table), std::nullopt, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}));
}

GroupPtr make_alternating_4() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inversions;
    if (inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return make_group(Group::from_permutations(std::move(perms)));
}

GroupPtr direct_product(const Group& g, const Group& h) {
  const int n = g.order() * h.order();
  std::vector<std::vector<Elem>> table(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          g.op(a / h.order(), b / h.order()) * h.order() + h.op(a % h.order(), b % h.order());
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) names.push_back("(" + g.name(a / h.order()) + "," + h.name(a % h.order()) + ")");
  return make_group(Group::from_table(std::move(table), std::nullopt, std::move(names)));
}

namespace {

GroupPtr with_catalog_id(const GroupPtr& g, CatalogId id, std::vector<std::string> names = {}) {
  if (names.empty()) names = g->names();
  return make_group(Group::from_table(g->table_rows(), id, std::move(names)));
}

GroupPtr build_small_group(int order, int index) {
  const CatalogId id{order, index};
  switch (order) {
    case 1:
    case 2:
    case 3:
    case 5:
    case 7:
      if (index == 1) return with_catalog_id(make_cyclic(order), id);
      break;
    case 4:
      if (index == 1) return with_catalog_id(make_cyclic(4), id);
      if (index == 2)
        return with_catalog_id(direct_product(*make_cyclic(2), *make_cyclic(2)), id, {"e", "a", "b", "ab"});
      break;
    case 6:
      if (index == 1) return with_catalog_id(make_dihedral(6), id);
      if (index == 2) return with_catalog_id(make_cyclic(6), id);
      break;
    case 8:
      switch (index) {
        case 1: return with_catalog_id(make_cyclic(8), id);
        case 2: return with_catalog_id(direct_product(*make_cyclic(4), *make_cyclic(2)), id);
        case 3: return with_catalog_id(make_dihedral(8), id);
        case 4: return with_catalog_id(make_quaternion8(), id);
        case 5: {
          auto c2 = make_cyclic(2);
          return with_catalog_id(direct_product(*c2, *direct_product(*c2, *c2)), id);
        }
        default: break;
      }
      break;
    default: break;
  }
  throw CatalogError("no catalog group " + std::to_string(order) + ":" + std::to_string(index));
}

}  // namespace

int small_group_count(int order) {
  static constexpr std::array<int, 9> counts{0, 1, 1, 1, 2, 1, 2, 1, 5};
  if (order < 1 || order > 8) return 0;
  return counts[static_cast<std::size_t>(order)];
}

GroupPtr small_group(int order, int index) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, GroupPtr> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(order, index);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  GroupPtr g = build_small_group(order, index);
  cache.emplace(key, g);
  return g;
}

// Enumeration ----------------------------------------------------------------

void for_each_homomorphism(const Group& src, const Group& dst, bool bijective,
                           const std::function<bool(std::span<const Elem>)>& visit) {
  if (bijective && src.order() != dst.order()) return;
  const auto& gens = src.generators();
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int k = src.element_order(gens[i]);
    for (Elem y = 0; y < dst.order(); ++y) {
      const int oy = dst.element_order(y);
      if (bijective ? oy == k : k % oy == 0) candidates[i].push_back(y);
    }
  }

  std::vector<Elem> gen_image(gens.size());
  std::vector<Elem> image(static_cast<std::size_t>(src.order()));
  std::vector<bool> hit(static_cast<std::size_t>(dst.order()));
  bool stop = false;

  std::function<void(std::size_t)> assign = [&](std::size_t depth) {
    if (stop) return;
    if (depth == gens.size()) {
      image[0] = 0;
      for (const auto& edge : src.spanning_tree())
        image[static_cast<std::size_t>(edge.element)] =
            dst.op(image[static_cast<std::size_t>(edge.parent)], gen_image[static_cast<std::size_t>(edge.gen)]);
      for (Elem a = 0; a < src.order(); ++a)
        for (std::size_t gi = 0; gi < gens.size(); ++gi)
          if (image[static_cast<std::size_t>(src.op(a, gens[gi]))] !=
              dst.op(image[static_cast<std::size_t>(a)], gen_image[gi]))
            return;
      if (bijective) {
        std::fill(hit.begin(), hit.end(), false);
        for (Elem y : image) {
          if (hit[static_cast<std::size_t>(y)]) return;
          hit[static_cast<std::size_t>(y)] = true;
        }
      }
      if (!visit(image)) stop = true;
      return;
    }
    for (Elem y : candidates[depth]) {
      gen_image[depth] = y;
      assign(depth + 1);
      if (stop) return;
    }
  };
  assign(0);
}

namespace {

std::vector<GroupHom> collect(const GroupPtr& src, const GroupPtr& dst, bool bijective) {
  std::vector<GroupHom> out;
  for_each_homomorphism(*src, *dst, bijective, [&](std::span<const Elem> image) {
    out.push_back({src, dst, std::vector<Elem>(image.begin(), image.end())});
    return true;
  });
  std::sort(out.begin(), out.end(), [](const GroupHom& a, const GroupHom& b) { return a.image < b.image; });
  return out;
}

}  // namespace

std::vector<GroupHom> all_homomorphisms(const GroupPtr& src, const GroupPtr& dst) { return collect(src, dst, false); }

std::vector<GroupHom> automorphisms(const GroupPtr& g) { return collect(g, g, true); }

std::vector<GroupHom> isomorphisms(const GroupPtr& src, const GroupPtr& dst) { return collect(src, dst, true); }

std::optional<GroupHom> find_isomorphism(const GroupPtr& src, const GroupPtr& dst) {
  std::optional<GroupHom> found;
  for_each_homomorphism(*src, *dst, true, [&](std::span<const Elem> image) {
    found = GroupHom{src, dst, std::vector<Elem>(image.begin(), image.end())};
    return false;
  });
  return found;
}

AutomorphismGroup automorphism_group(const GroupPtr& g) {
  static std::mutex mu;
  static std::map<const Group*, std::pair<std::weak_ptr<const Group>, AutomorphismGroup>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(g.get()); it != cache.end() && !it->second.first.expired()) return it->second.second;
  }
  AutomorphismGroup aut;
  for (auto& hom : automorphisms(g)) aut.perms.push_back(std::move(hom.image));
  std::vector<std::vector<int>> perms(aut.perms.begin(), aut.perms.end());
  aut.group = make_group(Group::from_permutations(std::move(perms)));
  std::lock_guard lock(mu);
  cache[g.get()] = {g, aut};
  return aut;
}

std::vector<SubgroupEntry> all_subgroups(const Group& g) {
  std::set<ElementSet> found;
  std::deque<ElementSet> queue;
  ElementSet trivial{0};
  found.insert(trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    ElementSet h = std::move(queue.front());
    queue.pop_front();
    for (Elem x = 0; x < g.order(); ++x) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      ElementSet seed = h;
      seed.push_back(x);
      ElementSet k = g.closure(seed);
      if (found.insert(k).second) queue.push_back(std::move(k));
    }
  }
  std::vector<SubgroupEntry> out;
  for (const auto& h : found) out.push_back({h, g.is_normal(h)});
  std::stable_sort(out.begin(), out.end(), [](const SubgroupEntry& a, const SubgroupEntry& b) {
    return a.elements.size() != b.elements.size() ? a.elements.size() < b.elements.size() : a.elements < b.elements;
  });
  return out;
}

}  // namespace gwakit
