#pragma once

// Brute-force reference implementations. They only read Cayley and action
// tables and share no algorithm with the library.

#include <vector>

#include "gwakit/xmod.hpp"

namespace oracle {

using Table = std::vector<std::vector<int>>;

Table cayley(const gwakit::Group& g);

/// Every subset containing 0 and closed under the operation, each sorted,
/// the list sorted by (size, elements).
std::vector<std::vector<int>> subgroups(const Table& t);

/// Automorphisms as image arrays, from all permutations fixing 0.
std::vector<std::vector<int>> automorphisms(const Table& t);

/// Every assignment of automorphism rows to the elements with row 0 = id,
/// kept when act[h1 + h2] = act[h2] o act[h1]. Sorted by flattened table.
std::vector<Table> gwa_by_rows(const Table& t);

/// Ideals as subsets: normal, act-closed and closed under -g + g^a.
std::vector<std::vector<int>> ideals(const Table& t, const Table& act);

/// Intersection of every ideal containing `seed`.
std::vector<int> ideal_hull(const Table& t, const Table& act, const std::vector<int>& seed);

/// Bijections fixing 0 that preserve operation and action.
bool isomorphic(const Table& t1, const Table& a1, const Table& t2, const Table& a2);

/// Conditions i) - viii) read straight off the tables.
bool action_pair_ok(const Table& st, const Table& sa, const Table& rt, const Table& ra, const Table& dot,
                    const Table& star);

/// CM1 - CM4 read straight off the tables.
bool cm_ok(const Table& st, const Table& sa, const Table& rt, const Table& ra, const std::vector<int>& d,
           const Table& dot, const Table& star);

Table act_table(const gwakit::GroupWithAction& g);

}  // namespace oracle
