// Independent brute-force recomputations used to audit the engine at small
// scale (|W| <= 120).  These deliberately avoid the engine's shortcuts:
// cosets are built by explicit subgroup multiplication, orbits by union-find
// closure over all generator powers, and Omega_I / I_[w] by scanning every
// member and every subset.
#pragma once

#include <vector>

#include "perdomcoh/engine.hpp"

namespace pdc {
namespace oracle {

// Minimal-length representative per left coset w W_mu, where W_mu and the
// cosets are formed by matrix multiplication (no w(mu)-fiber shortcut).
// Asserts the minimal-length member of each coset is unique.
std::vector<int> kostant(const WeylGroup& weyl, const Vec& mu);

// Orbit partition of `elements` under conjugation by every power gamma^k,
// k = 1..order, merged by union-find.  Returns sorted member lists, sorted
// by smallest member.
std::vector<std::vector<int>> orbit_partition(const WeylGroup& weyl,
                                              const std::vector<int>& elements,
                                              const GaloisAction& galois, const RootDatum& rd);

// Membership of an orbit in Omega_I tested on EVERY member and every label
// outside I.
bool omega_membership(const EngineContext& ctx, const std::vector<int>& members,
                      const std::vector<int>& I);

// I_[w] as the intersection of all subsets I with [w] in Omega_I over the
// full 2^|Delta| scan; verifies the intersection is itself a member.
std::vector<int> minimal_subset(const EngineContext& ctx, const std::vector<int>& members);

// Length of w as the number of positive coroots mapped to negative ones.
int length_by_inversions(const RootDatum& rd, const std::vector<Vec>& positive,
                         const Mat& w_matrix);

}  // namespace oracle
}  // namespace pdc
