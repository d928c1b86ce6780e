#include "perdomcoh/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pdc {
namespace oracle {

std::vector<int> kostant(const WeylGroup& weyl, const Vec& mu) {
  // Explicit stabilizer subgroup.
  std::vector<int> w_mu;
  for (std::size_t i = 0; i < weyl.size(); ++i)
    if (weyl.elements[i].matrix * mu == mu) w_mu.push_back(static_cast<int>(i));
  // Left cosets by explicit multiplication.
  std::set<std::vector<int>> cosets;
  for (std::size_t w = 0; w < weyl.size(); ++w) {
    std::vector<int> coset;
    for (int u : w_mu)
      coset.push_back(weyl.index_of(weyl.elements[w].matrix * weyl.elements[u].matrix));
    std::sort(coset.begin(), coset.end());
    cosets.insert(std::move(coset));
  }
  std::vector<int> reps;
  for (const auto& coset : cosets) {
    int best = -1;
    int best_len = -1;
    bool unique = true;
    for (int idx : coset) {
      int len = weyl.elements[idx].length();
      if (best < 0 || len < best_len) {
        best = idx;
        best_len = len;
        unique = true;
      } else if (len == best_len) {
        unique = false;
      }
    }
    if (!unique) throw std::logic_error("oracle: coset has two minimal-length members");
    reps.push_back(best);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::vector<int>> orbit_partition(const WeylGroup& weyl,
                                              const std::vector<int>& elements,
                                              const GaloisAction& galois, const RootDatum& rd) {
  Mat g = galois.normalized(rd.dim).matrix(rd.dim);
  std::map<int, int> pos;  // weyl index -> position in `elements`
  for (std::size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = static_cast<int>(i);
  UnionFind uf(static_cast<int>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    Mat power = Mat::identity(rd.dim);
    for (long long k = 1; k <= galois.order; ++k) {
      power = g * power;  // gamma^k
      Mat conj = power * weyl.elements[elements[i]].matrix * transpose(power);
      auto it = pos.find(weyl.index_of(conj));
      if (it == pos.end())
        throw ConfigError("oracle: conjugation leaves the element set");
      uf.unite(static_cast<int>(i), it->second);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (std::size_t i = 0; i < elements.size(); ++i)
    groups[uf.find(static_cast<int>(i))].push_back(elements[i]);
  std::vector<std::vector<int>> orbits;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    orbits.push_back(std::move(members));
  }
  std::sort(orbits.begin(), orbits.end());
  return orbits;
}

bool omega_membership(const EngineContext& ctx, const std::vector<int>& members,
                      const std::vector<int>& I) {
  const RootDatum& rd = ctx.root();
  bool first = true, verdict = false;
  for (int member : members) {
    Vec wmu = ctx.weyl.elements[member].matrix * ctx.datum.cochar.mu;
    bool ok = true;
    for (int a = 0; a < ctx.delta_size(); ++a) {
      if (std::find(I.begin(), I.end(), a) != I.end()) continue;
      if (!(rd.inner(wmu, ctx.datum.inner.omegas[a]) >
            rd.inner(ctx.datum.slope.nu, ctx.datum.inner.omegas[a]))) {
        ok = false;
        break;
      }
    }
    if (first) {
      verdict = ok;
      first = false;
    } else if (ok != verdict) {
      throw std::logic_error("oracle: Omega membership differs between orbit members");
    }
  }
  return verdict;
}

std::vector<int> minimal_subset(const EngineContext& ctx, const std::vector<int>& members) {
  int n = ctx.delta_size();
  if (n > 20) throw CapExceeded("oracle: |Delta| too large for the subset scan");
  std::vector<int> meet;
  bool have = false;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::vector<int> I;
    for (int a = 0; a < n; ++a)
      if (mask & (1ul << a)) I.push_back(a);
    if (!omega_membership(ctx, members, I)) continue;
    if (!have) {
      meet = I;
      have = true;
    } else {
      std::vector<int> inter;
      std::set_intersection(meet.begin(), meet.end(), I.begin(), I.end(),
                            std::back_inserter(inter));
      meet = std::move(inter);
    }
  }
  if (!have) throw std::logic_error("oracle: orbit belongs to no Omega_I (not even I = Delta)");
  if (!omega_membership(ctx, members, meet))
    throw std::logic_error("oracle: subset-intersection is not itself a member");
  return meet;
}

int length_by_inversions(const RootDatum& rd, const std::vector<Vec>& positive,
                         const Mat& w_matrix) {
  Vec zero(rd.dim, Rat(0));
  int count = 0;
  for (const Vec& coroot : positive) {
    Vec image = w_matrix * coroot;
    auto coeff = coroot_coefficients(rd, zero, image);
    if (!coeff) throw std::logic_error("oracle: coroot image left the coroot span");
    bool nonpos = true, nonzero = false;
    for (const Rat& c : *coeff) {
      if (c > Rat(0)) nonpos = false;
      if (c != Rat(0)) nonzero = true;
    }
    if (nonpos && nonzero) ++count;
  }
  return count;
}

}  // namespace oracle
}  // namespace pdc
