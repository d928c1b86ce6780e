// The cohomology engine: Kostant representatives, Galois orbits, the
// Omega_I sets and minimal parabolic subsets I_[w], the closed-form summand
// table, the E1/E2 pages, and the Grothendieck-group consistency checks.
#pragma once

#include <string>
#include <vector>

#include "perdomcoh/kgroup.hpp"
#include "perdomcoh/period_datum.hpp"

namespace pdc {

struct KostantSet {
  std::vector<int> elements;      // Weyl indices of W^mu, sorted by (length, word)
  std::size_t stabilizer_size = 0;  // |W_mu|
};

struct GaloisOrbit {
  int rep = 0;              // canonical representative: minimal (length, word) member
  std::vector<int> members; // Weyl indices, sorted by (length, word)
  int length = 0;           // common length l([w])

  int size() const { return static_cast<int>(members.size()); }
};

struct EngineContext {
  PeriodDatum datum;
  ValidationReport report;
  bool non_empty = false;
  WeylGroup weyl;
  KostantSet kostant;
  std::vector<GaloisOrbit> orbits;  // sorted by (length, rep word)

  const RootDatum& root() const { return datum.root; }
  int delta_size() const { return datum.inner.size(); }
  GaloisSymbol orbit_symbol(int orbit_index) const;
  std::string word_string(int weyl_index) const;  // "e" or "s2*s1"
};

EngineContext make_context(const ValidatedDatum& vd, std::size_t cap = kDefaultWeylCap);

// W_mu = {w : w(mu) = mu}; one minimal-length representative per left coset
// w W_mu (minimality is unique per coset - asserted).
KostantSet kostant_representatives(const WeylGroup& weyl, const Vec& mu);

// Orbits of W^mu under w -> gamma w gamma^{-1}; throws ConfigError when the
// action does not preserve W^mu.
std::vector<GaloisOrbit> galois_orbits(const WeylGroup& weyl, const KostantSet& kostant,
                                       const GaloisAction& galois, const RootDatum& rd);

// Indices of orbits [w] with (w mu, omega_a) > (nu, omega_a) for all labels
// a outside I; agreement across orbit members is asserted.
std::vector<int> omega_I(const EngineContext& ctx, const std::vector<int>& I);

// I_[w] = {a : (w mu, omega_a) <= (nu, omega_a)}, the minimal I with
// [w] in Omega_I; cross-checked against a scan of all 2^|Delta| subsets
// whenever |Delta| <= 12.
std::vector<int> minimal_parabolic_subset(const EngineContext& ctx, const GaloisOrbit& orbit);

struct CohomologySummand {
  int orbit_index = 0;
  std::vector<int> parabolic_subset;  // I_[w] as sorted label indices
  long long degree = 0;               // 2 l([w]) + |Delta \ I_[w]|
  long long tate_twist = 0;           // -l([w])
  long long galois_dim = 1;           // orbit size
  int orbit_length = 0;               // l([w])
};

// The closed-form summand table, one row per orbit, sorted by
// (degree, twist, canonical representative).  Refuses empty period domains.
std::vector<CohomologySummand> compute_cohomology(const EngineContext& ctx);

// Graded Galois virtual representation of Y_I: for each [w] in Omega_I a
// token of dimension |orbit| in degree 2 l([w]) with twist -l([w]), carried
// on the trivial J-symbol.  I = Delta is the flag-variety extension and must
// be requested explicitly.
VirtualGradedRep y_I_cohomology(const EngineContext& ctx, const std::vector<int>& I,
                                bool allow_full_delta = false);

struct PageEntry {
  int p = 0;
  long long q = 0;
  int orbit_index = 0;
  std::vector<int> subset;  // the I of the symbol below
  RepSymbol symbol;
};

struct SpectralPage {
  int stage = 1;  // 1 or 2
  std::vector<PageEntry> entries;  // sorted by (p, q, orbit, subset)
};

SpectralPage e1_page(const EngineContext& ctx);
SpectralPage e2_page(const EngineContext& ctx);

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

// chi(flag) - chi_c(closed form) - chi(E2-regrouped Y) = 0 after v-expansion.
CheckOutcome les_consistency(const EngineContext& ctx);

// For every orbit subcomplex and q-row: alternating p-sums of E1 and E2
// agree after v-expansion.
CheckOutcome row_euler_conservation(const EngineContext& ctx);

// Splitting: same-degree orbit pairs with different lengths must have
// parabolic subsets of sizes differing by >= 2 and Ext^1 = 0.
struct SplittingPair {
  int orbit_a = 0, orbit_b = 0;
  long long degree = 0;
  bool critical = false;  // equal degree, different lengths
  int size_gap = 0;       // | |I_a| - |I_b| |
  long long ext1 = 0;
  bool passed = true;
};
CheckOutcome splitting_check(const EngineContext& ctx, std::vector<SplittingPair>* pairs = nullptr);

// Every member of every orbit yields the same I_[w] and the same Omega_I
// memberships as the canonical representative.
CheckOutcome representative_independence(const EngineContext& ctx);

// I subseteq I' implies Omega_I subseteq Omega_I'; Omega_Delta is everything.
CheckOutcome omega_monotonicity(const EngineContext& ctx);

// Convenience: all engine checks in report order.
std::vector<CheckOutcome> run_engine_checks(const EngineContext& ctx);

}  // namespace pdc
