// Assembly and validation of a full period-domain input: a root datum with a
// finite cyclic Galois action, a dominant integral cocharacter class mu, a
// basic decent slope datum nu, and the relative data of the inner form J.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "perdomcoh/root_datum.hpp"

namespace pdc {

// A based automorphism given by a permutation of the ambient coordinate
// basis: basis vector e_i maps to e_{perm[i]}.  Must permute the simple
// coroots (diagram automorphism) and preserve the inner product; both are
// enforced by validate().
struct GaloisAction {
  std::vector<int> perm;  // image indices; identity when empty
  long long order = 1;    // e; generator^e = identity is a validated invariant

  bool is_identity() const;
  Vec apply(const Vec& v) const;
  Vec apply_inverse(const Vec& v) const;
  Mat matrix(int dim) const;
  GaloisAction normalized(int dim) const;  // fills in an explicit identity perm
};

struct CocharacterClass {
  Vec mu;
};

struct SlopeDatum {
  Vec nu;
  long long s = 1;  // decency exponent: s * nu integral
};

struct InnerFormDatum {
  std::vector<std::string> delta;   // ordered labels of the relative simple roots
  std::vector<Vec> relative_roots;  // covectors on the ambient space, one per label
  std::vector<Vec> omegas;          // dual-basis coweights, one per label
  int center_rank = 0;              // Qp-rank r of the center of J

  int size() const { return static_cast<int>(delta.size()); }
};

struct PeriodDatum {
  RootDatum root;
  GaloisAction galois;
  std::vector<GaloisAction> e_level;  // optional extra automorphisms, averaging only
  CocharacterClass cochar;
  SlopeDatum slope;
  InnerFormDatum inner;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  bool informational = false;  // reported but never gates anything
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool structural_ok = false;  // every non-informational check except non-emptiness
  bool non_empty = false;      // the rational-span non-emptiness verdict (authoritative)

  bool ok() const { return structural_ok && non_empty; }
  const CheckResult* find(const std::string& name) const;
};

// Average of mu over the finite group generated by the Galois generator and
// the extra E-level automorphisms.
Vec average_mu(const Vec& mu, const GaloisAction& galois,
               const std::vector<GaloisAction>& e_level = {});

// Runs every check and reports each outcome; never throws on mathematical
// failure (only on structurally malformed input like size mismatches).
ValidationReport validate(const PeriodDatum& datum);

// A datum whose structural checks all passed.  Engine operations accept only
// this; compute_cohomology additionally requires non_empty().
class ValidatedDatum {
 public:
  // Returns nullopt when a structural check fails; the report (also written
  // to *out when given) explains which.
  static std::optional<ValidatedDatum> create(PeriodDatum datum,
                                              ValidationReport* out = nullptr);

  const PeriodDatum& datum() const { return datum_; }
  const ValidationReport& report() const { return report_; }
  bool non_empty() const { return report_.non_empty; }

 private:
  ValidatedDatum(PeriodDatum d, ValidationReport r)
      : datum_(std::move(d)), report_(std::move(r)) {}
  PeriodDatum datum_;
  ValidationReport report_;
};

// Relative data for split J (b = 1): Delta = absolute simple roots with
// labels a1..an, omegas from dual_basis_coweights, center rank = dimension
// of the central torus.  Requires a trivial Galois action.
InnerFormDatum builtin_J_split(const RootDatum& rd, const GaloisAction& galois);

// Slope and relative data for the basic element of slope k/n in GL_n: with
// k/n = k'/n' in lowest terms and m = n/n', J is GL_m over the division
// algebra of invariant k'/n'; s = n', center rank 1, and Delta has m-1
// labels with block-difference relative roots scaled by 1/n'.
std::pair<SlopeDatum, InnerFormDatum> builtin_J_gl_basic(int n, long long k);

}  // namespace pdc
