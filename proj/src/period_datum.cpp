#include "perdomcoh/period_datum.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace pdc {

bool GaloisAction::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

Vec GaloisAction::apply(const Vec& v) const {
  if (perm.empty()) return v;
  if (perm.size() != v.size()) throw ConfigError("Galois permutation size mismatch");
  Vec r(v.size(), Rat(0));
  for (std::size_t i = 0; i < v.size(); ++i) r[perm[i]] = v[i];
  return r;
}

Vec GaloisAction::apply_inverse(const Vec& v) const {
  if (perm.empty()) return v;
  if (perm.size() != v.size()) throw ConfigError("Galois permutation size mismatch");
  Vec r(v.size(), Rat(0));
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[perm[i]];
  return r;
}

Mat GaloisAction::matrix(int dim) const {
  Mat m(dim, dim);
  for (int i = 0; i < dim; ++i) m.at(perm.empty() ? i : perm[i], i) = Rat(1);
  return m;
}

GaloisAction GaloisAction::normalized(int dim) const {
  GaloisAction g = *this;
  if (g.perm.empty()) {
    g.perm.resize(dim);
    std::iota(g.perm.begin(), g.perm.end(), 0);
  }
  return g;
}

namespace {

bool valid_permutation(const std::vector<int>& p, int dim) {
  if (static_cast<int>(p.size()) != dim) return false;
  std::vector<bool> seen(dim, false);
  for (int x : p) {
    if (x < 0 || x >= dim || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
  return r;
}

// Closure of the permutation group generated by the given permutations.
std::set<std::vector<int>> permutation_group(const std::vector<std::vector<int>>& gens, int dim) {
  std::vector<int> id(dim);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> group{id};
  std::vector<std::vector<int>> frontier{id};
  constexpr std::size_t kGroupCap = 100000;
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& g : frontier)
      for (const auto& gen : gens) {
        auto h = compose(gen, g);
        if (group.insert(h).second) {
          if (group.size() > kGroupCap) throw CapExceeded("automorphism group closure too large");
          next.push_back(std::move(h));
        }
      }
    frontier = std::move(next);
  }
  return group;
}

}  // namespace

Vec average_mu(const Vec& mu, const GaloisAction& galois,
               const std::vector<GaloisAction>& e_level) {
  int dim = static_cast<int>(mu.size());
  std::vector<std::vector<int>> gens;
  gens.push_back(galois.normalized(dim).perm);
  for (const auto& g : e_level) gens.push_back(g.normalized(dim).perm);
  for (const auto& g : gens)
    if (!valid_permutation(g, dim)) throw ConfigError("invalid averaging permutation");
  auto group = permutation_group(gens, dim);
  Vec sum(mu.size(), Rat(0));
  for (const auto& p : group) {
    GaloisAction a;
    a.perm = p;
    sum = vec_add(sum, a.apply(mu));
  }
  return vec_scale(Rat(1, static_cast<long long>(group.size())), sum);
}

namespace {

void push(ValidationReport& rep, const std::string& name, bool passed, std::string detail,
          bool informational = false) {
  rep.checks.push_back({name, passed, std::move(detail), informational});
}

std::string delta_str(const Rat& lhs, const Rat& rhs) {
  return rat_str(lhs) + " vs " + rat_str(rhs);
}

}  // namespace

const CheckResult* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

ValidationReport validate(const PeriodDatum& datum) {
  ValidationReport rep;
  const RootDatum& rd = datum.root;
  const int dim = rd.dim;
  const GaloisAction galois = datum.galois.normalized(dim);

  // -- shape -------------------------------------------------------------
  {
    std::ostringstream bad;
    if (static_cast<int>(datum.cochar.mu.size()) != dim) bad << "mu dimension; ";
    if (static_cast<int>(datum.slope.nu.size()) != dim) bad << "nu dimension; ";
    if (!valid_permutation(galois.perm, dim)) bad << "galois permutation; ";
    if (galois.order < 1) bad << "galois order; ";
    if (datum.slope.s < 1) bad << "decency exponent; ";
    if (datum.inner.relative_roots.size() != datum.inner.delta.size() ||
        datum.inner.omegas.size() != datum.inner.delta.size())
      bad << "inner form arity; ";
    for (const auto& v : datum.inner.relative_roots)
      if (static_cast<int>(v.size()) != dim) bad << "relative root dimension; ";
    for (const auto& v : datum.inner.omegas)
      if (static_cast<int>(v.size()) != dim) bad << "omega dimension; ";
    if (datum.inner.center_rank < 0) bad << "center rank; ";
    std::set<std::string> labels(datum.inner.delta.begin(), datum.inner.delta.end());
    if (labels.size() != datum.inner.delta.size()) bad << "duplicate delta labels; ";
    for (const auto& g : datum.e_level)
      if (!valid_permutation(g.normalized(dim).perm, dim)) bad << "e_level permutation; ";
    std::string msg = bad.str();
    push(rep, "shape", msg.empty(), msg.empty() ? "component dimensions consistent" : msg);
    if (!msg.empty()) {
      rep.structural_ok = false;
      rep.non_empty = false;
      return rep;  // nothing else is evaluable
    }
  }

  // -- galois action -----------------------------------------------------
  {
    std::ostringstream bad;
    // generator^e = identity
    std::vector<int> id(dim);
    std::iota(id.begin(), id.end(), 0);
    std::vector<int> power = id;
    for (long long k = 0; k < galois.order; ++k) power = compose(galois.perm, power);
    if (power != id) bad << "generator^order != identity; ";
    // permutes the simple coroots and conjugates simple reflections to
    // simple reflections
    Mat g = galois.matrix(dim);
    Mat ginv = transpose(g);  // permutation matrices are orthogonal
    for (int i = 0; i < rd.rank(); ++i) {
      Vec image = galois.apply(rd.coroots[i]);
      int j = -1;
      for (int t = 0; t < rd.rank(); ++t)
        if (rd.coroots[t] == image) {
          j = t;
          break;
        }
      if (j < 0) {
        bad << "coroot " << i << " not mapped to a simple coroot; ";
        continue;
      }
      if (!(g * rd.reflection_matrix(i) * ginv == rd.reflection_matrix(j)))
        bad << "conjugation of s_" << (i + 1) << " is not s_" << (j + 1) << "; ";
    }
    std::string msg = bad.str();
    push(rep, "galois_action", msg.empty(),
         msg.empty() ? "diagram automorphism of order dividing " + std::to_string(galois.order)
                     : msg);
  }

  // -- mu ------------------------------------------------------------------
  {
    bool ok = true;
    for (const Rat& x : datum.cochar.mu) ok = ok && is_integral(x);
    push(rep, "mu_integral", ok, "mu = " + vec_str(datum.cochar.mu));
  }
  {
    std::ostringstream bad;
    for (int i = 0; i < rd.rank(); ++i)
      if (rd.pairing(datum.cochar.mu, i) < Rat(0))
        bad << "<mu, alpha_" << (i + 1) << "> = " << rat_str(rd.pairing(datum.cochar.mu, i))
            << " < 0; ";
    std::string msg = bad.str();
    if (!msg.empty()) msg.resize(msg.size() - 2);  // drop trailing "; "
    push(rep, "mu_dominant", msg.empty(), msg.empty() ? "all simple pairings >= 0" : msg);
  }
  push(rep, "mu_galois_fixed", galois.apply(datum.cochar.mu) == datum.cochar.mu,
       "generator(mu) = " + vec_str(galois.apply(datum.cochar.mu)));

  // -- nu ------------------------------------------------------------------
  {
    std::ostringstream bad;
    for (int i = 0; i < rd.rank(); ++i)
      if (rd.pairing(datum.slope.nu, i) != Rat(0))
        bad << "<nu, alpha_" << (i + 1) << "> = " << rat_str(rd.pairing(datum.slope.nu, i))
            << " != 0; ";
    std::string msg = bad.str();
    if (!msg.empty()) msg.resize(msg.size() - 2);  // drop trailing "; "
    push(rep, "nu_basic", msg.empty(),
         msg.empty() ? "nu factors through the center" : msg);
  }
  {
    Vec snu = vec_scale(Rat(datum.slope.s), datum.slope.nu);
    bool ok = true;
    for (const Rat& x : snu) ok = ok && is_integral(x);
    push(rep, "nu_decent", ok,
         "s = " + std::to_string(datum.slope.s) + ", s*nu = " + vec_str(snu));
  }
  push(rep, "nu_galois_fixed", galois.apply(datum.slope.nu) == datum.slope.nu,
       "generator(nu) = " + vec_str(galois.apply(datum.slope.nu)));

  // -- inner form ----------------------------------------------------------
  {
    std::ostringstream bad;
    for (int a = 0; a < datum.inner.size(); ++a)
      for (int b = 0; b < datum.inner.size(); ++b) {
        Rat got = dot(datum.inner.relative_roots[b], datum.inner.omegas[a]);
        Rat want = (a == b) ? Rat(1) : Rat(0);
        if (got != want)
          bad << "<omega_" << datum.inner.delta[a] << ", beta_" << datum.inner.delta[b]
              << "> = " << delta_str(got, want) << "; ";
      }
    std::string msg = bad.str();
    push(rep, "omega_dual_basis", msg.empty(),
         msg.empty() ? "dual-basis property holds on " + std::to_string(datum.inner.size()) +
                           " labels"
                     : msg);
  }
  {
    std::ostringstream bad;
    for (int a = 0; a < datum.inner.size(); ++a)
      if (galois.apply(datum.inner.omegas[a]) != datum.inner.omegas[a])
        bad << "omega_" << datum.inner.delta[a] << " not fixed; ";
    std::string msg = bad.str();
    push(rep, "omega_galois_fixed", msg.empty(),
         msg.empty() ? "generator fixes every omega" : msg);
  }

  // -- inner product invariance ---------------------------------------------
  {
    std::ostringstream bad;
    Mat g = galois.matrix(dim);
    if (!(transpose(g) * rd.gram * g == rd.gram)) bad << "not Galois invariant; ";
    for (int i = 0; i < rd.rank(); ++i) {
      Mat s = rd.reflection_matrix(i);
      if (!(transpose(s) * rd.gram * s == rd.gram)) {
        bad << "not s_" << (i + 1) << " invariant; ";
      }
    }
    std::string msg = bad.str();
    push(rep, "inner_product_invariant", msg.empty(),
         msg.empty() ? "form invariant under generator and simple reflections" : msg);
  }

  rep.structural_ok = true;
  for (const auto& c : rep.checks)
    if (!c.informational && !c.passed) rep.structural_ok = false;

  // -- non-emptiness ---------------------------------------------------------
  {
    Vec mu_bar = average_mu(datum.cochar.mu, galois, datum.e_level);
    bool ok = dominance_leq(rd, datum.slope.nu, mu_bar);
    std::string detail = "mu_bar >= nu with mu_bar = " + vec_str(mu_bar) +
                         ", nu = " + vec_str(datum.slope.nu);
    if (ok) {
      auto c = coroot_coefficients(rd, datum.slope.nu, mu_bar);
      detail += ", mu_bar - nu = " + vec_str(*c) + " in simple coroots";
    } else {
      detail += ": mu_bar - nu is not a non-negative combination of simple coroots";
    }
    push(rep, "non_emptiness", ok, detail);
    rep.non_empty = ok;

    auto c = coroot_coefficients(rd, datum.slope.nu, mu_bar);
    bool integral = c.has_value();
    if (c)
      for (const Rat& x : *c) integral = integral && is_integral(x);
    push(rep, "non_emptiness_integral_lattice", integral,
         integral ? "mu_bar - nu lies in the integral coroot lattice"
                  : "mu_bar - nu lies outside the integral coroot lattice (informational; the "
                    "rational criterion above is authoritative)",
         /*informational=*/true);
  }

  return rep;
}

std::optional<ValidatedDatum> ValidatedDatum::create(PeriodDatum datum, ValidationReport* out) {
  ValidationReport rep = validate(datum);
  if (out) *out = rep;
  if (!rep.structural_ok) return std::nullopt;
  return ValidatedDatum(std::move(datum), std::move(rep));
}

InnerFormDatum builtin_J_split(const RootDatum& rd, const GaloisAction& galois) {
  if (!galois.normalized(rd.dim).is_identity())
    throw ConfigError("builtin split inner form requires a trivial Galois action");
  InnerFormDatum inner;
  for (int i = 0; i < rd.rank(); ++i) inner.delta.push_back("a" + std::to_string(i + 1));
  inner.relative_roots = rd.roots;
  inner.omegas = dual_basis_coweights(rd);
  inner.center_rank = rd.dim - rd.rank();
  return inner;
}

std::pair<SlopeDatum, InnerFormDatum> builtin_J_gl_basic(int n, long long k) {
  if (n <= 0) throw ConfigError("gl_basic needs n >= 1");
  long long g = std::gcd(k < 0 ? -k : k, static_cast<long long>(n));
  if (g == 0) g = n;  // k = 0
  long long nprime = n / g;
  int m = static_cast<int>(g);  // block count = n / n'
  SlopeDatum slope;
  slope.nu.assign(n, Rat(k, n));
  slope.s = nprime;
  InnerFormDatum inner;
  inner.center_rank = 1;
  for (int j = 1; j < m; ++j) {
    inner.delta.push_back("a" + std::to_string(j));
    Vec root(n, Rat(0));
    for (long long i = (j - 1) * nprime; i < j * nprime; ++i) root[i] = Rat(1, nprime);
    for (long long i = j * nprime; i < (j + 1) * nprime; ++i) root[i] = Rat(-1, nprime);
    inner.relative_roots.push_back(std::move(root));
    Vec omega(n, Rat(-(j * nprime), n));
    for (long long i = 0; i < j * nprime; ++i) omega[i] += Rat(1);
    inner.omegas.push_back(std::move(omega));
  }
  return {std::move(slope), std::move(inner)};
}

}  // namespace pdc
