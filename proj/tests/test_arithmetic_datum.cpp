// Galois actions, slope data, inner-form relative data, mu-averaging, and
// the validation gate.  Each validation check is driven to a targeted
// failure at least once; accepted datums are checked against hand-computed
// values.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "perdomcoh/catalog.hpp"
#include "perdomcoh/config_io.hpp"
#include "perdomcoh/period_datum.hpp"

using namespace pdc;

namespace {

Vec qv(std::initializer_list<long long> xs) {
  Vec v;
  for (long long x : xs) v.push_back(Rat(x));
  return v;
}

// Split datum over a named group type with nu = 0.
PeriodDatum split_datum(const std::string& type, Vec mu) {
  PeriodDatum d;
  d.root = build_root_datum(type);
  d.galois = GaloisAction{}.normalized(d.root.dim);
  d.cochar.mu = std::move(mu);
  d.slope.nu.assign(d.root.dim, Rat(0));
  d.slope.s = 1;
  d.inner = builtin_J_split(d.root, d.galois);
  return d;
}

bool check_failed(const ValidationReport& r, const std::string& name) {
  const CheckResult* c = r.find(name);
  REQUIRE(c != nullptr);
  return !c->passed;
}

}  // namespace

TEST_CASE("galois permutation semantics: e_i maps to e_{perm[i]}") {
  GaloisAction g{{2, 3, 0, 1}, 2};
  CHECK(g.apply(qv({10, 20, 30, 40})) == qv({30, 40, 10, 20}));
  CHECK(g.apply_inverse(g.apply(qv({1, 2, 3, 4}))) == qv({1, 2, 3, 4}));
  CHECK_FALSE(g.is_identity());
  CHECK(GaloisAction{}.is_identity());
  CHECK(GaloisAction{}.normalized(3).perm == std::vector<int>{0, 1, 2});
  // matrix columns realize the same action
  CHECK(g.matrix(4) * qv({10, 20, 30, 40}) == qv({30, 40, 10, 20}));
}

TEST_CASE("mu averaging over the generated automorphism group") {
  GaloisAction swap_blocks{{2, 3, 0, 1}, 2};
  CHECK(average_mu(qv({1, 0, 0, 0}), swap_blocks) == Vec{Rat(1, 2), Rat(0), Rat(1, 2), Rat(0)});
  CHECK(average_mu(qv({1, 0, 1, 0}), swap_blocks) == qv({1, 0, 1, 0}));

  // adding an extra level automorphism enlarges the group to a Klein four
  GaloisAction swap_inside{{1, 0, 3, 2}, 2};
  CHECK(average_mu(qv({1, 0, 0, 0}), swap_blocks, {swap_inside}) ==
        Vec{Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)});

  // identity action: average is the identity
  CHECK(average_mu(qv({3, 1}), GaloisAction{}) == qv({3, 1}));
}

TEST_CASE("a split GL_3 datum passes every check") {
  PeriodDatum d = split_datum("gl(3)", qv({2, -1, -1}));
  ValidationReport r = validate(d);
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
  CHECK(r.structural_ok);
  CHECK(r.non_empty);
  CHECK(r.ok());
  auto vd = ValidatedDatum::create(d);
  REQUIRE(vd.has_value());
  CHECK(vd->non_empty());
  CHECK(vd->datum().cochar.mu == qv({2, -1, -1}));
}

TEST_CASE("shape mismatches fail fast") {
  PeriodDatum d = split_datum("gl(3)", qv({1, 0}));  // mu has the wrong length
  ValidationReport r = validate(d);
  CHECK(check_failed(r, "shape"));
  CHECK_FALSE(r.structural_ok);
  CHECK_FALSE(ValidatedDatum::create(d).has_value());

  PeriodDatum d2 = split_datum("gl(3)", qv({1, 0, -1}));
  d2.galois.perm = {0, 1};  // wrong length
  CHECK(check_failed(validate(d2), "shape"));

  PeriodDatum d3 = split_datum("gl(3)", qv({1, 0, -1}));
  d3.slope.nu = qv({0, 0});
  CHECK(check_failed(validate(d3), "shape"));
}

TEST_CASE("galois generator must be a diagram automorphism") {
  // transposing only the first two coordinates of GL_3 sends the first
  // simple coroot to its negative
  PeriodDatum d = split_datum("gl(3)", qv({0, 0, 0}));
  d.galois = GaloisAction{{1, 0, 2}, 2};
  CHECK(check_failed(validate(d), "galois_action"));

  // the block swap is a diagram automorphism of gl(2)xgl(2) but not of gl(4)
  PeriodDatum d1 = split_datum("gl(4)", qv({0, 0, 0, 0}));
  d1.galois = GaloisAction{{2, 3, 0, 1}, 2};
  CHECK(check_failed(validate(d1), "galois_action"));

  // an order exponent that the generator does not satisfy
  PeriodDatum d2 = split_datum("gl(2)xgl(2)", qv({0, 0, 0, 0}));
  d2.galois = GaloisAction{{2, 3, 0, 1}, 3};  // g^3 = g != id
  CHECK(check_failed(validate(d2), "galois_action"));

  // any multiple of the true order is fine
  PeriodDatum d3 = split_datum("gl(2)xgl(2)", qv({0, 0, 0, 0}));
  d3.galois = GaloisAction{{2, 3, 0, 1}, 4};
  // builtin split relative data requires a trivial action, so rebuild it for
  // the twisted group; relative data is not under test here
  d3.cochar.mu = qv({0, 0, 0, 0});
  ValidationReport r3 = validate(d3);
  const CheckResult* c3 = r3.find("galois_action");
  REQUIRE(c3 != nullptr);
  CHECK(c3->passed);

  // coordinate swap on B2 is not a diagram automorphism (root lengths differ)
  PeriodDatum d4;
  d4.root = build_root_datum("B2");
  d4.galois = GaloisAction{{1, 0}, 2};
  d4.cochar.mu = qv({0, 0});
  d4.slope.nu = qv({0, 0});
  d4.slope.s = 1;
  d4.inner = builtin_J_split(d4.root, GaloisAction{}.normalized(2));
  ValidationReport r4 = validate(d4);
  CHECK(check_failed(r4, "galois_action"));
  CHECK(check_failed(r4, "inner_product_invariant"));
}

TEST_CASE("cocharacter checks: integrality, dominance, galois fixedness") {
  PeriodDatum d = split_datum("gl(2)", Vec{Rat(1, 2), Rat(0)});
  CHECK(check_failed(validate(d), "mu_integral"));

  PeriodDatum d2 = split_datum("gl(2)", qv({0, 1}));
  CHECK(check_failed(validate(d2), "mu_dominant"));

  ScenarioConfig weil = catalog("weil_restriction_gl2");
  PeriodDatum d3 = realize(weil);
  d3.cochar.mu = qv({1, 0, 0, 0});  // not fixed by the block swap
  CHECK(check_failed(validate(d3), "mu_galois_fixed"));
}

TEST_CASE("slope checks: basic (central), decent, galois fixed") {
  PeriodDatum d = split_datum("gl(2)", qv({1, 0}));
  d.slope.nu = qv({1, 0});  // pairs nonzero with the simple root
  CHECK(check_failed(validate(d), "nu_basic"));

  PeriodDatum d2 = split_datum("gl(2)", qv({1, 0}));
  d2.slope.nu = Vec{Rat(1, 2), Rat(1, 2)};
  d2.slope.s = 1;  // s*nu is not integral
  CHECK(check_failed(validate(d2), "nu_decent"));
  d2.slope.s = 2;
  const CheckResult* ok = validate(d2).find("nu_decent");
  REQUIRE(ok != nullptr);
  CHECK(ok->passed);

  PeriodDatum d3 = realize(catalog("weil_restriction_gl2"));
  d3.slope.nu = Vec{Rat(1, 2), Rat(1, 2), Rat(0), Rat(0)};
  d3.slope.s = 2;
  CHECK(check_failed(validate(d3), "nu_galois_fixed"));
}

TEST_CASE("inner-form relative data checks") {
  PeriodDatum d = realize(catalog("gsp4_siegel"));
  d.inner.omegas[0] = qv({1, 1, 0});  // pairing with the relative root is 2
  CHECK(check_failed(validate(d), "omega_dual_basis"));

  PeriodDatum d2 = realize(catalog("weil_restriction_gl2"));
  d2.inner.omegas[0] = Vec{Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(1, 2)};
  ValidationReport r2 = validate(d2);
  CHECK(check_failed(r2, "omega_galois_fixed"));
}

TEST_CASE("non-emptiness gate: accepted and rejected GL_2 slopes") {
  // rejected: nu = (1,1) exceeds the averaged mu = (1,0)
  PeriodDatum bad = split_datum("gl(2)", qv({1, 0}));
  bad.slope.nu = qv({1, 1});
  bad.slope.s = 1;
  ValidationReport r = validate(bad);
  CHECK(r.structural_ok);
  CHECK_FALSE(r.non_empty);
  CHECK_FALSE(r.ok());
  const CheckResult* ne = r.find("non_emptiness");
  REQUIRE(ne != nullptr);
  CHECK_FALSE(ne->passed);
  CHECK(ne->detail.find("mu_bar >= nu") != std::string::npos);
  // structurally fine, so a ValidatedDatum is still issued
  auto vd = ValidatedDatum::create(bad);
  REQUIRE(vd.has_value());
  CHECK_FALSE(vd->non_empty());

  // accepted: the basic slope 1/2
  PeriodDatum good = split_datum("gl(2)", qv({1, 0}));
  good.slope.nu = Vec{Rat(1, 2), Rat(1, 2)};
  good.slope.s = 2;
  ValidationReport r2 = validate(good);
  CHECK(r2.ok());
}

TEST_CASE("integral-lattice non-emptiness is informational only") {
  PeriodDatum d = realize(catalog("lubin_tate(2)"));
  ValidationReport r = validate(d);
  const CheckResult* c = r.find("non_emptiness_integral_lattice");
  REQUIRE(c != nullptr);
  CHECK(c->informational);
  CHECK_FALSE(c->passed);  // mu_bar - nu = (1/2, -1/2) is not integral
  CHECK(r.ok());           // ... and that does not gate anything

  PeriodDatum d2 = realize(catalog("drinfeld(2)"));
  const CheckResult* c2 = validate(d2).find("non_emptiness_integral_lattice");
  REQUIRE(c2 != nullptr);
  CHECK(c2->passed);
}

TEST_CASE("split relative data: labels, coweights, center rank") {
  RootDatum gl3 = build_gl(3);
  GaloisAction id = GaloisAction{}.normalized(3);
  InnerFormDatum inner = builtin_J_split(gl3, id);
  CHECK(inner.delta == std::vector<std::string>{"a1", "a2"});
  CHECK(inner.relative_roots[0] == gl3.roots[0]);
  CHECK(inner.relative_roots[1] == gl3.roots[1]);
  CHECK(inner.omegas == dual_basis_coweights(gl3));
  CHECK(inner.center_rank == 1);  // dim 3 - semisimple rank 2

  InnerFormDatum prod = builtin_J_split(build_root_datum("gl(2)xgl(2)"),
                                        GaloisAction{}.normalized(4));
  CHECK(prod.center_rank == 2);
  CHECK(prod.delta == std::vector<std::string>{"a1", "a2"});

  GaloisAction swap_blocks{{2, 3, 0, 1}, 2};
  CHECK_THROWS_AS(builtin_J_split(build_root_datum("gl(2)xgl(2)"), swap_blocks), ConfigError);
}

TEST_CASE("basic GL_n slope data: frozen small cases") {
  // k = 0 reduces exactly to the split datum
  auto [s0, j0] = builtin_J_gl_basic(3, 0);
  CHECK(s0.nu == qv({0, 0, 0}));
  CHECK(s0.s == 1);
  InnerFormDatum split = builtin_J_split(build_gl(3), GaloisAction{}.normalized(3));
  CHECK(j0.delta == split.delta);
  CHECK(j0.relative_roots == split.relative_roots);
  CHECK(j0.omegas == split.omegas);
  CHECK(j0.center_rank == split.center_rank);

  // slope 1/2 on GL_2: anisotropic J, empty Delta
  auto [s1, j1] = builtin_J_gl_basic(2, 1);
  CHECK(s1.nu == Vec{Rat(1, 2), Rat(1, 2)});
  CHECK(s1.s == 2);
  CHECK(j1.delta.empty());
  CHECK(j1.center_rank == 1);

  // slope 2/4 = 1/2: J = GL_2 over the quaternion algebra, one label
  auto [s2, j2] = builtin_J_gl_basic(4, 2);
  CHECK(s2.nu == Vec(4, Rat(1, 2)));
  CHECK(s2.s == 2);
  CHECK(j2.delta == std::vector<std::string>{"a1"});
  CHECK(j2.relative_roots[0] == Vec{Rat(1, 2), Rat(1, 2), Rat(-1, 2), Rat(-1, 2)});
  CHECK(j2.omegas[0] == Vec{Rat(1, 2), Rat(1, 2), Rat(-1, 2), Rat(-1, 2)});
  CHECK(j2.center_rank == 1);

  // slope 4/6 = 2/3: blocks of size 3
  auto [s3, j3] = builtin_J_gl_basic(6, 4);
  CHECK(s3.nu == Vec(6, Rat(2, 3)));
  CHECK(s3.s == 3);
  CHECK(j3.delta == std::vector<std::string>{"a1"});
  CHECK(j3.relative_roots[0] ==
        Vec{Rat(1, 3), Rat(1, 3), Rat(1, 3), Rat(-1, 3), Rat(-1, 3), Rat(-1, 3)});
  CHECK(j3.omegas[0] ==
        Vec{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)});

  // negative slope mirrors the positive one
  auto [s4, j4] = builtin_J_gl_basic(2, -1);
  CHECK(s4.nu == Vec{Rat(-1, 2), Rat(-1, 2)});
  CHECK(s4.s == 2);
  CHECK(j4.delta.empty());

  CHECK_THROWS_AS(builtin_J_gl_basic(0, 1), ConfigError);
}

TEST_CASE("every catalog datum validates cleanly") {
  for (const std::string& name : catalog_names()) {
    INFO(name);
    ValidationReport r = validate(realize(catalog(name)));
    CHECK(r.ok());
  }
}
