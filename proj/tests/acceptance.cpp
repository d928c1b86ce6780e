// Acceptance gate: one PASS/FAIL line per shipped guarantee, exit nonzero on
// any failure.  Each criterion is self-contained and uses only the public
// library surface plus the installed CLI binary.
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "perdomcoh/catalog.hpp"
#include "perdomcoh/config_io.hpp"
#include "perdomcoh/engine.hpp"
#include "perdomcoh/oracle.hpp"
#include "perdomcoh/report.hpp"

using namespace pdc;

namespace {

struct Criterion {
  std::string title;
  std::function<bool(std::string&)> run;  // fills a failure detail
};

Vec qv(std::initializer_list<long long> xs) {
  Vec v;
  for (long long x : xs) v.push_back(Rat(x));
  return v;
}

EngineContext context_for(const std::string& name) {
  auto vd = ValidatedDatum::create(realize(catalog(name)));
  if (!vd) throw ConfigError("catalog entry '" + name + "' failed validation");
  return make_context(*vd);
}

PeriodDatum split_gl2(Vec mu, Vec nu, long long s) {
  PeriodDatum d;
  d.root = build_gl(2);
  d.galois = GaloisAction{}.normalized(2);
  d.cochar.mu = std::move(mu);
  d.slope.nu = std::move(nu);
  d.slope.s = s;
  d.inner = builtin_J_split(d.root, d.galois);
  return d;
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + PDC_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliResult r;
  if (!pipe) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path fixture(const std::string& rel) {
  return std::filesystem::path(PDC_FIXTURE_DIR) / rel;
}

bool expect(bool cond, const std::string& msg, std::string& detail) {
  if (!cond && detail.empty()) detail = msg;
  return cond;
}

// ---- criteria --------------------------------------------------------------

bool drinfeld_tower(std::string& detail) {
  bool ok = true;
  for (int n = 2; n <= 5; ++n) {
    EngineContext ctx = context_for("drinfeld(" + std::to_string(n) + ")");
    auto summands = compute_cohomology(ctx);
    ok &= expect(static_cast<int>(summands.size()) == n,
                 "drinfeld(" + std::to_string(n) + "): summand count", detail);
    for (int i = 0; i < static_cast<int>(summands.size()); ++i) {
      const auto& s = summands[i];
      std::vector<int> first_i(i);
      for (int b = 0; b < i; ++b) first_i[b] = b;
      bool row = s.degree == n - 1 + i && s.tate_twist == -i &&
                 s.parabolic_subset == first_i && s.galois_dim == 1;
      ok &= expect(row, "drinfeld(" + std::to_string(n) + ") row " + std::to_string(i), detail);
    }
  }
  return ok;
}

bool lubin_tate_tower(std::string& detail) {
  bool ok = true;
  for (int n = 2; n <= 5; ++n) {
    EngineContext ctx = context_for("lubin_tate(" + std::to_string(n) + ")");
    ok &= expect(ctx.delta_size() == 0,
                 "lubin_tate(" + std::to_string(n) + "): anisotropic inner form", detail);
    auto summands = compute_cohomology(ctx);
    ok &= expect(static_cast<int>(summands.size()) == n,
                 "lubin_tate(" + std::to_string(n) + "): summand count", detail);
    for (int i = 0; i < static_cast<int>(summands.size()); ++i) {
      const auto& s = summands[i];
      bool row = s.degree == 2 * i && s.tate_twist == -i && s.parabolic_subset.empty() &&
                 s.galois_dim == 1;
      ok &= expect(row, "lubin_tate(" + std::to_string(n) + ") row " + std::to_string(i), detail);
    }
  }
  return ok;
}

bool emptiness_gate(std::string& detail) {
  bool ok = true;
  // nu too large: structurally fine, geometrically empty
  auto bad = ValidatedDatum::create(split_gl2(qv({1, 0}), qv({1, 1}), 1));
  ok &= expect(bad.has_value(), "overweight slope: structural validation", detail);
  if (!bad) return false;
  ok &= expect(!bad->non_empty(), "overweight slope: domain must be empty", detail);
  bool named = false;
  for (const auto& c : bad->report().checks)
    if (c.name == "non_emptiness" && !c.passed &&
        c.detail.find("mu_bar >= nu") != std::string::npos)
      named = true;
  ok &= expect(named, "the failing criterion is named in the report", detail);
  bool threw = false;
  try {
    compute_cohomology(make_context(*bad));
  } catch (const ConfigError&) {
    threw = true;
  }
  ok &= expect(threw, "computing on an empty domain must be refused", detail);

  // the same group with the basic slope is accepted
  PeriodDatum good_d = split_gl2(qv({1, 0}), Vec{Rat(1, 2), Rat(1, 2)}, 2);
  auto good = ValidatedDatum::create(good_d);
  ok &= expect(good.has_value() && good->non_empty(), "basic slope accepted", detail);
  if (good) {
    auto summands = compute_cohomology(make_context(*good));
    ok &= expect(summands.size() == 2 && summands[0].degree == 1 && summands[1].degree == 2,
                 "basic-slope GL_2 degrees", detail);
  }
  return ok;
}

bool galois_descent(std::string& detail) {
  bool ok = true;
  EngineContext ctx = context_for("weil_restriction_gl2");
  auto summands = compute_cohomology(ctx);
  ok &= expect(summands.size() == 3, "three orbit summands", detail);
  std::vector<long long> dims;
  long long total = 0;
  for (const auto& s : summands) {
    dims.push_back(s.galois_dim);
    total += s.galois_dim;
  }
  ok &= expect(dims == std::vector<long long>{1, 2, 1}, "orbit dimensions 1,2,1", detail);
  ok &= expect(total == static_cast<long long>(ctx.kostant.elements.size()),
               "orbit sizes partition the coset set", detail);
  CliResult r = run_cli("run \"" + fixture("configs/weil_restriction_gl2.json").string() +
                        "\" --check --pages --euler --format json");
  ok &= expect(r.exit_code == 0, "CLI run exits 0", detail);
  ok &= expect(r.output == slurp(fixture("expected/weil_restriction_gl2.json")),
               "CLI report matches the fixture byte-for-byte", detail);
  return ok;
}

bool les_consistency_all(std::string& detail) {
  bool ok = true;
  for (const std::string& name : catalog_names()) {
    CheckOutcome c = les_consistency(context_for(name));
    ok &= expect(c.passed, name + ": " + c.detail, detail);
  }
  return ok;
}

bool row_euler_all(std::string& detail) {
  bool ok = true;
  for (const std::string& name : catalog_names()) {
    CheckOutcome c = row_euler_conservation(context_for(name));
    ok &= expect(c.passed, name + ": " + c.detail, detail);
  }
  return ok;
}

bool ext_table_rank_one(std::string& detail) {
  bool ok = true;
  const int delta = 3, r = 1;
  for (int ma = 0; ma < (1 << delta); ++ma)
    for (int mb = 0; mb < (1 << delta); ++mb) {
      std::vector<int> I, J;
      for (int b = 0; b < delta; ++b) {
        if (ma & (1 << b)) I.push_back(b);
        if (mb & (1 << b)) J.push_back(b);
      }
      int d = 0;
      for (int b = 0; b < delta; ++b)
        if (((ma >> b) & 1) != ((mb >> b) & 1)) ++d;
      for (int i = 0; i <= 3; ++i) {
        long long want = 0;
        if (d == 0 && (i == 0 || i == 1)) want = 1;
        if (d == 1 && i == 1) want = 1;
        long long got = ext_dimension(I, J, i, r);
        ok &= expect(got == want,
                     "ext(d=" + std::to_string(d) + ", i=" + std::to_string(i) + ") = " +
                         std::to_string(got) + ", want " + std::to_string(want),
                     detail);
        ok &= expect(got == ext_dimension(J, I, i, r), "ext symmetry", detail);
      }
    }
  return ok;
}

bool splitting_all(std::string& detail) {
  bool ok = true;
  for (const std::string& name : catalog_names()) {
    std::vector<SplittingPair> pairs;
    CheckOutcome c = splitting_check(context_for(name), &pairs);
    ok &= expect(c.passed, name + ": " + c.detail, detail);
    for (const auto& p : pairs) ok &= expect(p.passed, name + ": pair verdict", detail);
    if (name == "gsp4_siegel")
      ok &= expect(pairs.size() == 6, "gsp4_siegel reports all 6 orbit pairs", detail);
  }
  return ok;
}

bool oracle_sweep(std::string& detail) {
  bool ok = true;
  const std::vector<std::string> types = {"gl(1)", "gl(2)", "gl(3)",       "gl(4)",
                                          "gl(5)", "A3",    "B2",          "C2",
                                          "B3",    "C3",    "G2",          "gl(2)xgl(2)",
                                          "gl(3)xgl(2)"};
  for (const std::string& type : types) {
    RootDatum rd = build_root_datum(type);
    WeylGroup weyl = enumerate_weyl(rd);
    if (weyl.size() > 120) {
      ok &= expect(false, type + ": sweep bound exceeded", detail);
      continue;
    }
    auto positive = positive_coroots(rd);
    // length agrees with the inversion-counting oracle, element by element
    std::map<int, int> histogram;
    int longest = 0;
    for (const auto& w : weyl.elements) {
      int by_inversions = oracle::length_by_inversions(rd, positive, w.matrix);
      ok &= expect(w.length() == by_inversions, type + ": length vs inversions", detail);
      ++histogram[w.length()];
      longest = std::max(longest, w.length());
    }
    ok &= expect(longest == static_cast<int>(positive.size()),
                 type + ": longest element vs positive system", detail);
    for (const auto& [l, count] : histogram)
      ok &= expect(count == histogram.at(longest - l), type + ": palindromic histogram", detail);
    // coset representatives against the brute-force oracle
    std::vector<Vec> mus;
    mus.emplace_back(rd.dim, Rat(0));
    if (!rd.coroots.empty()) {
      mus.push_back(rd.coroots[0]);
      Vec mix(rd.dim, Rat(0));
      for (std::size_t i = 0; i < rd.coroots.size(); ++i)
        for (int a = 0; a < rd.dim; ++a)
          mix[a] += Rat(static_cast<long long>(i + 1)) * rd.coroots[i][a];
      mus.push_back(mix);
    }
    for (const Vec& mu : mus) {
      KostantSet k = kostant_representatives(weyl, mu);
      ok &= expect(k.elements == oracle::kostant(weyl, mu), type + ": coset representatives",
                   detail);
      ok &= expect(k.elements.size() * k.stabilizer_size == weyl.size(),
                   type + ": coset count times stabilizer", detail);
    }
  }
  // orbit, membership, and minimal-subset agreement on every shipped scenario
  for (const std::string& name : catalog_names()) {
    EngineContext ctx = context_for(name);
    std::vector<std::vector<int>> got;
    for (const auto& o : ctx.orbits) got.push_back(o.members);
    ok &= expect(got == oracle::orbit_partition(ctx.weyl, ctx.kostant.elements,
                                                ctx.datum.galois, ctx.root()),
                 name + ": orbit partition", detail);
    const int nd = ctx.delta_size();
    for (int mask = 0; mask < (1 << nd); ++mask) {
      std::vector<int> I;
      for (int b = 0; b < nd; ++b)
        if (mask & (1 << b)) I.push_back(b);
      auto members = omega_I(ctx, I);
      for (std::size_t oi = 0; oi < ctx.orbits.size(); ++oi) {
        bool inside = std::find(members.begin(), members.end(), static_cast<int>(oi)) !=
                      members.end();
        ok &= expect(inside == oracle::omega_membership(ctx, ctx.orbits[oi].members, I),
                     name + ": membership", detail);
      }
    }
    for (const auto& orbit : ctx.orbits)
      ok &= expect(minimal_parabolic_subset(ctx, orbit) ==
                       oracle::minimal_subset(ctx, orbit.members),
                   name + ": minimal subset", detail);
  }
  return ok;
}

bool cli_determinism(std::string& detail) {
  bool ok = true;
  for (const char* stem : {"gsp4_siegel", "drinfeld_5"}) {
    std::string args = "run \"" + fixture(std::string("configs/") + stem + ".json").string() +
                       "\" --check --pages --euler --format json";
    CliResult a = run_cli(args);
    CliResult b = run_cli(args);
    ok &= expect(a.exit_code == 0 && b.exit_code == 0,
                 std::string(stem) + ": both runs exit 0", detail);
    ok &= expect(!a.output.empty() && a.output == b.output,
                 std::string(stem) + ": byte-identical reports", detail);
  }
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"Drinfeld tower: n summands in degrees n-1..2n-2 on nested parabolics", drinfeld_tower},
      {"Lubin-Tate tower: anisotropic form, n summands in even degrees 0..2n-2",
       lubin_tate_tower},
      {"emptiness gate: overweight slopes are named, refused, and basic slopes accepted",
       emptiness_gate},
      {"Galois descent: orbit dimensions 1,2,1 and fixture-exact CLI report", galois_descent},
      {"long-exact-sequence Euler consistency on every catalog scenario", les_consistency_all},
      {"rowwise Euler conservation between spectral pages on every catalog scenario",
       row_euler_all},
      {"Ext dimension table for center rank 1 over all subset pairs", ext_table_rank_one},
      {"splitting criterion: every orbit pair on every catalog scenario", splitting_all},
      {"oracle sweep: lengths, cosets, orbits, memberships for all small Weyl groups",
       oracle_sweep},
      {"CLI determinism: repeated runs are byte-identical", cli_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %02zu %s%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].title.c_str(),
                ok ? "" : " -- ", ok ? "" : detail.c_str());
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
