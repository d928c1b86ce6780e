#include "perdomcoh/catalog.hpp"

#include <cctype>

namespace pdc {

namespace {

// "name(3)" / "name(4,2)" -> {3} / {4,2}; empty when the name has no
// parameter list.
std::vector<long long> parse_params(const std::string& name, std::string* stem) {
  std::string s;
  for (char ch : name)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto open = s.find('(');
  if (open == std::string::npos) {
    *stem = s;
    return {};
  }
  if (s.back() != ')') throw ConfigError("malformed catalog name '" + name + "'");
  *stem = s.substr(0, open);
  std::vector<long long> params;
  std::string body = s.substr(open + 1, s.size() - open - 2);
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw ConfigError("malformed catalog name '" + name + "'");
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(cur, &pos);
    } catch (const std::exception&) {
      throw ConfigError("malformed catalog name '" + name + "'");
    }
    if (pos != cur.size()) throw ConfigError("malformed catalog name '" + name + "'");
    params.push_back(v);
    cur.clear();
  };
  for (char ch : body) {
    if (ch == ',')
      flush();
    else
      cur += ch;
  }
  flush();
  return params;
}

ScenarioConfig drinfeld(int n) {
  if (n < 2) throw ConfigError("drinfeld(n) needs n >= 2");
  ScenarioConfig c;
  c.name = "drinfeld(" + std::to_string(n) + ")";
  c.group.type = "gl(" + std::to_string(n) + ")";
  c.mu.assign(n, Rat(-1));
  c.mu[0] = Rat(n - 1);
  c.slope.nu.assign(n, Rat(0));
  c.slope.s = 1;
  c.inner_form.kind = InnerFormConfig::Kind::Split;
  return c;
}

ScenarioConfig lubin_tate(int n) {
  if (n < 2) throw ConfigError("lubin_tate(n) needs n >= 2");
  ScenarioConfig c;
  c.name = "lubin_tate(" + std::to_string(n) + ")";
  c.group.type = "gl(" + std::to_string(n) + ")";
  c.mu.assign(n, Rat(0));
  c.mu[0] = Rat(1);
  c.slope.builtin_gl_basic = true;
  c.slope.k = 1;
  c.inner_form.kind = InnerFormConfig::Kind::GlBasic;
  return c;
}

ScenarioConfig gl_n_basic(int n, long long k) {
  if (n < 2) throw ConfigError("gl_n_basic(n,k) needs n >= 2");
  ScenarioConfig c;
  c.name = "gl_n_basic(" + std::to_string(n) + "," + std::to_string(k) + ")";
  c.group.type = "gl(" + std::to_string(n) + ")";
  // The dominant mu with entries in {q, q+1} and coordinate sum k, where
  // k = q*n + r: the standard minuscule-type partner of the slope k/n.
  long long q = k >= 0 ? k / n : -((-k + n - 1) / n);
  long long r = k - q * n;
  c.mu.assign(n, Rat(q));
  for (long long i = 0; i < r; ++i) c.mu[static_cast<std::size_t>(i)] = Rat(q + 1);
  c.slope.builtin_gl_basic = true;
  c.slope.k = k;
  c.inner_form.kind = InnerFormConfig::Kind::GlBasic;
  return c;
}

ScenarioConfig weil_restriction_gl2() {
  ScenarioConfig c;
  c.name = "weil_restriction_gl2";
  c.group.type = "gl(2)xgl(2)";
  c.group.galois.perm = {2, 3, 0, 1};
  c.group.galois.order = 2;
  c.mu = {Rat(1), Rat(0), Rat(1), Rat(0)};
  c.slope.nu.assign(4, Rat(1, 2));
  c.slope.s = 2;
  c.inner_form.kind = InnerFormConfig::Kind::Explicit;
  c.inner_form.data.delta = {"a1"};
  c.inner_form.data.relative_roots = {{Rat(1, 2), Rat(-1, 2), Rat(1, 2), Rat(-1, 2)}};
  c.inner_form.data.omegas = {{Rat(1, 2), Rat(-1, 2), Rat(1, 2), Rat(-1, 2)}};
  c.inner_form.data.center_rank = 1;
  return c;
}

ScenarioConfig gsp4_siegel() {
  ScenarioConfig c;
  c.name = "gsp4_siegel";
  c.group.type = "explicit";
  c.group.dimension = 3;
  c.group.simple_roots = {{Rat(1), Rat(-1), Rat(0)}, {Rat(0), Rat(2), Rat(-1)}};
  c.group.simple_coroots = {{Rat(1), Rat(-1), Rat(0)}, {Rat(0), Rat(1), Rat(0)}};
  c.group.inner_product = Mat(3, 3);
  const int g[3][3] = {{2, 0, -1}, {0, 2, -1}, {-1, -1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c.group.inner_product.at(i, j) = Rat(g[i][j]);
  c.mu = {Rat(1), Rat(1), Rat(1)};
  c.slope.nu = {Rat(1, 2), Rat(1, 2), Rat(1)};
  c.slope.s = 2;
  c.inner_form.kind = InnerFormConfig::Kind::Explicit;
  c.inner_form.data.delta = {"b1"};
  c.inner_form.data.relative_roots = {{Rat(1), Rat(1), Rat(-1)}};
  c.inner_form.data.omegas = {{Rat(1, 2), Rat(1, 2), Rat(0)}};
  c.inner_form.data.center_rank = 1;
  return c;
}

}  // namespace

ScenarioConfig catalog(const std::string& name) {
  std::string stem;
  std::vector<long long> params = parse_params(name, &stem);
  auto want = [&](std::size_t n) {
    if (params.size() != n)
      throw ConfigError("catalog entry '" + stem + "' takes " + std::to_string(n) +
                        " parameter(s)");
  };
  if (stem == "drinfeld") {
    want(1);
    return drinfeld(static_cast<int>(params[0]));
  }
  if (stem == "lubin_tate") {
    want(1);
    return lubin_tate(static_cast<int>(params[0]));
  }
  if (stem == "gl_n_basic") {
    want(2);
    return gl_n_basic(static_cast<int>(params[0]), params[1]);
  }
  if (stem == "weil_restriction_gl2") {
    want(0);
    return weil_restriction_gl2();
  }
  if (stem == "gsp4_siegel") {
    want(0);
    return gsp4_siegel();
  }
  throw ConfigError("unknown catalog entry '" + name + "'");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (int n = 2; n <= 5; ++n) names.push_back("drinfeld(" + std::to_string(n) + ")");
  for (int n = 2; n <= 5; ++n) names.push_back("lubin_tate(" + std::to_string(n) + ")");
  names.push_back("weil_restriction_gl2");
  names.push_back("gsp4_siegel");
  names.push_back("gl_n_basic(4,2)");
  return names;
}

std::string catalog_file_stem(const std::string& name) {
  std::string out;
  for (char ch : name) {
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
      out += ch;
    } else if (ch == '(' || ch == ',') {
      out += '_';
    }  // ')' and anything else dropped
  }
  return out;
}

}  // namespace pdc
