#include "perdomcoh/config_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace pdc {

using nlohmann::json;
using nlohmann::ordered_json;

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_number_unsigned()) return Rat(static_cast<long long>(j.get<unsigned long long>()));
  if (j.is_string()) return rat_parse(j.get<std::string>());
  if (j.is_number_float())
    throw ConfigError("floating-point literals are not accepted; write rationals as \"a/b\"");
  throw ConfigError("expected a rational (integer or \"a/b\" string), got " + j.dump());
}

json rat_to_json(const Rat& r) {
  if (is_integral(r)) return json(r.numerator());
  return json(rat_str(r));
}

namespace {

void check_keys(const json& j, const std::string& where, const std::set<std::string>& allowed) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw ConfigError("unknown key '" + it.key() + "' in " + where);
}

Vec vec_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw ConfigError(where + " must be an array of rationals");
  Vec v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

Mat mat_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ConfigError(where + " must be a non-empty matrix");
  Mat m(static_cast<int>(j.size()), static_cast<int>(j.front().size()));
  for (int i = 0; i < m.rows; ++i) {
    Vec row = vec_from_json(j[i], where + " row");
    if (static_cast<int>(row.size()) != m.cols) throw ConfigError(where + " is ragged");
    for (int c = 0; c < m.cols; ++c) m.at(i, c) = row[c];
  }
  return m;
}

ordered_json vec_to_json(const Vec& v) {
  ordered_json a = ordered_json::array();
  for (const Rat& x : v)
    if (is_integral(x))
      a.push_back(x.numerator());
    else
      a.push_back(rat_str(x));
  return a;
}

ordered_json mat_to_json(const Mat& m) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < m.rows; ++i) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < m.cols; ++c)
      if (is_integral(m.at(i, c)))
        row.push_back(m.at(i, c).numerator());
      else
        row.push_back(rat_str(m.at(i, c)));
    a.push_back(std::move(row));
  }
  return a;
}

GaloisAction galois_from_json(const json& j, const std::string& where) {
  check_keys(j, where, {"permutation", "order"});
  GaloisAction g;
  if (j.contains("permutation")) {
    if (!j["permutation"].is_array()) throw ConfigError(where + ".permutation must be an array");
    for (const auto& x : j["permutation"]) {
      if (!x.is_number_integer() && !x.is_number_unsigned())
        throw ConfigError(where + ".permutation entries must be integers");
      g.perm.push_back(x.get<int>());
    }
  }
  g.order = j.value("order", 1);
  if (g.order < 1) throw ConfigError(where + ".order must be >= 1");
  return g;
}

ordered_json galois_to_json(const GaloisAction& g) {
  ordered_json j;
  j["permutation"] = g.perm;
  j["order"] = g.order;
  return j;
}

}  // namespace

ScenarioConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  check_keys(j, "config",
             {"schema", "name", "group", "mu", "slope", "inner_form", "options"});
  ScenarioConfig c;
  std::string schema = j.value("schema", "");
  if (schema != "perdomcoh-config/1")
    throw ConfigError("unsupported or missing schema (want \"perdomcoh-config/1\")");
  c.name = j.value("name", "");

  if (!j.contains("group")) throw ConfigError("config needs a \"group\" object");
  const json& jg = j["group"];
  check_keys(jg, "group",
             {"type", "galois", "e_level", "dimension", "simple_roots", "simple_coroots",
              "inner_product"});
  c.group.type = jg.value("type", "");
  if (c.group.type.empty()) throw ConfigError("group.type is required");
  if (jg.contains("galois")) c.group.galois = galois_from_json(jg["galois"], "group.galois");
  if (jg.contains("e_level")) {
    if (!jg["e_level"].is_array()) throw ConfigError("group.e_level must be an array");
    for (const auto& x : jg["e_level"])
      c.group.e_level.push_back(galois_from_json(x, "group.e_level[]"));
  }
  if (c.group.type == "explicit") {
    if (!jg.contains("dimension") || !jg.contains("simple_roots") ||
        !jg.contains("simple_coroots") || !jg.contains("inner_product"))
      throw ConfigError(
          "explicit group needs dimension, simple_roots, simple_coroots, inner_product");
    c.group.dimension = jg["dimension"].get<int>();
    for (const auto& r : jg["simple_roots"])
      c.group.simple_roots.push_back(vec_from_json(r, "simple_roots[]"));
    for (const auto& r : jg["simple_coroots"])
      c.group.simple_coroots.push_back(vec_from_json(r, "simple_coroots[]"));
    c.group.inner_product = mat_from_json(jg["inner_product"], "inner_product");
  }

  if (!j.contains("mu")) throw ConfigError("config needs \"mu\"");
  c.mu = vec_from_json(j["mu"], "mu");

  if (!j.contains("slope")) throw ConfigError("config needs \"slope\"");
  const json& js = j["slope"];
  if (!js.is_object()) throw ConfigError("slope must be an object");
  if (js.contains("builtin")) {
    check_keys(js, "slope", {"builtin", "k"});
    if (js["builtin"].get<std::string>() != "gl_basic")
      throw ConfigError("unknown slope builtin '" + js["builtin"].get<std::string>() + "'");
    c.slope.builtin_gl_basic = true;
    c.slope.k = js.value("k", 0);
  } else {
    check_keys(js, "slope", {"nu", "s"});
    if (!js.contains("nu")) throw ConfigError("explicit slope needs \"nu\"");
    c.slope.nu = vec_from_json(js["nu"], "slope.nu");
    c.slope.s = js.value("s", 1);
    if (c.slope.s < 1) throw ConfigError("slope.s must be >= 1");
  }

  if (!j.contains("inner_form")) throw ConfigError("config needs \"inner_form\"");
  const json& jf = j["inner_form"];
  if (jf.is_string()) {
    std::string kind = jf.get<std::string>();
    if (kind == "split") {
      c.inner_form.kind = InnerFormConfig::Kind::Split;
    } else if (kind == "gl_basic") {
      c.inner_form.kind = InnerFormConfig::Kind::GlBasic;
    } else {
      throw ConfigError("unknown inner_form '" + kind + "'");
    }
  } else if (jf.is_object()) {
    check_keys(jf, "inner_form", {"delta", "relative_roots", "omegas", "center_rank"});
    c.inner_form.kind = InnerFormConfig::Kind::Explicit;
    if (!jf.contains("delta") || !jf.contains("relative_roots") || !jf.contains("omegas") ||
        !jf.contains("center_rank"))
      throw ConfigError("explicit inner_form needs delta, relative_roots, omegas, center_rank");
    for (const auto& s : jf["delta"])
      c.inner_form.data.delta.push_back(s.get<std::string>());
    for (const auto& r : jf["relative_roots"])
      c.inner_form.data.relative_roots.push_back(vec_from_json(r, "relative_roots[]"));
    for (const auto& r : jf["omegas"])
      c.inner_form.data.omegas.push_back(vec_from_json(r, "omegas[]"));
    c.inner_form.data.center_rank = jf["center_rank"].get<int>();
  } else {
    throw ConfigError("inner_form must be \"split\", \"gl_basic\", or an object");
  }

  if (j.contains("options")) {
    const json& jo = j["options"];
    check_keys(jo, "options", {"checks", "pages", "euler", "format", "cap"});
    c.options.checks = jo.value("checks", false);
    c.options.pages = jo.value("pages", false);
    c.options.euler = jo.value("euler", false);
    c.options.format = jo.value("format", "text");
    if (jo.contains("cap")) {
      long long cap = jo["cap"].get<long long>();
      if (cap < 1) throw ConfigError("options.cap must be >= 1");
      c.options.cap = static_cast<std::size_t>(cap);
    }
  }
  if (c.options.format != "text" && c.options.format != "json" && c.options.format != "csv")
    throw ConfigError("options.format must be text, json, or csv");
  return c;
}

ScenarioConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("JSON parse error: ") + e.what());
  }
  return parse_config(j);
}

ScenarioConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

ordered_json config_to_json(const ScenarioConfig& c) {
  ordered_json j;
  j["schema"] = "perdomcoh-config/1";
  if (!c.name.empty()) j["name"] = c.name;
  ordered_json jg;
  jg["type"] = c.group.type;
  if (!c.group.galois.perm.empty() || c.group.galois.order != 1)
    jg["galois"] = galois_to_json(c.group.galois);
  if (!c.group.e_level.empty()) {
    ordered_json arr = ordered_json::array();
    for (const auto& g : c.group.e_level) arr.push_back(galois_to_json(g));
    jg["e_level"] = std::move(arr);
  }
  if (c.group.type == "explicit") {
    jg["dimension"] = c.group.dimension;
    ordered_json roots = ordered_json::array(), coroots = ordered_json::array();
    for (const auto& r : c.group.simple_roots) roots.push_back(vec_to_json(r));
    for (const auto& r : c.group.simple_coroots) coroots.push_back(vec_to_json(r));
    jg["simple_roots"] = std::move(roots);
    jg["simple_coroots"] = std::move(coroots);
    jg["inner_product"] = mat_to_json(c.group.inner_product);
  }
  j["group"] = std::move(jg);
  j["mu"] = vec_to_json(c.mu);
  ordered_json js;
  if (c.slope.builtin_gl_basic) {
    js["builtin"] = "gl_basic";
    js["k"] = c.slope.k;
  } else {
    js["nu"] = vec_to_json(c.slope.nu);
    js["s"] = c.slope.s;
  }
  j["slope"] = std::move(js);
  switch (c.inner_form.kind) {
    case InnerFormConfig::Kind::Split:
      j["inner_form"] = "split";
      break;
    case InnerFormConfig::Kind::GlBasic:
      j["inner_form"] = "gl_basic";
      break;
    case InnerFormConfig::Kind::Explicit: {
      ordered_json jf;
      jf["delta"] = c.inner_form.data.delta;
      ordered_json roots = ordered_json::array(), omegas = ordered_json::array();
      for (const auto& r : c.inner_form.data.relative_roots) roots.push_back(vec_to_json(r));
      for (const auto& r : c.inner_form.data.omegas) omegas.push_back(vec_to_json(r));
      jf["relative_roots"] = std::move(roots);
      jf["omegas"] = std::move(omegas);
      jf["center_rank"] = c.inner_form.data.center_rank;
      j["inner_form"] = std::move(jf);
      break;
    }
  }
  ordered_json jo;
  jo["checks"] = c.options.checks;
  jo["pages"] = c.options.pages;
  jo["euler"] = c.options.euler;
  jo["format"] = c.options.format;
  jo["cap"] = static_cast<long long>(c.options.cap);
  j["options"] = std::move(jo);
  return j;
}

namespace {

bool is_single_gl(const std::string& type, int* n_out) {
  // Accepts "gl(N)" / "GL(N)" with no product factor.
  std::string t;
  for (char ch : type)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.size() < 5) return false;
  if (t.compare(0, 3, "gl(") != 0 && t.compare(0, 3, "GL(") != 0) return false;
  if (t.back() != ')') return false;
  std::string num = t.substr(3, t.size() - 4);
  if (num.empty()) return false;
  for (char ch : num)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  if (n_out) *n_out = std::stoi(num);
  return true;
}

}  // namespace

PeriodDatum realize(const ScenarioConfig& c) {
  PeriodDatum d;
  if (c.group.type == "explicit") {
    d.root = build_explicit(c.group.dimension, c.group.simple_roots, c.group.simple_coroots,
                            c.group.inner_product);
  } else {
    d.root = build_root_datum(c.group.type);
  }
  d.galois = c.group.galois.normalized(d.root.dim);
  for (const auto& g : c.group.e_level) d.e_level.push_back(g.normalized(d.root.dim));
  d.cochar.mu = c.mu;

  int gl_n = 0;
  bool single_gl = is_single_gl(c.group.type, &gl_n);
  if (c.slope.builtin_gl_basic) {
    if (!single_gl)
      throw ConfigError("the gl_basic slope builtin requires a single gl(n) group");
    auto [slope, inner] = builtin_J_gl_basic(gl_n, c.slope.k);
    d.slope = std::move(slope);
    if (c.inner_form.kind == InnerFormConfig::Kind::GlBasic) d.inner = std::move(inner);
  } else {
    d.slope.nu = c.slope.nu;
    d.slope.s = c.slope.s;
  }

  switch (c.inner_form.kind) {
    case InnerFormConfig::Kind::Split:
      d.inner = builtin_J_split(d.root, d.galois);
      break;
    case InnerFormConfig::Kind::GlBasic: {
      if (!c.slope.builtin_gl_basic)
        throw ConfigError("inner_form \"gl_basic\" requires the matching slope builtin");
      // already installed above
      break;
    }
    case InnerFormConfig::Kind::Explicit:
      d.inner = c.inner_form.data;
      break;
  }
  return d;
}

}  // namespace pdc
