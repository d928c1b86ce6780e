#include "perdomcoh/report.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <map>
#include <sstream>

namespace pdc {

using nlohmann::ordered_json;

std::string config_hash(const ScenarioConfig& c) {
  const std::string dump = config_to_json(c).dump();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : dump) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

namespace {

ordered_json validation_json(const ValidationReport& r) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["informational"] = c.informational;
    e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  return arr;
}

std::vector<std::string> subset_labels(const std::vector<int>& subset,
                                       const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (int i : subset) out.push_back(labels[i]);
  return out;
}

void write_header(ordered_json& j, const ScenarioConfig& cfg) {
  j["schema"] = "perdomcoh-report/1";
  j["tool"] = kToolVersion;
  j["config_hash"] = config_hash(cfg);
  j["scenario"] = cfg.name;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> string_array(const ordered_json& arr) {
  std::vector<std::string> out;
  for (const auto& x : arr) out.push_back(x.get<std::string>());
  return out;
}

std::string pad_right(const std::string& s, std::size_t w) {
  return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
}

std::string pad_left(const std::string& s, std::size_t w) {
  return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
}

}  // namespace

ResultReport build_report(const ScenarioConfig& cfg, const EngineContext& ctx,
                          const RunOptions& opts) {
  ResultReport rep;
  ordered_json& j = rep.j;
  write_header(j, cfg);
  j["status"] = ctx.non_empty ? "ok" : "empty_domain";
  j["group"] = ctx.root().label;
  j["delta"] = ctx.datum.inner.delta;
  j["center_rank"] = ctx.datum.inner.center_rank;
  j["weyl_order"] = static_cast<long long>(ctx.weyl.size());
  j["kostant_count"] = static_cast<long long>(ctx.kostant.elements.size());
  j["orbit_count"] = static_cast<long long>(ctx.orbits.size());
  j["non_empty"] = ctx.non_empty;
  j["validation"] = validation_json(ctx.report);
  if (!ctx.non_empty) return rep;

  const std::vector<std::string>& labels = ctx.datum.inner.delta;
  const auto summands = compute_cohomology(ctx);
  ordered_json sarr = ordered_json::array();
  for (const auto& s : summands) {
    ordered_json e;
    e["degree"] = s.degree;
    e["tate_twist"] = s.tate_twist;
    e["steinberg_symbol"] =
        steinberg_string(SymbolKind::Steinberg, s.parabolic_subset, labels);
    e["parabolic_subset"] = subset_labels(s.parabolic_subset, labels);
    e["galois_orbit_rep"] = ctx.word_string(ctx.orbits[s.orbit_index].rep);
    e["galois_dim"] = s.galois_dim;
    e["orbit_length"] = s.orbit_length;
    sarr.push_back(std::move(e));
  }
  j["summands"] = std::move(sarr);

  if (opts.euler) {
    std::map<long long, long long> by_degree;
    long long chi = 0;
    for (const auto& s : summands) {
      by_degree[s.degree] += s.galois_dim;
      chi += (s.degree % 2 == 0 ? 1 : -1) * s.galois_dim;
    }
    ordered_json je;
    je["euler_characteristic"] = chi;
    ordered_json rows = ordered_json::array();
    for (const auto& [deg, dim] : by_degree) rows.push_back({deg, dim});
    je["poincare"] = std::move(rows);
    j["euler"] = std::move(je);
  }

  if (opts.pages) {
    auto page_json = [&](const SpectralPage& page) {
      ordered_json rows = ordered_json::array();
      for (const auto& e : page.entries) {
        ordered_json row;
        row["p"] = e.p;
        row["q"] = e.q;
        row["orbit_rep"] = ctx.word_string(ctx.orbits[e.orbit_index].rep);
        row["subset"] = subset_labels(e.subset, labels);
        row["symbol"] = symbol_string(e.symbol, labels);
        rows.push_back(std::move(row));
      }
      return rows;
    };
    ordered_json jp;
    jp["e1"] = page_json(e1_page(ctx));
    jp["e2"] = page_json(e2_page(ctx));
    j["pages"] = std::move(jp);
  }

  if (opts.checks) {
    ordered_json jc;
    ordered_json results = ordered_json::array();
    std::vector<SplittingPair> pairs;
    for (const auto& c : run_engine_checks(ctx)) {
      ordered_json e;
      e["name"] = c.name;
      e["passed"] = c.passed;
      e["detail"] = c.detail;
      results.push_back(std::move(e));
    }
    splitting_check(ctx, &pairs);
    jc["results"] = std::move(results);
    ordered_json parr = ordered_json::array();
    for (const auto& p : pairs) {
      ordered_json e;
      e["orbit_a"] = ctx.word_string(ctx.orbits[p.orbit_a].rep);
      e["orbit_b"] = ctx.word_string(ctx.orbits[p.orbit_b].rep);
      e["degree"] = p.degree;
      e["critical"] = p.critical;
      e["size_gap"] = p.size_gap;
      e["ext1"] = p.ext1;
      e["passed"] = p.passed;
      parr.push_back(std::move(e));
    }
    jc["splitting_pairs"] = std::move(parr);
    const int n = ctx.delta_size();
    const int r = ctx.datum.inner.center_rank;
    if (n <= 3) {
      ordered_json table = ordered_json::array();
      for (int ma = 0; ma < (1 << n); ++ma) {
        std::vector<int> I;
        for (int i = 0; i < n; ++i)
          if (ma & (1 << i)) I.push_back(i);
        for (int mb = 0; mb < (1 << n); ++mb) {
          std::vector<int> Ip;
          for (int i = 0; i < n; ++i)
            if (mb & (1 << i)) Ip.push_back(i);
          ordered_json row;
          row["I"] = subset_labels(I, labels);
          row["I_prime"] = subset_labels(Ip, labels);
          ordered_json dims = ordered_json::array();
          for (int i = 0; i <= r + 2; ++i) dims.push_back(ext_dimension(I, Ip, i, r));
          row["dims"] = std::move(dims);
          table.push_back(std::move(row));
        }
      }
      jc["ext_table"] = std::move(table);
    }
    j["checks"] = std::move(jc);
  }
  return rep;
}

ResultReport build_failure_report(const ScenarioConfig& cfg, const ValidationReport& report) {
  ResultReport rep;
  write_header(rep.j, cfg);
  rep.j["status"] = "invalid";
  rep.j["non_empty"] = report.non_empty;
  rep.j["validation"] = validation_json(report);
  return rep;
}

std::string ResultReport::render_json() const { return j.dump(2) + "\n"; }

std::string ResultReport::render_csv() const {
  std::ostringstream out;
  out << "degree,tate_twist,steinberg_symbol,parabolic_subset,galois_orbit_rep,"
         "galois_dim,orbit_length\n";
  if (!j.contains("summands")) return out.str();
  for (const auto& s : j["summands"]) {
    out << s["degree"].get<long long>() << ',' << s["tate_twist"].get<long long>() << ','
        << s["steinberg_symbol"].get<std::string>() << ','
        << join(string_array(s["parabolic_subset"]), "|") << ','
        << s["galois_orbit_rep"].get<std::string>() << ','
        << s["galois_dim"].get<long long>() << ',' << s["orbit_length"].get<long long>()
        << '\n';
  }
  return out.str();
}

std::string ResultReport::render_text() const {
  std::ostringstream out;
  out << j["tool"].get<std::string>() << "\n";
  if (!j["scenario"].get<std::string>().empty())
    out << "scenario: " << j["scenario"].get<std::string>() << "\n";
  if (j.contains("group")) {
    out << "group: " << j["group"].get<std::string>() << "  delta: {"
        << join(string_array(j["delta"]), ",") << "}  center rank: "
        << j["center_rank"].get<long long>() << "\n";
    out << "weyl order: " << j["weyl_order"].get<long long>()
        << "  kostant set: " << j["kostant_count"].get<long long>()
        << "  galois orbits: " << j["orbit_count"].get<long long>() << "\n";
  }
  out << "config hash: " << j["config_hash"].get<std::string>() << "\n";
  out << "status: " << j["status"].get<std::string>() << "\n";

  out << "\nvalidation checks\n";
  std::size_t name_w = 0;
  for (const auto& c : j["validation"])
    name_w = std::max(name_w, c["name"].get<std::string>().size());
  for (const auto& c : j["validation"]) {
    const bool passed = c["passed"].get<bool>();
    const bool info = c["informational"].get<bool>();
    const std::string status = passed ? "pass" : (info ? "warn" : "FAIL");
    out << "  " << pad_right(status, 5) << pad_right(c["name"].get<std::string>(), name_w + 2)
        << c["detail"].get<std::string>() << "\n";
  }

  if (j["status"].get<std::string>() == "empty_domain") {
    out << "\nthe period domain is empty; no cohomology computed\n";
    return out.str();
  }
  if (!j.contains("summands")) return out.str();

  const auto& summands = j["summands"];
  out << "\ncompactly supported cohomology (" << summands.size() << " summands)\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"degree", "twist", "symbol", "I", "galois", "dim", "length"});
  for (const auto& s : summands) {
    rows.push_back({std::to_string(s["degree"].get<long long>()),
                    std::to_string(s["tate_twist"].get<long long>()),
                    s["steinberg_symbol"].get<std::string>(),
                    "{" + join(string_array(s["parabolic_subset"]), ",") + "}",
                    "ind[" + s["galois_orbit_rep"].get<std::string>() + "]",
                    std::to_string(s["galois_dim"].get<long long>()),
                    std::to_string(s["orbit_length"].get<long long>())});
  }
  std::vector<std::size_t> width(7, 0);
  for (const auto& r : rows)
    for (int c = 0; c < 7; ++c) width[c] = std::max(width[c], r[c].size());
  const bool right[7] = {true, true, false, false, false, true, true};
  for (const auto& r : rows) {
    out << " ";
    for (int c = 0; c < 7; ++c)
      out << "  " << (right[c] ? pad_left(r[c], width[c]) : pad_right(r[c], width[c]));
    out << "\n";
  }

  if (j.contains("euler")) {
    out << "\neuler characteristic: " << j["euler"]["euler_characteristic"].get<long long>()
        << "\n";
    for (const auto& row : j["euler"]["poincare"])
      out << "  degree " << row[0].get<long long>() << ": dim " << row[1].get<long long>()
          << "\n";
  }

  if (j.contains("pages")) {
    for (const char* key : {"e1", "e2"}) {
      out << "\n" << (key[1] == '1' ? "E1" : "E2") << " page\n";
      if (j["pages"][key].empty()) out << "  (no entries)\n";
      for (const auto& e : j["pages"][key])
        out << "  (p,q)=(" << e["p"].get<int>() << "," << e["q"].get<long long>()
            << ")  orbit " << pad_right(e["orbit_rep"].get<std::string>(), 9)
            << e["symbol"].get<std::string>() << "\n";
    }
  }

  if (j.contains("checks")) {
    out << "\nconsistency checks\n";
    std::size_t w = 0;
    for (const auto& c : j["checks"]["results"])
      w = std::max(w, c["name"].get<std::string>().size());
    for (const auto& c : j["checks"]["results"])
      out << "  " << pad_right(c["passed"].get<bool>() ? "pass" : "FAIL", 5)
          << pad_right(c["name"].get<std::string>(), w + 2) << c["detail"].get<std::string>()
          << "\n";
    out << "\nsplitting pairs\n";
    if (j["checks"]["splitting_pairs"].empty()) out << "  (none)\n";
    for (const auto& p : j["checks"]["splitting_pairs"])
      out << "  " << p["orbit_a"].get<std::string>() << " vs "
          << p["orbit_b"].get<std::string>() << "  degree " << p["degree"].get<long long>()
          << (p["critical"].get<bool>() ? "  critical" : "") << "  gap "
          << p["size_gap"].get<int>() << "  ext1 " << p["ext1"].get<long long>() << "  "
          << (p["passed"].get<bool>() ? "pass" : "FAIL") << "\n";
    if (j["checks"].contains("ext_table")) {
      out << "\next dimensions (columns i = 0..r+2)\n";
      for (const auto& row : j["checks"]["ext_table"]) {
        out << "  I={" << join(string_array(row["I"]), ",") << "} I'={"
            << join(string_array(row["I_prime"]), ",") << "} :";
        for (const auto& d : row["dims"]) out << " " << d.get<long long>();
        out << "\n";
      }
    }
  }
  return out.str();
}

std::string ResultReport::render(const std::string& format) const {
  if (format == "json") return render_json();
  if (format == "csv") return render_csv();
  return render_text();
}

}  // namespace pdc
