#include "perdomcoh/kgroup.hpp"

#include <algorithm>

namespace pdc {

namespace {

bool is_full_delta(const std::vector<int>& subset, int delta_size) {
  return static_cast<int>(subset.size()) == delta_size;
}

// All supersets K of `subset` inside {0..delta_size-1}, each with
// (-1)^{|K \ subset|} when signed, in lexicographic subset order.
std::vector<std::pair<std::vector<int>, long long>> supersets(const std::vector<int>& subset,
                                                              int delta_size, bool signed_) {
  std::vector<int> complement;
  for (int a = 0; a < delta_size; ++a)
    if (!std::binary_search(subset.begin(), subset.end(), a)) complement.push_back(a);
  int c = static_cast<int>(complement.size());
  std::vector<std::pair<std::vector<int>, long long>> out;
  out.reserve(std::size_t(1) << c);
  for (unsigned long mask = 0; mask < (1ul << c); ++mask) {
    std::vector<int> k = subset;
    int extra = 0;
    for (int b = 0; b < c; ++b)
      if (mask & (1ul << b)) {
        k.push_back(complement[b]);
        ++extra;
      }
    std::sort(k.begin(), k.end());
    out.emplace_back(std::move(k), signed_ ? ((extra % 2) ? -1 : 1) : 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

RepSymbol make_symbol(SymbolKind kind, std::vector<int> subset, int delta_size,
                      GaloisSymbol galois, long long twist) {
  std::sort(subset.begin(), subset.end());
  RepSymbol sym;
  sym.kind = is_full_delta(subset, delta_size) ? SymbolKind::Induced : kind;
  sym.subset = std::move(subset);
  sym.galois = std::move(galois);
  sym.twist = twist;
  return sym;
}

void VirtualGradedRep::add(long long degree, const RepSymbol& sym, long long mult) {
  if (mult == 0) return;
  auto key = std::make_pair(degree, sym);
  auto it = tokens.find(key);
  if (it == tokens.end()) {
    tokens.emplace(std::move(key), mult);
    return;
  }
  it->second += mult;
  if (it->second == 0) tokens.erase(it);
}

VirtualGradedRep& VirtualGradedRep::operator+=(const VirtualGradedRep& o) {
  if (this == &o) {  // adding a map to itself would mutate mid-iteration
    for (auto& [key, mult] : tokens) mult *= 2;
    return *this;
  }
  for (const auto& [key, mult] : o.tokens) add(key.first, key.second, mult);
  return *this;
}

VirtualGradedRep& VirtualGradedRep::operator-=(const VirtualGradedRep& o) {
  if (this == &o) {
    tokens.clear();
    return *this;
  }
  for (const auto& [key, mult] : o.tokens) add(key.first, key.second, -mult);
  return *this;
}

std::vector<std::pair<std::vector<int>, long long>> expand_v(const std::vector<int>& subset,
                                                             int delta_size) {
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  return supersets(s, delta_size, /*signed_=*/true);
}

std::vector<std::pair<std::vector<int>, long long>> expand_i_in_v(const std::vector<int>& subset,
                                                                  int delta_size) {
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  return supersets(s, delta_size, /*signed_=*/false);
}

VirtualGradedRep expand_steinberg(const VirtualGradedRep& rep, int delta_size) {
  VirtualGradedRep out;
  for (const auto& [key, mult] : rep.tokens) {
    const auto& [degree, sym] = key;
    if (sym.kind == SymbolKind::Induced) {
      out.add(degree, sym, mult);
      continue;
    }
    for (const auto& [k, sign] : expand_v(sym.subset, delta_size))
      out.add(degree, make_symbol(SymbolKind::Induced, k, delta_size, sym.galois, sym.twist),
              sign * mult);
  }
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

long long ext_dimension(const std::vector<int>& I, const std::vector<int>& Iprime, int i, int r) {
  std::vector<int> a = I, b = Iprime;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<int> sym_diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(sym_diff));
  int d = static_cast<int>(sym_diff.size());
  if (i < d || i > r) return 0;
  return binomial(r, i - d);
}

std::string steinberg_string(SymbolKind kind, const std::vector<int>& subset,
                             const std::vector<std::string>& delta_labels) {
  if (subset.size() == delta_labels.size()) return "triv";
  std::string s = (kind == SymbolKind::Induced) ? "i[P_{" : "v[P_{";
  for (std::size_t n = 0; n < subset.size(); ++n) {
    if (n) s += ",";
    s += delta_labels[subset[n]];
  }
  s += "}]";
  return s;
}

std::string galois_string(const GaloisSymbol& g) { return "ind[" + g.name + "]"; }

std::string symbol_string(const RepSymbol& sym, const std::vector<std::string>& delta_labels) {
  std::string s = steinberg_string(sym.kind, sym.subset, delta_labels);
  s += " ⊗ " + galois_string(sym.galois);
  s += " (" + std::to_string(sym.twist) + ")";
  return s;
}

}  // namespace pdc
