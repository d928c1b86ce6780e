// Grothendieck-group bookkeeping for induced / generalized-Steinberg symbols.
// Representations are never realized as function spaces; a token is
// (degree, symbol) with an integer multiplicity, where a symbol couples a
// J-side symbol i_{P_I} or v_{P_I} with a finite Galois-orbit symbol and a
// Tate twist.
#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "perdomcoh/rational.hpp"

namespace pdc {

enum class SymbolKind { Induced, Steinberg };  // i_{P_I} vs v_{P_I}

struct GaloisSymbol {
  std::string name;  // reduced word of the canonical orbit representative; "e" for identity
  long long dim = 1; // orbit size = dimension of the induced Galois representation
  auto operator<=>(const GaloisSymbol&) const = default;
};

struct RepSymbol {
  SymbolKind kind = SymbolKind::Induced;
  std::vector<int> subset;  // sorted label indices, I subseteq Delta
  GaloisSymbol galois;
  long long twist = 0;
  auto operator<=>(const RepSymbol&) const = default;
};

// Builds a symbol, normalizing v_{P_Delta} to i_{P_Delta}: both denote the
// trivial J-symbol because the quotient defining v is by an empty sum there.
RepSymbol make_symbol(SymbolKind kind, std::vector<int> subset, int delta_size,
                      GaloisSymbol galois, long long twist);

struct VirtualGradedRep {
  // (degree, symbol) -> multiplicity; zero entries are erased eagerly.
  std::map<std::pair<long long, RepSymbol>, long long> tokens;

  void add(long long degree, const RepSymbol& sym, long long mult);
  VirtualGradedRep& operator+=(const VirtualGradedRep& o);
  VirtualGradedRep& operator-=(const VirtualGradedRep& o);
  bool is_zero() const { return tokens.empty(); }
};

// Inclusion-exclusion expansion v_{P_I} = sum_{I subseteq K subseteq Delta}
// (-1)^{|K \ I|} i_{P_K}, returned as (K, sign) pairs in subset order.
std::vector<std::pair<std::vector<int>, long long>> expand_v(const std::vector<int>& subset,
                                                             int delta_size);

// Moebius inverse: i_{P_I} = sum_{K supseteq I} v_{P_K} (all coefficients +1).
std::vector<std::pair<std::vector<int>, long long>> expand_i_in_v(const std::vector<int>& subset,
                                                                  int delta_size);

// Replaces every Steinberg token by its Induced expansion.
VirtualGradedRep expand_steinberg(const VirtualGradedRep& rep, int delta_size);

// dim Ext^i(v_{P_I}, v_{P_I'}) for a group with center of rank r: with
// d = |I triangle I'| and j = i - d, the dimension is binomial(r, j) when
// d <= i <= r, and 0 otherwise.
long long ext_dimension(const std::vector<int>& I, const std::vector<int>& Iprime, int i, int r);

long long binomial(int n, int k);

// ---- rendering ----

// "v[P_{a1,a2}]", "i[P_{}]", or "triv" when subset == Delta.
std::string steinberg_string(SymbolKind kind, const std::vector<int>& subset,
                             const std::vector<std::string>& delta_labels);

// "ind[e]", "ind[s1*s2]".
std::string galois_string(const GaloisSymbol& g);

// Full token: "v[P_{a1}] ⊗ ind[e] (0)".
std::string symbol_string(const RepSymbol& sym, const std::vector<std::string>& delta_labels);

}  // namespace pdc
