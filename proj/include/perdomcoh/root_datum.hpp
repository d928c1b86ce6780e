// Root data over an ambient rational cocharacter space, with exact Weyl
// group enumeration and dominance-order tests.  All arithmetic is in Rat;
// roots are stored as covectors (functionals on the ambient space) and
// coroots as vectors, so <v, alpha> is the plain coordinate dot product.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "perdomcoh/linalg.hpp"

namespace pdc {

constexpr std::size_t kDefaultWeylCap = 1000000;

struct RootDatum {
  std::string label;        // e.g. "GL(4)", "C2", "explicit"
  int dim = 0;              // ambient space dimension
  std::vector<Vec> roots;   // simple roots as covectors, length = semisimple rank
  std::vector<Vec> coroots; // simple coroots as vectors
  Mat gram;                 // W-invariant symmetric positive-definite form on the ambient space

  int rank() const { return static_cast<int>(roots.size()); }

  // <v, alpha_i> for an ambient vector v.
  Rat pairing(const Vec& v, int i) const { return dot(roots[i], v); }

  // Invariant inner product (x, y) = x^T G y.
  Rat inner(const Vec& x, const Vec& y) const;

  // s_i(v) = v - <v, alpha_i> alpha_i^vee.
  Vec reflect(int i, const Vec& v) const;

  // Matrix of s_i acting on ambient column vectors.
  Mat reflection_matrix(int i) const;

  // Cartan matrix A[i][j] = <alpha_j^vee, alpha_i> ... stored as A.at(i,j) = <alpha_i^vee, alpha_j>.
  Mat cartan() const;
};

struct WeylElement {
  std::vector<int> word;  // reduced word in simple reflection indices (lex-least)
  Mat matrix;             // action on ambient column vectors

  int length() const { return static_cast<int>(word.size()); }
};

struct WeylGroup {
  std::vector<WeylElement> elements;       // sorted by (length, word lex)
  std::map<std::vector<Rat>, int> by_matrix;  // matrix entries (row-major) -> index

  std::size_t size() const { return elements.size(); }
  const WeylElement& identity() const { return elements.front(); }
  int index_of(const Mat& m) const;
  // Index of the product (elements[a].matrix * elements[b].matrix).
  int multiply(int a, int b) const;
};

// Enumerates the full Weyl group by breadth-first closure under right
// multiplication by simple reflections.  Throws CapExceeded past `cap`.
WeylGroup enumerate_weyl(const RootDatum& rd, std::size_t cap = kDefaultWeylCap);

// Coefficients c with y - x = sum_i c_i alpha_i^vee, if that difference lies
// in the coroot span; otherwise nullopt.
std::optional<Vec> coroot_coefficients(const RootDatum& rd, const Vec& x, const Vec& y);

// x <= y in the dominance order: y - x a nonnegative rational combination of
// simple coroots.  False when y - x is outside the coroot span.
bool dominance_leq(const RootDatum& rd, const Vec& x, const Vec& y);

// Quasi-fundamental coweights: vectors omega_j in the coroot span with
// <alpha_i, omega_j> = delta_ij against the simple-root functionals.  (Under
// the invariant form this is delta_ij scaled by (c_i, c_i)/2, so membership
// comparisons are sign-equivalent in either normalization.)
std::vector<Vec> dual_basis_coweights(const RootDatum& rd);

// All positive coroots (closure of simple coroots under the Weyl action).
std::vector<Vec> positive_coroots(const RootDatum& rd, std::size_t cap = kDefaultWeylCap);

// ---- builders ----

// GL_n in its standard n-dimensional ambient space, identity Gram matrix.
RootDatum build_gl(int n);

// Simple types realized on coroot coordinates: coroots are standard basis
// vectors, root functionals are the columns of the Cartan matrix, and the
// Gram matrix is the symmetrized Cartan matrix.  Supported series: A, B, C,
// D (rank >= 2 for B/C, >= 3 for D) and G2, F4.
RootDatum build_classical(char series, int rank_);
RootDatum build_exceptional(const std::string& name);

// Product GL_{n_1} x ... x GL_{n_k} in sum(n_i) coordinates.
RootDatum build_gl_product(const std::vector<int>& ns);

// Fully explicit datum; validates symmetry/positivity of the Gram matrix,
// <alpha_i^vee, alpha_i> = 2, and W-invariance of the form.
RootDatum build_explicit(int dim, std::vector<Vec> roots, std::vector<Vec> coroots, Mat gram,
                         std::string label = "explicit");

// Umbrella: parses "gl(4)", "gl(2)x gl(2)", "A3", "C2", "G2", "F4".
RootDatum build_root_datum(const std::string& type);

}  // namespace pdc
