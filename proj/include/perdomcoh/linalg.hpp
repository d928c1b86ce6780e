// Small dense exact linear algebra over Rat: just enough for root data
// (reflection matrices, Gram systems, rank, principal minors).
#pragma once

#include "perdomcoh/rational.hpp"

#include <optional>
#include <vector>

namespace pdc {

using Vec = std::vector<Rat>;

struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;  // row-major

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rat(0)) {}

  static Mat identity(int n);

  Rat& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Mat operator*(const Mat& x, const Mat& y);
Vec operator*(const Mat& m, const Vec& v);

Vec vec_add(const Vec& x, const Vec& y);
Vec vec_sub(const Vec& x, const Vec& y);
Vec vec_scale(const Rat& c, const Vec& x);
bool vec_is_zero(const Vec& x);

// Plain coordinate pairing; used for covector(vector) evaluation.
Rat dot(const Vec& x, const Vec& y);

bool is_symmetric(const Mat& m);
Mat transpose(const Mat& m);
Rat det(Mat m);
int rank(Mat m);

// All leading principal minors strictly positive (Sylvester test).
bool leading_principal_minors_positive(const Mat& m);

// Exact positive-semidefiniteness of a symmetric matrix via pivoted
// Schur-complement elimination.
bool is_positive_semidefinite(Mat m);

// Exact solve of A x = b; nullopt when singular or inconsistent.
std::optional<Vec> solve(Mat A, Vec b);

std::optional<Mat> inverse(const Mat& m);

std::string vec_str(const Vec& v);

}  // namespace pdc
