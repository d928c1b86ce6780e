#include "perdomcoh/linalg.hpp"

#include <cstdlib>
#include <sstream>

namespace pdc {

Rat rat_parse(const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t pos = 0;
      long long n = std::stoll(text, &pos);
      if (pos != text.size()) throw ConfigError("bad rational literal: '" + text + "'");
      return Rat(n);
    }
    std::size_t pn = 0, pd = 0;
    long long n = std::stoll(text.substr(0, slash), &pn);
    long long d = std::stoll(text.substr(slash + 1), &pd);
    if (pn != slash || pd != text.size() - slash - 1 || d == 0)
      throw ConfigError("bad rational literal: '" + text + "'");
    return Rat(n, d);
  } catch (const std::invalid_argument&) {
    throw ConfigError("bad rational literal: '" + text + "'");
  } catch (const std::out_of_range&) {
    throw ConfigError("rational literal out of range: '" + text + "'");
  }
}

std::string rat_str(const Rat& r) {
  if (is_integral(r)) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw ConfigError("matrix size mismatch in product");
  Mat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rat& xik = x.at(i, k);
      if (xik == Rat(0)) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += xik * y.at(k, j);
    }
  return r;
}

Vec operator*(const Mat& m, const Vec& v) {
  if (m.cols != static_cast<int>(v.size())) throw ConfigError("matrix/vector size mismatch");
  Vec r(m.rows, Rat(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * v[j];
  return r;
}

Vec vec_add(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw ConfigError("vector size mismatch");
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

Vec vec_sub(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw ConfigError("vector size mismatch");
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

Vec vec_scale(const Rat& c, const Vec& x) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
  return r;
}

bool vec_is_zero(const Vec& x) {
  for (const Rat& v : x)
    if (v != Rat(0)) return false;
  return true;
}

Rat dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw ConfigError("vector size mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

bool is_symmetric(const Mat& m) {
  if (m.rows != m.cols) return false;
  for (int i = 0; i < m.rows; ++i)
    for (int j = i + 1; j < m.cols; ++j)
      if (m.at(i, j) != m.at(j, i)) return false;
  return true;
}

Mat transpose(const Mat& m) {
  Mat t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

namespace {

// Row-echelon elimination in place. Returns (rank, det-if-square).
std::pair<int, Rat> eliminate(Mat& m) {
  Rat determinant(1);
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != Rat(0)) {
        pivot = i;
        break;
      }
    if (pivot < 0) {
      determinant = Rat(0);
      continue;
    }
    if (pivot != r) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
      determinant = -determinant;
    }
    determinant *= m.at(r, c);
    for (int i = r + 1; i < m.rows; ++i) {
      if (m.at(i, c) == Rat(0)) continue;
      Rat f = m.at(i, c) / m.at(r, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  if (r < m.rows) determinant = Rat(0);
  return {r, determinant};
}

}  // namespace

Rat det(Mat m) {
  if (m.rows != m.cols) throw ConfigError("determinant of non-square matrix");
  return eliminate(m).second;
}

int rank(Mat m) { return eliminate(m).first; }

bool leading_principal_minors_positive(const Mat& m) {
  if (m.rows != m.cols) return false;
  for (int k = 1; k <= m.rows; ++k) {
    Mat sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(i, j);
    if (det(sub) <= Rat(0)) return false;
  }
  return true;
}

bool is_positive_semidefinite(Mat m) {
  if (!is_symmetric(m)) return false;
  int n = m.rows;
  std::vector<bool> done(n, false);
  for (;;) {
    int pivot = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && m.at(i, i) > Rat(0)) {
        pivot = i;
        break;
      }
    if (pivot < 0) break;
    // Schur complement w.r.t. the pivot.
    for (int i = 0; i < n; ++i) {
      if (done[i] || i == pivot) continue;
      Rat f = m.at(i, pivot) / m.at(pivot, pivot);
      for (int j = 0; j < n; ++j) {
        if (done[j] || j == pivot) continue;
        m.at(i, j) -= f * m.at(pivot, j);
      }
    }
    done[pivot] = true;
  }
  // No positive pivots remain: the active block must vanish entirely.
  // (A zero diagonal with a nonzero off-diagonal gives a negative 2x2 minor.)
  for (int i = 0; i < n; ++i) {
    if (done[i]) continue;
    for (int j = 0; j < n; ++j)
      if (!done[j] && m.at(i, j) != Rat(0)) return false;
  }
  return true;
}

std::optional<Vec> solve(Mat A, Vec b) {
  if (A.rows != static_cast<int>(b.size())) throw ConfigError("solve: size mismatch");
  // Augment and eliminate.
  Mat aug(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < A.cols && r < aug.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < aug.rows; ++i)
      if (aug.at(i, c) != Rat(0)) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j <= A.cols; ++j) std::swap(aug.at(pivot, j), aug.at(r, j));
    Rat p = aug.at(r, c);
    for (int j = c; j <= A.cols; ++j) aug.at(r, j) /= p;
    for (int i = 0; i < aug.rows; ++i) {
      if (i == r || aug.at(i, c) == Rat(0)) continue;
      Rat f = aug.at(i, c);
      for (int j = c; j <= A.cols; ++j) aug.at(i, j) -= f * aug.at(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < aug.rows; ++i)
    if (aug.at(i, A.cols) != Rat(0)) return std::nullopt;  // inconsistent
  if (r < A.cols) {
    // Underdetermined: refuse unless the system pins every variable we return.
    // Callers in this project always pass full-column-rank systems.
    return std::nullopt;
  }
  Vec x(A.cols, Rat(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = aug.at(i, A.cols);
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows != m.cols) return std::nullopt;
  int n = m.rows;
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Rat(1);
  }
  int r = 0;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = r; i < n; ++i)
      if (aug.at(i, c) != Rat(0)) {
        pivot = i;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != r)
      for (int j = 0; j < 2 * n; ++j) std::swap(aug.at(pivot, j), aug.at(r, j));
    Rat p = aug.at(r, c);
    for (int j = 0; j < 2 * n; ++j) aug.at(r, j) /= p;
    for (int i = 0; i < n; ++i) {
      if (i == r || aug.at(i, c) == Rat(0)) continue;
      Rat f = aug.at(i, c);
      for (int j = 0; j < 2 * n; ++j) aug.at(i, j) -= f * aug.at(r, j);
    }
    ++r;
  }
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << rat_str(v[i]);
  }
  os << ")";
  return os.str();
}

}  // namespace pdc
