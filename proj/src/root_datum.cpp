#include "perdomcoh/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>

namespace pdc {

Rat RootDatum::inner(const Vec& x, const Vec& y) const { return dot(x, gram * y); }

Vec RootDatum::reflect(int i, const Vec& v) const {
  return vec_sub(v, vec_scale(pairing(v, i), coroots[i]));
}

Mat RootDatum::reflection_matrix(int i) const {
  Mat m = Mat::identity(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m.at(r, c) -= coroots[i][r] * roots[i][c];
  return m;
}

Mat RootDatum::cartan() const {
  Mat a(rank(), rank());
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) a.at(i, j) = dot(roots[j], coroots[i]);
  return a;
}

int WeylGroup::index_of(const Mat& m) const {
  auto it = by_matrix.find(m.a);
  if (it == by_matrix.end()) throw ConfigError("matrix is not a Weyl group element");
  return it->second;
}

int WeylGroup::multiply(int a, int b) const {
  return index_of(elements[a].matrix * elements[b].matrix);
}

WeylGroup enumerate_weyl(const RootDatum& rd, std::size_t cap) {
  WeylGroup w;
  std::map<std::vector<Rat>, std::vector<int>> seen;  // matrix -> lex-least word found
  std::deque<std::pair<Mat, std::vector<int>>> queue;
  Mat id = Mat::identity(rd.dim);
  seen.emplace(id.a, std::vector<int>{});
  queue.emplace_back(id, std::vector<int>{});
  std::vector<Mat> gens;
  gens.reserve(rd.rank());
  for (int i = 0; i < rd.rank(); ++i) gens.push_back(rd.reflection_matrix(i));
  while (!queue.empty()) {
    auto [m, word] = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rd.rank(); ++i) {
      Mat next = m * gens[i];
      if (seen.count(next.a)) continue;
      std::vector<int> next_word = word;
      next_word.push_back(i);
      if (seen.size() >= cap)
        throw CapExceeded("Weyl group enumeration exceeded cap of " + std::to_string(cap));
      seen.emplace(next.a, next_word);
      queue.emplace_back(std::move(next), std::move(next_word));
    }
  }
  w.elements.reserve(seen.size());
  for (auto& [mat_entries, word] : seen) {
    WeylElement e;
    e.word = word;
    e.matrix = Mat(rd.dim, rd.dim);
    e.matrix.a = mat_entries;
    w.elements.push_back(std::move(e));
  }
  std::sort(w.elements.begin(), w.elements.end(), [](const WeylElement& x, const WeylElement& y) {
    if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
    return x.word < y.word;
  });
  for (std::size_t i = 0; i < w.elements.size(); ++i)
    w.by_matrix.emplace(w.elements[i].matrix.a, static_cast<int>(i));
  return w;
}

std::optional<Vec> coroot_coefficients(const RootDatum& rd, const Vec& x, const Vec& y) {
  Vec d = vec_sub(y, x);
  if (rd.rank() == 0) {
    if (vec_is_zero(d)) return Vec{};
    return std::nullopt;
  }
  // Solve the Gram system (sum_j c_j alpha_j^vee, alpha_i^vee) = (d, alpha_i^vee),
  // then confirm the reconstruction equals d exactly (rules out components of d
  // orthogonal to, but outside, the coroot span only when reconstruction fails).
  int r = rd.rank();
  Mat m(r, r);
  Vec b(r, Rat(0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) m.at(i, j) = rd.inner(rd.coroots[j], rd.coroots[i]);
    b[i] = rd.inner(d, rd.coroots[i]);
  }
  auto c = solve(m, b);
  if (!c) return std::nullopt;
  Vec recon(rd.dim, Rat(0));
  for (int j = 0; j < r; ++j) recon = vec_add(recon, vec_scale((*c)[j], rd.coroots[j]));
  if (recon != d) return std::nullopt;
  return c;
}

bool dominance_leq(const RootDatum& rd, const Vec& x, const Vec& y) {
  auto c = coroot_coefficients(rd, x, y);
  if (!c) return false;
  for (const Rat& v : *c)
    if (v < Rat(0)) return false;
  return true;
}

std::vector<Vec> dual_basis_coweights(const RootDatum& rd) {
  // omega_j = sum_k t_k alpha_k^vee with <omega_j, alpha_i> = delta_ij, i.e.
  // sum_k C(k,i) t_k = delta_ij where C is the Cartan matrix; solvable since
  // the simple roots are linearly independent on the coroot span.
  int r = rd.rank();
  Mat ct = transpose(rd.cartan());
  std::vector<Vec> omegas;
  omegas.reserve(r);
  for (int j = 0; j < r; ++j) {
    Vec b(r, Rat(0));
    b[j] = Rat(1);
    auto t = solve(ct, b);
    if (!t) throw ConfigError("Cartan matrix is singular");
    Vec omega(rd.dim, Rat(0));
    for (int k = 0; k < r; ++k) omega = vec_add(omega, vec_scale((*t)[k], rd.coroots[k]));
    omegas.push_back(std::move(omega));
  }
  return omegas;
}

std::vector<Vec> positive_coroots(const RootDatum& rd, std::size_t cap) {
  std::set<std::vector<Rat>> all;
  std::deque<Vec> queue;
  for (const Vec& c : rd.coroots) {
    if (all.insert(c).second) queue.push_back(c);
  }
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rd.rank(); ++i) {
      Vec next = rd.reflect(i, v);
      if (all.size() >= 2 * cap) throw CapExceeded("coroot closure exceeded cap");
      if (all.insert(next).second) queue.push_back(next);
    }
  }
  // Positivity: nonneg coordinates in the simple-coroot basis.
  std::vector<Vec> pos;
  for (const auto& entries : all) {
    Vec v = entries;
    auto c = coroot_coefficients(rd, Vec(rd.dim, Rat(0)), v);
    if (!c) continue;
    bool nonneg = true, nonzero = false;
    for (const Rat& x : *c) {
      if (x < Rat(0)) nonneg = false;
      if (x != Rat(0)) nonzero = true;
    }
    if (nonneg && nonzero) pos.push_back(v);
  }
  std::sort(pos.begin(), pos.end());
  return pos;
}

// ---- builders ----

RootDatum build_gl(int n) {
  if (n < 1) throw ConfigError("gl(n) needs n >= 1");
  RootDatum rd;
  rd.label = "gl(" + std::to_string(n) + ")";
  rd.dim = n;
  rd.gram = Mat::identity(n);
  for (int i = 0; i + 1 < n; ++i) {
    Vec root(n, Rat(0)), coroot(n, Rat(0));
    root[i] = Rat(1);
    root[i + 1] = Rat(-1);
    coroot[i] = Rat(1);
    coroot[i + 1] = Rat(-1);
    rd.roots.push_back(std::move(root));
    rd.coroots.push_back(std::move(coroot));
  }
  return rd;
}

namespace {

// Cartan matrices with A.at(i,j) = <alpha_i^vee, alpha_j>.
Mat cartan_for(char series, int n) {
  Mat a(n, n);
  for (int i = 0; i < n; ++i) a.at(i, i) = Rat(2);
  auto link = [&](int i, int j, long long down, long long up) {
    a.at(i, j) = Rat(down);  // <alpha_i^vee, alpha_j>
    a.at(j, i) = Rat(up);
  };
  switch (series) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case 'B':  // alpha_n short: <alpha_{n-1}^vee, alpha_n> = -2
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      if (n >= 2) link(n - 2, n - 1, -2, -1);
      break;
    case 'C':  // alpha_n long: <alpha_{n-1}^vee, alpha_n> = -1, reverse -2
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      if (n >= 2) link(n - 2, n - 1, -1, -2);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      if (n >= 3) link(n - 3, n - 1, -1, -1);
      break;
    case 'G':
      link(0, 1, -3, -1);
      break;
    case 'F':
      link(0, 1, -1, -1);
      link(1, 2, -2, -1);
      link(2, 3, -1, -1);
      break;
    default:
      throw ConfigError(std::string("unknown series '") + series + "'");
  }
  return a;
}

RootDatum from_cartan(const std::string& label, const Mat& a) {
  int n = a.rows;
  // Symmetrizer c with a.at(i,j) c_j = a.at(j,i) c_i; minimal positive integers
  // per connected component.
  std::vector<Rat> c(n, Rat(0));
  for (int start = 0; start < n; ++start) {
    if (c[start] != Rat(0)) continue;
    c[start] = Rat(1);
    std::deque<int> q{start};
    while (!q.empty()) {
      int i = q.front();
      q.pop_front();
      for (int j = 0; j < n; ++j) {
        if (j == i || a.at(i, j) == Rat(0) || c[j] != Rat(0)) continue;
        c[j] = c[i] * a.at(j, i) / a.at(i, j);
        q.push_back(j);
      }
    }
  }
  // Rescale so the smallest symmetrizer entry is 1.
  Rat min_c = c.empty() ? Rat(1) : c[0];
  for (const Rat& x : c) min_c = std::min(min_c, x);
  for (Rat& x : c) x /= min_c;

  RootDatum rd;
  rd.label = label;
  rd.dim = n;
  rd.gram = Mat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rd.gram.at(i, j) = a.at(i, j) * c[j];
  if (!is_symmetric(rd.gram)) throw ConfigError("Cartan matrix is not symmetrizable");
  for (int i = 0; i < n; ++i) {
    Vec coroot(n, Rat(0));
    coroot[i] = Rat(1);
    Vec root(n, Rat(0));
    for (int k = 0; k < n; ++k) root[k] = a.at(k, i);  // <alpha_k^vee, alpha_i>
    rd.coroots.push_back(std::move(coroot));
    rd.roots.push_back(std::move(root));
  }
  return rd;
}

}  // namespace

RootDatum build_classical(char series, int rank_) {
  if (rank_ < 1) throw ConfigError("rank must be >= 1");
  if ((series == 'B' || series == 'C') && rank_ < 2)
    throw ConfigError("B/C series needs rank >= 2");
  if (series == 'D' && rank_ < 3) throw ConfigError("D series needs rank >= 3");
  return from_cartan(std::string(1, series) + std::to_string(rank_), cartan_for(series, rank_));
}

RootDatum build_exceptional(const std::string& name) {
  if (name == "G2") return from_cartan("G2", cartan_for('G', 2));
  if (name == "F4") return from_cartan("F4", cartan_for('F', 4));
  throw ConfigError("unknown exceptional type '" + name + "'");
}

RootDatum build_gl_product(const std::vector<int>& ns) {
  if (ns.empty()) throw ConfigError("empty GL product");
  int total = 0;
  for (int n : ns) {
    if (n < 1) throw ConfigError("gl(n) needs n >= 1");
    total += n;
  }
  RootDatum rd;
  rd.dim = total;
  rd.gram = Mat::identity(total);
  std::string label;
  int offset = 0;
  for (std::size_t b = 0; b < ns.size(); ++b) {
    if (b) label += "x";
    label += "gl(" + std::to_string(ns[b]) + ")";
    for (int i = 0; i + 1 < ns[b]; ++i) {
      Vec root(total, Rat(0)), coroot(total, Rat(0));
      root[offset + i] = Rat(1);
      root[offset + i + 1] = Rat(-1);
      coroot[offset + i] = Rat(1);
      coroot[offset + i + 1] = Rat(-1);
      rd.roots.push_back(std::move(root));
      rd.coroots.push_back(std::move(coroot));
    }
    offset += ns[b];
  }
  rd.label = label;
  return rd;
}

RootDatum build_explicit(int dim, std::vector<Vec> roots, std::vector<Vec> coroots, Mat gram,
                         std::string label) {
  if (roots.size() != coroots.size()) throw ConfigError("roots/coroots count mismatch");
  RootDatum rd;
  rd.label = std::move(label);
  rd.dim = dim;
  rd.roots = std::move(roots);
  rd.coroots = std::move(coroots);
  rd.gram = std::move(gram);
  if (rd.gram.rows != dim || rd.gram.cols != dim) throw ConfigError("Gram matrix size mismatch");
  if (!is_symmetric(rd.gram)) throw ConfigError("Gram matrix must be symmetric");
  if (!is_positive_semidefinite(rd.gram))
    throw ConfigError("Gram matrix must be positive semidefinite");
  for (int i = 0; i < rd.rank(); ++i) {
    if (static_cast<int>(rd.roots[i].size()) != dim ||
        static_cast<int>(rd.coroots[i].size()) != dim)
      throw ConfigError("root/coroot dimension mismatch");
    if (dot(rd.roots[i], rd.coroots[i]) != Rat(2))
      throw ConfigError("<alpha_i^vee, alpha_i> must equal 2 (index " + std::to_string(i) + ")");
    // alpha functional must match the form: <v, alpha_i> = 2 (v, a_i^vee)/(a_i^vee, a_i^vee).
    Vec metric_root = vec_scale(Rat(2) / rd.inner(rd.coroots[i], rd.coroots[i]),
                                rd.gram * rd.coroots[i]);
    if (metric_root != rd.roots[i])
      throw ConfigError("root functional " + std::to_string(i) +
                        " is not metric-dual to its coroot");
  }
  // Positive definiteness on the coroot span.
  Mat cg(rd.rank(), rd.rank());
  for (int i = 0; i < rd.rank(); ++i)
    for (int j = 0; j < rd.rank(); ++j) cg.at(i, j) = rd.inner(rd.coroots[i], rd.coroots[j]);
  if (rd.rank() > 0 && !leading_principal_minors_positive(cg))
    throw ConfigError("Gram matrix must be positive definite on the coroot span");
  // Finite-type generalized Cartan matrix: integral, diagonal 2 (above),
  // off-diagonal <= 0, positive leading minors.
  Mat cartan = rd.cartan();
  for (int i = 0; i < rd.rank(); ++i)
    for (int j = 0; j < rd.rank(); ++j) {
      if (!is_integral(cartan.at(i, j)))
        throw ConfigError("Cartan pairing <alpha_i^vee, alpha_j> must be an integer");
      if (i != j && cartan.at(i, j) > Rat(0))
        throw ConfigError("Cartan off-diagonal entries must be <= 0");
    }
  if (rd.rank() > 0 && !leading_principal_minors_positive(cartan))
    throw ConfigError("Cartan matrix is not of finite type");
  // W-invariance of the form under each simple reflection.
  for (int i = 0; i < rd.rank(); ++i) {
    Mat s = rd.reflection_matrix(i);
    if (!(transpose(s) * rd.gram * s == rd.gram))
      throw ConfigError("Gram matrix is not reflection invariant (index " + std::to_string(i) +
                        ")");
  }
  return rd;
}

RootDatum build_root_datum(const std::string& type) {
  std::string t;
  for (char ch : type)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw ConfigError("empty root datum type");
  // GL products.
  if (t.rfind("gl(", 0) == 0 || t.rfind("GL(", 0) == 0) {
    std::vector<int> ns;
    std::size_t pos = 0;
    while (pos < t.size()) {
      if (t[pos] == 'x') {
        ++pos;
        continue;
      }
      if (t.compare(pos, 3, "gl(") != 0 && t.compare(pos, 3, "GL(") != 0)
        throw ConfigError("bad root datum type '" + type + "'");
      std::size_t close = t.find(')', pos);
      if (close == std::string::npos) throw ConfigError("bad root datum type '" + type + "'");
      ns.push_back(std::stoi(t.substr(pos + 3, close - pos - 3)));
      pos = close + 1;
    }
    if (ns.size() == 1) return build_gl(ns[0]);
    return build_gl_product(ns);
  }
  if (t == "G2" || t == "F4") return build_exceptional(t);
  if (t.size() >= 2 && (t[0] == 'A' || t[0] == 'B' || t[0] == 'C' || t[0] == 'D')) {
    int r = std::stoi(t.substr(1));
    return build_classical(t[0], r);
  }
  throw ConfigError("unknown root datum type '" + type + "'");
}

}  // namespace pdc
