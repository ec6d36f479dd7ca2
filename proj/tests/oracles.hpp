#pragma once

// Test-side reference implementations. None of these call into the library's
// algorithms; they only share the value types.

#include <hcm/elementary.hpp>
#include <hcm/surgery.hpp>

#include <Eigen/Eigenvalues>

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using namespace hcm;

using Small = std::vector<std::vector<long>>;

inline IntMatrix to_matrix(const Small& rows) {
  const Index r = static_cast<Index>(rows.size());
  IntMatrix m(r, r);
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < r; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

inline IntVector vec(std::initializer_list<long> v) {
  IntVector x(static_cast<Index>(v.size()));
  Index i = 0;
  for (long e : v) x(i++) = e;
  return x;
}

/// Laplace expansion along the first row.
inline Int cofactor_det(const IntMatrix& m) {
  const Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int total = 0;
  for (Index c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (Index i = 1; i < n; ++i) {
      for (Index j = 0, k = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, k++) = m(i, j);
      }
    }
    const Int term = m(0, c) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Int(-term);
  }
  return total;
}

/// Inertia from floating-point eigenvalues; fine for the small, well
/// separated spectra used in tests.
inline Inertia eigen_inertia(const IntMatrix& m) {
  const Index n = m.rows();
  Eigen::MatrixXd d(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) d(i, j) = m(i, j).convert_to<double>();
  }
  Inertia in;
  if (n == 0) return in;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(d, Eigen::EigenvaluesOnly);
  for (Index i = 0; i < n; ++i) {
    const double e = solver.eigenvalues()(i);
    if (e > 1e-9) in.positive += 1;
    if (e < -1e-9) in.negative += 1;
  }
  return in;
}

inline IntMatrix e8_gram() {
  // Dynkin diagram E8: chain 1-2-3-4-5-6-7 with node 8 attached to node 5.
  IntMatrix g = IntMatrix::Zero(8, 8);
  for (Index i = 0; i < 8; ++i) g(i, i) = 2;
  const int edges[7][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}};
  for (const auto& e : edges) g(e[0], e[1]) = g(e[1], e[0]) = -1;
  return g;
}

inline IntMatrix hyperbolic(Index k, int epsilon = 1) {
  IntMatrix g = IntMatrix::Zero(2 * k, 2 * k);
  for (Index i = 0; i < k; ++i) {
    g(2 * i, 2 * i + 1) = 1;
    g(2 * i + 1, 2 * i) = epsilon;
  }
  return g;
}

inline IntMatrix block_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m = IntMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

// --- coefficient groups, written out independently --------------------------

inline Int modulus(GroupKind k) {
  switch (k) {
    case GroupKind::Trivial: return 1;
    case GroupKind::IntegerCyclic: return 0;
    default: return 2;
  }
}

inline GroupElement g_norm(GroupKind k, GroupElement a) {
  const Int m = modulus(k);
  if (m == 0) return {a.first, 0};
  if (m == 1) return {};
  auto r = [](Int v) {
    v %= 2;
    return v < 0 ? Int(v + 2) : v;
  };
  if (k == GroupKind::OrderTwo) return {r(a.first), 0};
  return {r(a.first), r(a.second)};
}

inline GroupElement g_add(GroupKind k, const GroupElement& a, const GroupElement& b) {
  return g_norm(k, {a.first + b.first, a.second + b.second});
}

inline GroupElement g_sub(GroupKind k, const GroupElement& a, const GroupElement& b) {
  return g_norm(k, {a.first - b.first, a.second - b.second});
}

inline GroupElement g_scale(GroupKind k, const Int& c, const GroupElement& a) {
  return g_norm(k, {c * a.first, c * a.second});
}

inline Int pairing(const IntMatrix& g, const IntVector& x, const IntVector& y) {
  Int s = 0;
  for (Index i = 0; i < g.rows(); ++i) {
    if (x(i) == 0) continue;
    for (Index j = 0; j < g.cols(); ++j) s += x(i) * g(i, j) * y(j);
  }
  return s;
}

/// Builds x one unit vector at a time, applying
/// nu(y + e) = nu(y) + nu(e) + d Lambda(y, e) and its inverse for y - e.
inline GroupElement inductive_nu(const IntersectionTriple& t, const IntVector& x) {
  const GroupKind k = t.group().kind();
  const IntMatrix& g = t.form().matrix();
  const GroupElement& d = t.nu().boundary_element;
  const Index r = t.rank();
  IntVector y = IntVector::Zero(r);
  GroupElement value{};
  for (Index i = 0; i < r; ++i) {
    const GroupElement& ne = t.nu().basis_values[static_cast<std::size_t>(i)];
    // Lambda(y, e_i), kept current as y(i) moves by one.
    Int p = 0;
    for (Index j = 0; j < r; ++j) p += y(j) * g(j, i);
    for (Int step = 0; step < abs(x(i)); ++step) {
      if (x(i) > 0) {
        value = g_add(k, g_add(k, value, ne), g_scale(k, p, d));
        y(i) += 1;
        p += g(i, i);
      } else {
        y(i) -= 1;
        p -= g(i, i);
        value = g_sub(k, g_sub(k, value, ne), g_scale(k, p, d));
      }
    }
  }
  return value;
}

// --- Arf invariant as a majority value ----------------------------------------

struct Majority {
  Int value;
  std::size_t h0_size = 0;
  std::size_t ones = 0;
};

using Classes = std::vector<IntVector>;

/// Mod-2 images of the isotropic vectors in the box [-radius, radius]^r.
inline Classes h0_classes(const IntMatrix& gram, int radius) {
  const Index r = gram.rows();
  const Matrix<long> g = gram.unaryExpr([](const Int& v) { return v.convert_to<long>(); });
  std::set<std::vector<int>> seen;
  std::vector<long> x(static_cast<std::size_t>(r), -radius);
  while (true) {
    long q = 0;
    for (Index i = 0; i < r; ++i) {
      for (Index j = 0; j < r; ++j) q += x[i] * g(i, j) * x[j];
    }
    if (q == 0) {
      std::vector<int> red(static_cast<std::size_t>(r));
      for (Index i = 0; i < r; ++i) red[i] = static_cast<int>(((x[i] % 2) + 2) % 2);
      seen.insert(red);
    }
    Index i = 0;
    while (i < r && x[i] == radius) x[i++] = -radius;
    if (i == r) break;
    x[i] += 1;
  }
  Classes out;
  for (const std::vector<int>& red : seen) {
    IntVector v(r);
    for (Index i = 0; i < r; ++i) v(i) = red[i];
    out.push_back(v);
  }
  return out;
}

/// The value nu (one chosen component) takes most often on the classes.
inline Majority majority_value(const IntersectionTriple& t, const Classes& classes,
                               int component = 0) {
  Majority m;
  m.h0_size = classes.size();
  for (const IntVector& v : classes) {
    const GroupElement e = inductive_nu(t, v);
    const Int& bit = component == 0 ? e.first : e.second;
    if (bit != 0) m.ones += 1;
  }
  m.value = 2 * m.ones > m.h0_size ? 1 : 0;
  return m;
}

inline Majority majority_arf(const IntersectionTriple& t, int radius, int component = 0) {
  return majority_value(t, h0_classes(t.form().matrix(), radius), component);
}

// --- random generators ----------------------------------------------------------

/// Random unimodular matrix: a product of elementary column operations with
/// small multipliers, swaps and sign changes.
inline IntMatrix random_unimodular(Index r, std::mt19937& rng, int moves = 12) {
  IntMatrix u = IntMatrix::Identity(r, r);
  if (r == 0) return u;
  std::uniform_int_distribution<Index> pick(0, r - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<int> kind(0, 5);
  for (int m = 0; m < moves; ++m) {
    const Index a = pick(rng);
    const Index b = pick(rng);
    const int k = kind(rng);
    if (k == 0 && a != b) {
      u.col(a).swap(u.col(b));
    } else if (k == 1) {
      u.col(a) = -u.col(a);
    } else if (a != b) {
      u.col(a) += Int(coef(rng)) * u.col(b);
    }
  }
  return u;
}

/// One random move taking a symplectic (epsilon = -1) or hyperbolic
/// (epsilon = 1, type II) basis to another one.
inline void random_symplectic_move(SymplecticBasis& b, int epsilon, std::mt19937& rng) {
  const Index k = b.half_rank();
  if (k == 0) return;
  std::uniform_int_distribution<Index> pick(0, k - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<int> kind(0, 3);
  const Index i = pick(rng);
  const Index j = pick(rng);
  const Int c = coef(rng);
  auto& L = b.lambdas;
  auto& M = b.mus;
  switch (kind(rng)) {
    case 0:  // swap a pair
      if (epsilon == 1) {
        std::swap(L[i], M[i]);
      } else {
        IntVector old = L[i];
        L[i] = M[i];
        M[i] = -old;
      }
      break;
    case 1:  // lambda transvection
      if (i == j) break;
      L[j] += c * L[i];
      M[i] -= c * M[j];
      break;
    case 2:  // shear mixing two pairs
      if (i == j) break;
      if (epsilon == 1) {
        M[i] += L[j];
        M[j] -= L[i];
      } else {
        M[i] += L[j];
        M[j] += L[i];
      }
      break;
    default:  // diagonal shear, skew only
      if (epsilon == -1) M[i] += c * L[i];
      break;
  }
}

/// Direct check of the symplectic/hyperbolic relations and unimodularity.
inline bool is_symplectic(const IntMatrix& g, const SymplecticBasis& b) {
  const Index k = b.half_rank();
  const Index r = g.rows();
  if (2 * k != r) return false;
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) {
      if (pairing(g, b.lambdas[i], b.lambdas[j]) != 0) return false;
      if (pairing(g, b.mus[i], b.mus[j]) != 0) return false;
      if (pairing(g, b.lambdas[i], b.mus[j]) != (i == j ? 1 : 0)) return false;
    }
  }
  IntMatrix m(r, r);
  for (Index i = 0; i < k; ++i) {
    m.col(i) = b.lambdas[i];
    m.col(k + i) = b.mus[i];
  }
  const Int d = cofactor_det(m);
  return d == 1 || d == -1;
}

// --- triples ----------------------------------------------------------------------

inline QuadraticData stable_data(GroupKind k, std::vector<long> values) {
  QuadraticData q;
  q.group = k;
  q.stable = true;
  for (long v : values) q.basis_values.push_back({v, 0});
  return q;
}

inline QuadraticData quadratic_data(GroupKind k, GroupElement d,
                                    std::vector<GroupElement> values, int component = 0) {
  QuadraticData q;
  q.group = k;
  q.boundary_element = d;
  q.basis_values = std::move(values);
  q.stable_component = component;
  return q;
}

inline Int closed_euler(long n, Index rank) {
  return 2 + (n % 2 == 0 ? 1 : -1) * static_cast<long>(rank);
}

inline IntersectionTriple closed(long n, const IntMatrix& g, QuadraticData q) {
  const int eps = n % 2 == 0 ? 1 : -1;
  return IntersectionTriple(n, BilinearForm(g, eps), std::move(q), closed_euler(n, g.rows()));
}

// --- surgery ----------------------------------------------------------------------

/// Independent step check: the result is the data restricted to the
/// surviving frame vectors; nu is compared on every class of the box
/// [-2, 2]^r when r <= 4. Returns an empty string when the step is sound.
inline std::string surgery_step_problem(const SurgeryStep& s) {
  const Index k = s.basis.half_rank();
  if (s.after.rank() != s.before.rank() - 2) return "rank";
  std::vector<IntVector> survivors;
  for (Index i = 0; i < k; ++i) {
    if (i != s.killed_pair) survivors.push_back(s.basis.lambdas[i]);
  }
  for (Index i = 0; i < k; ++i) {
    if (i != s.killed_pair) survivors.push_back(s.basis.mus[i]);
  }
  const Index r = s.after.rank();
  const IntMatrix& g = s.after.form().matrix();
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < r; ++j) {
      if (g(i, j) != pairing(s.before.form().matrix(), survivors[i], survivors[j])) {
        return "intersection numbers";
      }
    }
  }
  for (Index i = 0; i < r / 2; ++i) {
    for (Index j = 0; j < r / 2; ++j) {
      if (g(i, j) != 0 || g(i, r / 2 + j) != (i == j ? 1 : 0)) return "frame relations";
    }
  }
  const Int d = cofactor_det(g);
  if (d != 1 && d != -1) return "unimodularity";
  if (inductive_nu(s.before, s.killed) != GroupElement{}) return "killed class";
  if (s.after.euler() != s.before.euler() - 2 * (s.before.n() % 2 == 0 ? 1 : -1)) {
    return "euler";
  }
  if (r == 0) return {};
  for (Index i = 0; i < r; ++i) {
    if (s.after.nu().basis_values[i] != inductive_nu(s.before, survivors[i])) return "nu";
  }
  if (r > 4) return {};
  IntVector x = IntVector::Constant(r, -2);
  while (true) {
    IntVector ambient = IntVector::Zero(s.before.rank());
    for (Index i = 0; i < r; ++i) ambient += x(i) * survivors[i];
    if (eval_nu(s.after, x) != inductive_nu(s.before, ambient)) return "nu on a sum";
    Index i = 0;
    while (i < r && x(i) == 2) x(i++) = -2;
    if (i == r) break;
    x(i) += 1;
  }
  return {};
}

}  // namespace oracle
