#pragma once

#include <hcm/error.hpp>
#include <hcm/integer.hpp>

#include <utility>
#include <vector>

namespace hcm {

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Works for any exact integer scalar; every intermediate value is a minor
/// of the input, so a fixed-width scalar is safe whenever the Hadamard bound
/// of the input fits. The empty matrix has determinant 1.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) {
    fail(ErrorKind::Dimension, "determinant of a non-square matrix");
  }
  const Index n = m.rows();
  Matrix<Scalar> a = m;
  Scalar sign = 1;
  Scalar previous = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Index swap_row = -1;
      for (Index i = k + 1; i < n; ++i) {
        if (a(i, k) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return Scalar(0);
      a.row(k).swap(a.row(swap_row));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  if (n == 0) return Scalar(1);
  return sign * a(n - 1, n - 1);
}

/// Counts of positive and negative squares of a nondegenerate symmetric form.
struct Inertia {
  Index positive = 0;
  Index negative = 0;

  Index rank() const { return positive + negative; }
  Index signature() const { return positive - negative; }
  bool operator==(const Inertia&) const = default;
};

/// Sylvester inertia by exact rational congruence diagonalization.
///
/// A zero pivot whose row is nonzero is paired with an off-diagonal partner
/// and eliminated as a hyperbolic 2x2 block, contributing (1, 1).
template <typename Derived>
Inertia inertia(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) {
    fail(ErrorKind::Dimension, "inertia of a non-square matrix");
  }
  const Index n = m.rows();
  Matrix<Rational> a(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) a(i, j) = Rational(Int(m(i, j)));
  }
  if (a != a.transpose()) {
    fail(ErrorKind::WrongSymmetry, "inertia requires a symmetric matrix");
  }
  auto swap_index = [&a](Index i, Index j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    a.col(i).swap(a.col(j));
  };

  Inertia result;
  Index k = 0;
  while (k < n) {
    Index diag = -1;
    for (Index i = k; i < n; ++i) {
      if (a(i, i) != 0) {
        diag = i;
        break;
      }
    }
    if (diag >= 0) {
      swap_index(k, diag);
      const Rational pivot = a(k, k);
      (pivot > 0 ? result.positive : result.negative) += 1;
      for (Index i = k + 1; i < n; ++i) {
        if (a(i, k) == 0) continue;
        const Rational factor = a(i, k) / pivot;
        for (Index j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
      }
      k += 1;
      continue;
    }
    // Remaining diagonal vanishes: pair row k with an off-diagonal partner.
    Index partner = -1;
    for (Index j = k + 1; j < n; ++j) {
      if (a(k, j) != 0) {
        partner = j;
        break;
      }
    }
    if (partner < 0) {
      fail(ErrorKind::DegenerateForm, "symmetric form is degenerate");
    }
    swap_index(k + 1, partner);
    // Block [[0, b], [b, 0]] with inverse [[0, 1/b], [1/b, 0]].
    const Rational b = a(k, k + 1);
    result.positive += 1;
    result.negative += 1;
    for (Index i = k + 2; i < n; ++i) {
      const Rational c0 = a(i, k);
      const Rational c1 = a(i, k + 1);
      if (c0 == 0 && c1 == 0) continue;
      for (Index j = k + 2; j < n; ++j) {
        // Schur complement: a_ij -= c_i B^{-1} c_j^T.
        a(i, j) -= (c0 * a(j, k + 1) + c1 * a(j, k)) / b;
      }
    }
    for (Index i = k + 2; i < n; ++i) {
      a(i, k) = a(k, i) = a(i, k + 1) = a(k + 1, i) = 0;
    }
    k += 2;
  }
  return result;
}

enum class FormType { I, II };

/// Square integer matrix with a symmetry sign: matrix^T = epsilon * matrix.
class BilinearForm {
 public:
  BilinearForm() = default;
  BilinearForm(IntMatrix matrix, int epsilon);

  static BilinearForm symmetric(IntMatrix matrix) {
    return BilinearForm(std::move(matrix), 1);
  }
  static BilinearForm skew(IntMatrix matrix) {
    return BilinearForm(std::move(matrix), -1);
  }

  const IntMatrix& matrix() const { return matrix_; }
  int epsilon() const { return epsilon_; }
  Index rank() const { return matrix_.rows(); }
  bool is_symmetric() const { return epsilon_ == 1; }

  const Int& operator()(Index i, Index j) const { return matrix_(i, j); }
  Int operator()(const IntVector& x, const IntVector& y) const;

  Int determinant() const { return hcm::determinant(matrix_); }
  bool is_unimodular() const;

  BilinearForm operator-() const { return {-matrix_, epsilon_}; }
  bool operator==(const BilinearForm& other) const {
    return epsilon_ == other.epsilon_ && matrix_ == other.matrix_;
  }

 private:
  IntMatrix matrix_ = IntMatrix(0, 0);
  int epsilon_ = 1;
};

/// Block-diagonal sum; the rank-0 form is a two-sided identity.
BilinearForm direct_sum(const BilinearForm& a, const BilinearForm& b);

/// The form expressed in the basis given by the columns of `basis`.
BilinearForm congruent(const BilinearForm& f, const IntMatrix& basis);

Inertia signature(const BilinearForm& f);
FormType form_type(const BilinearForm& f);

/// The unique integer vector kappa with f(kappa, -) = phi.
IntVector solve_dual(const BilinearForm& f, const IntVector& phi);

struct PrimitivePart {
  IntVector vector;
  Int content;
};
PrimitivePart primitive_reduce(const IntVector& v);

/// left * a * right = diagonal, with left and right unimodular and the
/// diagonal entries d_1 | d_2 | ... non-negative.
struct SmithForm {
  IntMatrix left;
  IntMatrix left_inverse;
  IntMatrix right;
  IntMatrix diagonal;
  std::vector<Int> invariants;  // nonzero diagonal entries
};
SmithForm smith_form(const IntMatrix& a);

/// Columns = generators. Empty generator lists give an r x 0 matrix.
IntMatrix stack_columns(const std::vector<IntVector>& generators, Index rows);

/// True iff the generators are linearly independent and span a direct
/// summand of Z^rows (every invariant factor equals 1).
bool spans_direct_summand(const std::vector<IntVector>& generators, Index rows);

/// A basis of (Q-span of generators) intersected with Z^rows.
std::vector<IntVector> saturate(const std::vector<IntVector>& generators,
                                Index rows);

/// Integer covectors phi_j with phi_j(g_i) = delta_ij, returned as the rows of
/// a k x r matrix. Throws Precondition unless the generators span a direct
/// summand.
IntMatrix dual_functionals(const std::vector<IntVector>& generators,
                           Index rows);

/// Basis change tracking: the columns of basis() are ambient vectors and
/// gram() is the form evaluated on them. Every operation is unimodular.
class CongruenceFrame {
 public:
  explicit CongruenceFrame(const BilinearForm& f);
  CongruenceFrame(const BilinearForm& f, IntMatrix basis);

  const IntMatrix& gram() const { return gram_; }
  const IntMatrix& basis() const { return basis_; }
  IntVector column(Index i) const { return basis_.col(i); }
  Index size() const { return basis_.cols(); }

  /// b_target += c * b_source
  void add_multiple(Index target, Index source, const Int& c);
  void swap(Index i, Index j);
  void negate(Index i);

  /// Makes b_start equal to sum_k coeffs_k b_{start+k} by unimodular moves
  /// inside the trailing block. `coeffs` must be primitive.
  void bring_to_front(Index start, const IntVector& coeffs);

 private:
  IntMatrix gram_;
  IntMatrix basis_;
};

}  // namespace hcm
