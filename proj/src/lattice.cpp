#include <hcm/lattice.hpp>

#include <algorithm>

namespace hcm {

namespace {

Int abs_value(const Int& a) { return a < 0 ? Int(-a) : a; }

// Solves a x = b over Q by Gauss-Jordan elimination; a must be invertible.
Vector<Rational> solve_rational(const IntMatrix& a, const IntVector& b) {
  const Index n = a.rows();
  Matrix<Rational> m(n, n + 1);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) m(i, j) = Rational(a(i, j));
    m(i, n) = Rational(b(i));
  }
  for (Index k = 0; k < n; ++k) {
    Index pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) fail(ErrorKind::DegenerateForm, "singular system");
    m.row(k).swap(m.row(pivot));
    const Rational inv = Rational(1) / m(k, k);
    m.row(k) *= inv;
    for (Index i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      const Rational factor = m(i, k);
      m.row(i) -= factor * m.row(k);
    }
  }
  return m.col(n);
}

}  // namespace

BilinearForm::BilinearForm(IntMatrix matrix, int epsilon)
    : matrix_(std::move(matrix)), epsilon_(epsilon) {
  if (epsilon_ != 1 && epsilon_ != -1) {
    fail(ErrorKind::WrongSymmetry, "symmetry sign must be +1 or -1");
  }
  if (matrix_.rows() != matrix_.cols()) {
    fail(ErrorKind::Dimension, "bilinear form matrix must be square");
  }
  const IntMatrix expected = matrix_.transpose() * Int(epsilon_);
  if (expected != matrix_) {
    fail(ErrorKind::WrongSymmetry, epsilon_ == 1
                                       ? "matrix is not symmetric"
                                       : "matrix is not skew-symmetric");
  }
}

Int BilinearForm::operator()(const IntVector& x, const IntVector& y) const {
  if (x.size() != rank() || y.size() != rank()) {
    fail(ErrorKind::Dimension, "vector length does not match form rank");
  }
  if (rank() == 0) return 0;
  return x.dot(matrix_ * y);
}

bool BilinearForm::is_unimodular() const {
  const Int d = determinant();
  return d == 1 || d == -1;
}

BilinearForm direct_sum(const BilinearForm& a, const BilinearForm& b) {
  if (a.rank() == 0) return b;
  if (b.rank() == 0) return a;
  if (a.epsilon() != b.epsilon()) {
    fail(ErrorKind::WrongSymmetry, "direct sum of forms with different symmetry");
  }
  const Index n = a.rank(), m = b.rank();
  IntMatrix out = IntMatrix::Zero(n + m, n + m);
  out.topLeftCorner(n, n) = a.matrix();
  out.bottomRightCorner(m, m) = b.matrix();
  return {std::move(out), a.epsilon()};
}

BilinearForm congruent(const BilinearForm& f, const IntMatrix& basis) {
  if (basis.rows() != f.rank()) {
    fail(ErrorKind::Dimension, "basis vectors do not match form rank");
  }
  if (basis.cols() == 0) return {IntMatrix(0, 0), f.epsilon()};
  IntMatrix g = basis.transpose() * f.matrix() * basis;
  return {std::move(g), f.epsilon()};
}

Inertia signature(const BilinearForm& f) {
  if (!f.is_symmetric()) {
    fail(ErrorKind::WrongSymmetry, "signature requires a symmetric form");
  }
  if (f.rank() > 0 && f.determinant() == 0) {
    fail(ErrorKind::DegenerateForm, "signature of a degenerate form");
  }
  return inertia(f.matrix());
}

FormType form_type(const BilinearForm& f) {
  if (!f.is_symmetric()) {
    fail(ErrorKind::WrongSymmetry, "form type requires a symmetric form");
  }
  for (Index i = 0; i < f.rank(); ++i) {
    if (!is_even(f(i, i))) return FormType::I;
  }
  return FormType::II;
}

IntVector solve_dual(const BilinearForm& f, const IntVector& phi) {
  if (phi.size() != f.rank()) {
    fail(ErrorKind::Dimension, "covector length does not match form rank");
  }
  if (!f.is_unimodular()) {
    fail(ErrorKind::NotInvertibleOverIntegers,
         "form is not unimodular, no integral dual exists in general");
  }
  if (f.rank() == 0) return IntVector(0);
  const Vector<Rational> x = solve_rational(f.matrix().transpose(), phi);
  IntVector out(x.size());
  for (Index i = 0; i < x.size(); ++i) {
    if (denominator(x(i)) != 1) {
      fail(ErrorKind::InternalConstruction, "non-integral dual solution");
    }
    out(i) = numerator(x(i));
  }
  return out;
}

PrimitivePart primitive_reduce(const IntVector& v) {
  const Int g = content(v);
  if (g == 0) fail(ErrorKind::NoPrimitivePart, "zero vector has no primitive part");
  IntVector p = v;
  for (Index i = 0; i < p.size(); ++i) p(i) /= g;
  return {std::move(p), g};
}

SmithForm smith_form(const IntMatrix& a) {
  const Index m = a.rows(), n = a.cols();
  SmithForm s;
  IntMatrix& d = s.diagonal;
  d = a;
  s.left = IntMatrix::Identity(m, m);
  s.left_inverse = IntMatrix::Identity(m, m);
  s.right = IntMatrix::Identity(n, n);

  auto row_add = [&](Index i, Index j, const Int& c) {  // row_i += c row_j
    d.row(i) += c * d.row(j);
    s.left.row(i) += c * s.left.row(j);
    s.left_inverse.col(j) -= c * s.left_inverse.col(i);
  };
  auto row_swap = [&](Index i, Index j) {
    if (i == j) return;
    d.row(i).swap(d.row(j));
    s.left.row(i).swap(s.left.row(j));
    s.left_inverse.col(i).swap(s.left_inverse.col(j));
  };
  auto col_add = [&](Index i, Index j, const Int& c) {  // col_i += c col_j
    d.col(i) += c * d.col(j);
    s.right.col(i) += c * s.right.col(j);
  };
  auto col_swap = [&](Index i, Index j) {
    if (i == j) return;
    d.col(i).swap(d.col(j));
    s.right.col(i).swap(s.right.col(j));
  };

  const Index steps = std::min(m, n);
  for (Index t = 0; t < steps; ++t) {
    while (true) {
      Index pr = -1, pc = -1;
      Int best = 0;
      for (Index i = t; i < m; ++i) {
        for (Index j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          const Int v = abs_value(d(i, j));
          if (pr < 0 || v < best) {
            best = v;
            pr = i;
            pc = j;
          }
        }
      }
      if (pr < 0) break;
      row_swap(t, pr);
      col_swap(t, pc);

      bool clean = true;
      for (Index i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        row_add(i, t, -(d(i, t) / d(t, t)));
        if (d(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        col_add(j, t, -(d(t, j) / d(t, t)));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (Index i = t + 1; i < m && divides; ++i) {
        for (Index j = t + 1; j < n; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            row_add(t, i, Int(1));
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (t < m && t < n && d(t, t) < 0) {
      d.row(t) *= Int(-1);
      s.left.row(t) *= Int(-1);
      s.left_inverse.col(t) *= Int(-1);
    }
  }
  for (Index t = 0; t < steps; ++t) {
    if (d(t, t) != 0) s.invariants.push_back(d(t, t));
  }
  return s;
}

IntMatrix stack_columns(const std::vector<IntVector>& generators, Index rows) {
  IntMatrix a(rows, static_cast<Index>(generators.size()));
  for (Index j = 0; j < a.cols(); ++j) {
    if (generators[j].size() != rows) {
      fail(ErrorKind::Dimension, "generator length does not match rank");
    }
    a.col(j) = generators[j];
  }
  return a;
}

bool spans_direct_summand(const std::vector<IntVector>& generators, Index rows) {
  if (generators.empty()) return true;
  const Index k = static_cast<Index>(generators.size());
  if (k > rows) return false;
  const SmithForm s = smith_form(stack_columns(generators, rows));
  if (static_cast<Index>(s.invariants.size()) != k) return false;
  return std::all_of(s.invariants.begin(), s.invariants.end(),
                     [](const Int& d) { return d == 1; });
}

std::vector<IntVector> saturate(const std::vector<IntVector>& generators,
                                Index rows) {
  if (generators.empty()) return {};
  const SmithForm s = smith_form(stack_columns(generators, rows));
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < s.invariants.size(); ++i) {
    out.emplace_back(s.left_inverse.col(static_cast<Index>(i)));
  }
  return out;
}

IntMatrix dual_functionals(const std::vector<IntVector>& generators,
                           Index rows) {
  const Index k = static_cast<Index>(generators.size());
  if (k == 0) return IntMatrix(0, rows);
  if (!spans_direct_summand(generators, rows)) {
    fail(ErrorKind::Precondition, "generators do not span a direct summand");
  }
  const SmithForm s = smith_form(stack_columns(generators, rows));
  IntMatrix phi = s.right * s.left.topRows(k);
  return phi;
}

CongruenceFrame::CongruenceFrame(const BilinearForm& f)
    : gram_(f.matrix()), basis_(IntMatrix::Identity(f.rank(), f.rank())) {}

CongruenceFrame::CongruenceFrame(const BilinearForm& f, IntMatrix basis)
    : gram_(congruent(f, basis).matrix()), basis_(std::move(basis)) {}

void CongruenceFrame::add_multiple(Index target, Index source, const Int& c) {
  if (c == 0) return;
  basis_.col(target) += c * basis_.col(source);
  gram_.col(target) += c * gram_.col(source);
  gram_.row(target) += c * gram_.row(source);
}

void CongruenceFrame::swap(Index i, Index j) {
  if (i == j) return;
  basis_.col(i).swap(basis_.col(j));
  gram_.col(i).swap(gram_.col(j));
  gram_.row(i).swap(gram_.row(j));
}

void CongruenceFrame::negate(Index i) {
  basis_.col(i) *= Int(-1);
  gram_.col(i) *= Int(-1);
  gram_.row(i) *= Int(-1);
}

void CongruenceFrame::bring_to_front(Index start, const IntVector& coeffs) {
  if (start + coeffs.size() != size()) {
    fail(ErrorKind::Dimension, "coefficient vector does not cover the block");
  }
  IntVector x = coeffs;
  while (true) {
    Index pivot = -1;
    for (Index i = 0; i < x.size(); ++i) {
      if (x(i) != 0 && (pivot < 0 || abs_value(x(i)) < abs_value(x(pivot)))) {
        pivot = i;
      }
    }
    if (pivot < 0) fail(ErrorKind::NoPrimitivePart, "zero coefficient vector");
    bool single = true;
    for (Index j = 0; j < x.size(); ++j) {
      if (j == pivot || x(j) == 0) continue;
      const Int c = x(j) / x(pivot);
      // b_pivot += c b_j keeps the vector fixed and replaces x_j by x_j - c x_pivot.
      add_multiple(start + pivot, start + j, c);
      x(j) -= c * x(pivot);
      if (x(j) != 0) single = false;
    }
    if (!single) continue;
    if (abs_value(x(pivot)) != 1) {
      fail(ErrorKind::Precondition, "coefficient vector is not primitive");
    }
    if (x(pivot) < 0) {
      negate(start + pivot);
      x(pivot) = 1;
    }
    swap(start, start + pivot);
    return;
  }
}

}  // namespace hcm
