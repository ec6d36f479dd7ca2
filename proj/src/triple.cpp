#include <hcm/triple.hpp>

#include <string>

namespace hcm {

std::string_view boundary_kind_name(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::Closed: return "closed";
    case BoundaryKind::HomologySphere: return "homology_sphere";
    case BoundaryKind::Other: return "other";
  }
  return "?";
}

IntersectionTriple::IntersectionTriple(long n, BilinearForm form,
                                       QuadraticData nu, Int euler,
                                       BoundaryKind boundary)
    : n_(n),
      form_(std::move(form)),
      nu_(std::move(nu)),
      euler_(std::move(euler)),
      boundary_(boundary) {
  if (n_ < 2) fail(ErrorKind::Precondition, "middle dimension must be >= 2");
  const int expected = (n_ % 2 == 0) ? 1 : -1;
  if (form_.epsilon() != expected) {
    fail(ErrorKind::WrongSymmetry,
         "form symmetry must be (-1)^n for middle dimension " + std::to_string(n_));
  }
  if (static_cast<Index>(nu_.basis_values.size()) != form_.rank()) {
    fail(ErrorKind::Dimension, "nu needs one value per basis vector");
  }
  const CoefficientGroup& g = nu_.group;
  if (!g.contains(nu_.boundary_element)) {
    fail(ErrorKind::MalformedInput, "boundary element is not a reduced group element");
  }
  for (const GroupElement& v : nu_.basis_values) {
    if (!g.contains(v)) {
      fail(ErrorKind::MalformedInput, "nu value is not a reduced group element");
    }
  }
  if (nu_.stable && !g.is_zero(nu_.boundary_element)) {
    fail(ErrorKind::Precondition, "stable (homomorphic) nu requires d(1) = 0");
  }
  if (nu_.stable_component != 0 && nu_.stable_component != 1) {
    fail(ErrorKind::MalformedInput, "stable component must be 0 or 1");
  }
  // Skew forms make (*) order-dependent unless 2 d(1) = 0.
  if (!form_.is_symmetric() && g.kind() == GroupKind::IntegerCyclic &&
      nu_.boundary_element.first != 0) {
    fail(ErrorKind::Precondition,
         "a skew form with values in Z requires d(1) = 0");
  }
  if (boundary_ != BoundaryKind::Other && !form_.is_unimodular()) {
    fail(ErrorKind::DegenerateForm,
         "closed or homology-sphere-bounded data needs a unimodular form");
  }
}

IntersectionTriple IntersectionTriple::empty(long n, QuadraticData nu,
                                             Int euler, BoundaryKind boundary) {
  nu.basis_values.clear();
  return {n, BilinearForm(IntMatrix(0, 0), n % 2 == 0 ? 1 : -1), std::move(nu),
          std::move(euler), boundary};
}

IntersectionTriple IntersectionTriple::in_basis(const IntMatrix& basis) const {
  QuadraticData nu = nu_;
  nu.basis_values.clear();
  for (Index j = 0; j < basis.cols(); ++j) {
    nu.basis_values.push_back(eval_nu(*this, basis.col(j)));
  }
  BoundaryKind boundary = boundary_;
  if (basis.cols() != rank()) boundary = BoundaryKind::Other;
  return {n_, congruent(form_, basis), std::move(nu), euler_, boundary};
}

Int eval_form(const IntersectionTriple& t, const IntVector& x,
              const IntVector& y) {
  return t.form()(x, y);
}

GroupElement eval_nu(const IntersectionTriple& t, const IntVector& x) {
  const Index r = t.rank();
  if (x.size() != r) fail(ErrorKind::Dimension, "vector length does not match rank");
  const QuadraticData& nu = t.nu();
  const CoefficientGroup& g = nu.group;
  GroupElement linear;
  Int quadratic = 0;
  for (Index i = 0; i < r; ++i) {
    if (x(i) == 0) continue;
    linear.first += x(i) * nu.basis_values[i].first;
    linear.second += x(i) * nu.basis_values[i].second;
    quadratic += choose2(x(i)) * t.form()(i, i);
    for (Index j = i + 1; j < r; ++j) {
      if (x(j) != 0) quadratic += x(i) * x(j) * t.form()(i, j);
    }
  }
  return g.add(g.reduce(linear), g.multiply(quadratic, nu.boundary_element));
}

IndexResult index_of(const IntersectionTriple& t) {
  const QuadraticData& nu = t.nu();
  if (!nu.stable) {
    fail(ErrorKind::IndexUndefined, "index needs the stable (homomorphic) normal map");
  }
  const CoefficientGroup expected = pi_bo(t.n());
  if (nu.group != expected) {
    fail(ErrorKind::MismatchedData,
         "stable nu must take values in pi_n(BO) = " +
             std::string(group_kind_name(expected.kind())));
  }
  switch (expected.kind()) {
    case GroupKind::Trivial:
      return {0, true};
    case GroupKind::IntegerCyclic: {
      Int k = 0;
      for (const GroupElement& v : nu.basis_values) k = gcd(k, v.first);
      return {k, k == 1};
    }
    case GroupKind::OrderTwo:
      for (const GroupElement& v : nu.basis_values) {
        if (v.first != 0) return {1, true};
      }
      return {0, false};
    case GroupKind::OrderTwoSquared:
      break;
  }
  fail(ErrorKind::Unsupported, "pi_n(BO) is never Z2xZ2");
}

namespace {

void require_compatible(const IntersectionTriple& a, const IntersectionTriple& b) {
  if (a.n() != b.n()) fail(ErrorKind::MismatchedData, "middle dimensions differ");
  const QuadraticData& x = a.nu();
  const QuadraticData& y = b.nu();
  if (x.group != y.group || x.boundary_element != y.boundary_element ||
      x.stable != y.stable || x.stable_component != y.stable_component) {
    fail(ErrorKind::MismatchedData, "coefficient data differs");
  }
}

QuadraticData concatenate(const QuadraticData& x, const QuadraticData& y) {
  QuadraticData out = x;
  out.basis_values.insert(out.basis_values.end(), y.basis_values.begin(),
                          y.basis_values.end());
  return out;
}

}  // namespace

IntersectionTriple direct_sum(const IntersectionTriple& a,
                              const IntersectionTriple& b) {
  require_compatible(a, b);
  BoundaryKind boundary = BoundaryKind::Closed;
  if (a.boundary() == BoundaryKind::Closed) {
    boundary = b.boundary();
  } else if (b.boundary() == BoundaryKind::Closed) {
    boundary = a.boundary();
  } else {
    boundary = BoundaryKind::Other;
  }
  return {a.n(), direct_sum(a.form(), b.form()), concatenate(a.nu(), b.nu()),
          a.euler() + b.euler() - 2, boundary};
}

IntersectionTriple glue_along_homology_sphere(const IntersectionTriple& a,
                                              const IntersectionTriple& b) {
  if (a.boundary() != BoundaryKind::HomologySphere ||
      b.boundary() != BoundaryKind::HomologySphere) {
    fail(ErrorKind::UnsupportedGluing,
         "gluing needs both pieces bounded by a homology sphere; supply the "
         "glued triple directly");
  }
  require_compatible(a, b);
  return {a.n(), direct_sum(a.form(), -b.form()), concatenate(a.nu(), b.nu()),
          a.euler() + b.euler(), BoundaryKind::Closed};
}

}  // namespace hcm
