#pragma once

#include <hcm/coefficients.hpp>
#include <hcm/lattice.hpp>

#include <vector>

namespace hcm {

/// Normal bundle data nu on a basis of H, with values in a coefficient group
/// and the non-linearity law nu(x+y) = nu(x) + nu(y) + d(1) * Lambda(x, y).
struct QuadraticData {
  CoefficientGroup group;
  GroupElement boundary_element;  // d(1)
  std::vector<GroupElement> basis_values;
  bool stable = false;  // nu is asserted to be a homomorphism
  /// For Z2xZ2 data: which component (0 or 1) carries the stable map.
  int stable_component = 0;

  bool operator==(const QuadraticData&) const = default;
};

enum class BoundaryKind { Closed, HomologySphere, Other };

std::string_view boundary_kind_name(BoundaryKind kind);

/// (H, Lambda, nu) for an (n-1)-connected 2n-manifold, with Euler
/// characteristic carried along as metadata.
class IntersectionTriple {
 public:
  IntersectionTriple(long n, BilinearForm form, QuadraticData nu, Int euler,
                     BoundaryKind boundary = BoundaryKind::Closed);

  /// Rank-0 triple: a homotopy sphere (euler 2) or a disk (euler 1).
  static IntersectionTriple empty(long n, QuadraticData nu, Int euler,
                                  BoundaryKind boundary = BoundaryKind::Closed);

  long n() const { return n_; }
  const BilinearForm& form() const { return form_; }
  const QuadraticData& nu() const { return nu_; }
  const CoefficientGroup& group() const { return nu_.group; }
  const Int& euler() const { return euler_; }
  BoundaryKind boundary() const { return boundary_; }
  Index rank() const { return form_.rank(); }

  /// The same data expressed in the basis given by the columns of `basis`.
  IntersectionTriple in_basis(const IntMatrix& basis) const;

  bool operator==(const IntersectionTriple&) const = default;

 private:
  long n_;
  BilinearForm form_;
  QuadraticData nu_;
  Int euler_;
  BoundaryKind boundary_;
};

Int eval_form(const IntersectionTriple& t, const IntVector& x,
              const IntVector& y);

/// nu(sum a_i e_i) = sum a_i nu(e_i)
///   + d(1) * (sum_i C(a_i, 2) Lambda(e_i, e_i) + sum_{i<j} a_i a_j Lambda(e_i, e_j)).
GroupElement eval_nu(const IntersectionTriple& t, const IntVector& x);

/// The image of the stable map is <k * generator> in pi_n(BO). For Z2 the
/// whole group is k = 1 and the trivial subgroup is k = 0; the trivial group
/// reports k = 0 with whole_group set.
struct IndexResult {
  Int k;
  bool whole_group = false;
};
IndexResult index_of(const IntersectionTriple& t);

/// Connected sum on middle homology; euler(a # b) = euler(a) + euler(b) - 2.
IntersectionTriple direct_sum(const IntersectionTriple& a,
                              const IntersectionTriple& b);

/// Closed triple a cup_boundary (-b): form a (+) (-b), nu values unchanged.
IntersectionTriple glue_along_homology_sphere(const IntersectionTriple& a,
                                              const IntersectionTriple& b);

}  // namespace hcm
