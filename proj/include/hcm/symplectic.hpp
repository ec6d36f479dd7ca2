#pragma once

#include <hcm/lattice.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hcm {

/// {lambda_1..lambda_k, mu_1..mu_k} with Lambda(lambda_i, lambda_j) = 0,
/// Lambda(mu_i, mu_j) = 0 and Lambda(lambda_i, mu_j) = delta_ij.
struct SymplecticBasis {
  std::vector<IntVector> lambdas;
  std::vector<IntVector> mus;

  Index half_rank() const { return static_cast<Index>(lambdas.size()); }
  /// Columns lambda_1..lambda_k, mu_1..mu_k.
  IntMatrix matrix(Index rank) const;
};

struct BasisCheck {
  bool ok = true;
  std::string failure;

  explicit operator bool() const { return ok; }
};

/// Lagrangian frame relations only: lambdas isotropic, lambda/mu dual, and
/// the stacked vectors form a basis. The mus may pair nontrivially among
/// themselves (unavoidable for odd forms).
BasisCheck check_lagrangian_frame(const BilinearForm& f, const SymplecticBasis& b);
/// Full symplectic/hyperbolic relations, including isotropic mus.
BasisCheck check_symplectic_basis(const BilinearForm& f, const SymplecticBasis& b);

/// Isotropic vector search: shells of sup-norm 1, 2, ... up to `max_radius`.
/// Above `full_box_rank` only vectors with at most `max_support` nonzero
/// entries are tried.
struct SearchBudget {
  int max_radius = 48;
  Index full_box_rank = 6;
  Index max_support = 4;
};

/// Primitive x != 0 with x^T g x = 0 and the first nonzero entry positive,
/// searched shell by shell. Empty when the budget runs out.
std::optional<IntVector> find_isotropic_vector(const IntMatrix& gram,
                                               const SearchBudget& budget = {});

/// With `first` given (primitive), it becomes lambda_1.
SymplecticBasis symplectic_basis_skew(const BilinearForm& f,
                                      const std::optional<IntVector>& first = {});

/// Type II, signature 0, unimodular symmetric forms.
SymplecticBasis hyperbolic_basis_symmetric(const BilinearForm& f,
                                           const SearchBudget& budget = {});

/// Unimodular symmetric forms of signature 0, either type. For type II forms
/// the result is a hyperbolic basis; for type I forms each Lambda(mu_i, mu_i)
/// is 0 or 1 and all other mu pairings vanish.
SymplecticBasis lagrangian_frame(const BilinearForm& f,
                                 const SearchBudget& budget = {});

/// Completes a Lagrangian direct summand (generators kept verbatim as the
/// lambdas) to a frame, with the mus made as isotropic as the form allows.
SymplecticBasis frame_from_lagrangian(const BilinearForm& f,
                                      const std::vector<IntVector>& lagrangian);

}  // namespace hcm
