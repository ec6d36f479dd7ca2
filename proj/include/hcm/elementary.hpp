#pragma once

#include <hcm/symplectic.hpp>
#include <hcm/triple.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hcm {

struct WitnessCheck {
  std::string name;  // "count", "isotropic", "nu_null", "direct_summand"
  bool passed = false;
  std::string detail;
};

struct LagrangianWitness {
  std::vector<IntVector> generators;
  std::vector<WitnessCheck> verification;
};

/// (a) half-rank count, (b) pairwise products vanish, (c) nu vanishes on
/// each generator and each pairwise sum, (d) the span is a direct summand.
struct WitnessReport {
  bool ok = false;
  std::vector<WitnessCheck> checks;
  /// Name of the first failing check, empty when ok.
  std::string failed;
};
WitnessReport verify_witness(const IntersectionTriple& t,
                             const std::vector<IntVector>& generators);

struct Obstruction {
  std::string name;  // "signature", "kappa_squared", "arf", "pr2_nu_kappa"
  Int value;
};

struct ElementaryVerdict {
  bool elementary = false;
  int case_used = 0;
  std::optional<LagrangianWitness> witness;
  std::optional<Obstruction> obstruction;
};

/// Case (1)-(6) for the triple; throws for data outside every case.
int elementary_case(const IntersectionTriple& t);

/// Sum of nu(lambda_i) nu(mu_i) mod 2. For Z2xZ2 data the unstable
/// component is used.
Int arf_invariant(const IntersectionTriple& t, const SymplecticBasis& basis);

struct CharacteristicElement {
  IntVector kappa;
  Int kappa_squared;
};
/// Lambda-dual of the stable map: s nu(x) = Lambda(kappa, x).
CharacteristicElement characteristic_element(const IntersectionTriple& t);

/// Mod-2 dual of the stable component of Z2xZ2 data, as a 0/1 vector.
IntVector characteristic_element_mod2(const IntersectionTriple& t);

ElementaryVerdict decide_elementary(const IntersectionTriple& t,
                                    const SearchBudget& budget = {});

/// `basis` is a Lagrangian frame; it is renormalized so that s nu vanishes on
/// lambda_2..lambda_k before the construction.
LagrangianWitness witness_case2(const IntersectionTriple& t,
                               const SymplecticBasis& basis,
                               const IntVector& kappa);

/// `basis` is a hyperbolic (or skew symplectic) basis; nu must be a
/// quadratic refinement with vanishing Arf invariant, or linear.
LagrangianWitness witness_case3(const IntersectionTriple& t,
                                const SymplecticBasis& basis);

/// Brute-force Lagrangian search over primitive vectors with entries in
/// [-radius, radius]. The isotropic candidates depend only on the form, so
/// one oracle serves every nu on the same form.
class LagrangianOracle {
 public:
  LagrangianOracle(const BilinearForm& form, int radius);

  std::optional<LagrangianWitness> search(const IntersectionTriple& t) const;
  std::size_t candidate_count() const { return candidates_.size(); }

 private:
  BilinearForm form_;
  bool small_ = true;
  std::vector<std::vector<long>> candidates_;  // isotropic, primitive
  std::vector<std::vector<std::size_t>> orthogonal_;  // higher-index neighbours
};

std::optional<LagrangianWitness> brute_force_lagrangian(const IntersectionTriple& t,
                                                        int radius);

}  // namespace hcm
