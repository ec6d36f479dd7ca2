#pragma once

#include <hcm/elementary.hpp>

#include <string>
#include <vector>

namespace hcm {

struct SurgeryStep {
  IntersectionTriple before;
  SymplecticBasis basis;  // frame of `before`, in its coordinates
  Index killed_pair = 0;  // 0-based
  IntVector killed;       // basis.lambdas[killed_pair]
  IntersectionTriple after;
};

struct SurgeryTrace {
  std::vector<SurgeryStep> steps;
};

/// Kills the class lambda_r. The result is expressed in the surviving frame
/// vectors lambda_i, mu_i (i != r), in that order, so its standard basis is
/// again a frame. Euler characteristic changes by -2 (-1)^n.
IntersectionTriple surgery_step(const IntersectionTriple& t,
                                const SymplecticBasis& basis, Index r);

/// Empty `failure` when the step satisfies: rank drop 2, the standard basis
/// of the result is a frame, unimodularity, nu(lambda_i) = 0 carried over,
/// Euler bookkeeping.
std::string check_surgery_step(const SurgeryStep& step);

/// Decides, extends the witness to a frame and kills one pair per step.
SurgeryTrace reduce_to_sphere(const IntersectionTriple& t,
                              const SearchBudget& budget = {});

}  // namespace hcm
