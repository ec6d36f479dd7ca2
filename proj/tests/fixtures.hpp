#pragma once

#include "oracles.hpp"

#include <hcm/resolution.hpp>

namespace fixture {

using namespace hcm;

/// Skew hyperbolic neighborhood for n = 3 with Z2 data and d(1) = 1.
inline NeighborhoodDescriptor skew_piece(std::vector<long> values, Int euler = -1) {
  std::vector<GroupElement> v;
  for (long x : values) v.push_back({x, 0});
  const Index k = static_cast<Index>(values.size()) / 2;
  IntersectionTriple t(3, BilinearForm::skew(oracle::hyperbolic(k, -1)),
                       oracle::quadratic_data(GroupKind::OrderTwo, {1, 0}, v), euler,
                       BoundaryKind::HomologySphere);
  return {t, euler, 0, "framing-a", std::nullopt};
}

/// A pair passing every condition of the general rule (n = 3).
inline NeighborhoodPair general_pair() {
  return {skew_piece({0, 1}), skew_piece({0, 1}), std::nullopt};
}

/// Spin dimension-4 neighborhood: a hyperbolic plane with Z2 data.
inline NeighborhoodDescriptor spin_piece(const IntMatrix& g, Int euler) {
  IntersectionTriple t(2, BilinearForm::symmetric(g),
                       oracle::stable_data(GroupKind::OrderTwo,
                                           std::vector<long>(static_cast<std::size_t>(g.rows()), 0)),
                       euler, BoundaryKind::HomologySphere);
  return {t, euler, 0, "spin-a", true};
}

inline NeighborhoodPair dim4_pair() {
  const IntMatrix h = oracle::hyperbolic(1);
  return {spin_piece(h, 3), spin_piece(h, 3), std::nullopt};
}

}  // namespace fixture
