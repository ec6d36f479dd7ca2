#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace hcm {

/// Arbitrary-precision integer used for every lattice entry.
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Int>;
using IntVector = Vector<Int>;
using Index = Eigen::Index;

/// Floor division (rounds toward negative infinity).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

/// Non-negative residue of `a` modulo `m > 0`.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline bool is_even(const Int& a) { return (a % 2) == 0; }

/// C(a, 2) = a(a-1)/2, valid for negative a as well.
inline Int choose2(const Int& a) { return a * (a - 1) / 2; }

inline Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
struct Bezout {
  Int g, s, t;
};
Bezout extended_gcd(const Int& a, const Int& b);

inline Int content(const IntVector& v) {
  Int g = 0;
  for (Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  return g;
}

IntMatrix to_int_matrix(const std::vector<std::vector<std::int64_t>>& rows);
IntVector to_int_vector(const std::vector<std::int64_t>& entries);

std::string to_string(const IntVector& v);

}  // namespace hcm
