#include <hcm/integer.hpp>

#include <sstream>

namespace hcm {

Bezout extended_gcd(const Int& a, const Int& b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

IntMatrix to_int_matrix(const std::vector<std::vector<std::int64_t>>& rows) {
  const Index n = static_cast<Index>(rows.size());
  const Index m = n == 0 ? 0 : static_cast<Index>(rows.front().size());
  IntMatrix out(n, m);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < m; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

IntVector to_int_vector(const std::vector<std::int64_t>& entries) {
  IntVector out(static_cast<Index>(entries.size()));
  for (Index i = 0; i < out.size(); ++i) out(i) = entries[i];
  return out;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (Index i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v(i);
  }
  os << ')';
  return os.str();
}

}  // namespace hcm
