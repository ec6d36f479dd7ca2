#include <hcm/symplectic.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace hcm {

IntMatrix SymplecticBasis::matrix(Index rank) const {
  std::vector<IntVector> cols = lambdas;
  cols.insert(cols.end(), mus.begin(), mus.end());
  return stack_columns(cols, rank);
}

namespace {

BasisCheck check_frame(const BilinearForm& f, const SymplecticBasis& b,
                       bool strict) {
  const Index k = b.half_rank();
  if (static_cast<Index>(b.mus.size()) != k || 2 * k != f.rank()) {
    return {false, "basis size does not match rank"};
  }
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) {
      if (f(b.lambdas[i], b.lambdas[j]) != 0) {
        return {false, "lambda_" + std::to_string(i + 1) + " . lambda_" +
                           std::to_string(j + 1) + " != 0"};
      }
      if (f(b.lambdas[i], b.mus[j]) != (i == j ? 1 : 0)) {
        return {false, "lambda_" + std::to_string(i + 1) + " . mu_" +
                           std::to_string(j + 1) + " != delta"};
      }
      if (strict && f(b.mus[i], b.mus[j]) != 0) {
        return {false, "mu_" + std::to_string(i + 1) + " . mu_" +
                           std::to_string(j + 1) + " != 0"};
      }
    }
  }
  const Int d = determinant(b.matrix(f.rank()));
  if (d != 1 && d != -1) return {false, "vectors do not form a basis"};
  return {};
}

void require_unimodular(const BilinearForm& f) {
  const Int d = f.determinant();
  if (d == 0) fail(ErrorKind::DegenerateForm, "form is degenerate");
  if (d != 1 && d != -1) fail(ErrorKind::Precondition, "form is not unimodular");
}

// Visits every vector of length m with max |entry| == r, at most max_support
// nonzero entries and first nonzero entry positive. Order: support size, then
// support positions lexicographically, then values lexicographically.
template <typename Visit>
bool visit_shell(Index m, long r, Index max_support, Visit&& visit) {
  std::vector<long> x(static_cast<std::size_t>(m), 0);
  const Index top = std::min(m, max_support);
  for (Index s = 1; s <= top; ++s) {
    std::vector<Index> pos(static_cast<std::size_t>(s));
    std::iota(pos.begin(), pos.end(), Index{0});
    while (true) {
      std::vector<long> vals(static_cast<std::size_t>(s), -r);
      vals[0] = 1;
      while (true) {
        long biggest = 0;
        for (long v : vals) biggest = std::max(biggest, std::labs(v));
        if (biggest == r) {
          std::fill(x.begin(), x.end(), 0);
          for (Index i = 0; i < s; ++i) x[pos[i]] = vals[i];
          if (visit(x)) return true;
        }
        // odometer over [-r, -1] u [1, r] (first slot [1, r])
        Index i = s - 1;
        for (; i >= 0; --i) {
          long& v = vals[static_cast<std::size_t>(i)];
          if (v == r) {
            v = (i == 0) ? 1 : -r;
            continue;
          }
          v = (v == -1) ? 1 : v + 1;
          break;
        }
        if (i < 0) break;
      }
      // next combination
      Index i = s - 1;
      while (i >= 0 && pos[i] == m - s + i) --i;
      if (i < 0) break;
      ++pos[i];
      for (Index j = i + 1; j < s; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
  return false;
}

long gcd_of(const std::vector<long>& x) {
  long g = 0;
  for (long v : x) g = std::gcd(g, v);
  return g;
}

}  // namespace

BasisCheck check_lagrangian_frame(const BilinearForm& f, const SymplecticBasis& b) {
  return check_frame(f, b, false);
}

BasisCheck check_symplectic_basis(const BilinearForm& f, const SymplecticBasis& b) {
  return check_frame(f, b, true);
}

std::optional<IntVector> find_isotropic_vector(const IntMatrix& gram,
                                               const SearchBudget& budget) {
  const Index m = gram.rows();
  if (m == 0) return std::nullopt;
  const Index support = m <= budget.full_box_rank ? m : budget.max_support;

  constexpr long kSmall = 1L << 24;
  bool small = budget.max_radius <= 64 && m <= 64;
  for (Index i = 0; i < m && small; ++i) {
    for (Index j = 0; j < m; ++j) {
      if (gram(i, j) > kSmall || gram(i, j) < -kSmall) {
        small = false;
        break;
      }
    }
  }
  Matrix<long> fast;
  if (small) fast = gram.unaryExpr([](const Int& v) { return v.convert_to<long>(); });

  std::optional<IntVector> found;
  auto visit = [&](const std::vector<long>& x) {
    bool isotropic = false;
    if (small) {
      long q = 0;
      for (Index i = 0; i < m; ++i) {
        if (x[i] == 0) continue;
        long row = 0;
        for (Index j = 0; j < m; ++j) row += fast(i, j) * x[j];
        q += x[i] * row;
      }
      isotropic = q == 0;
    } else {
      Int q = 0;
      for (Index i = 0; i < m; ++i) {
        if (x[i] == 0) continue;
        Int row = 0;
        for (Index j = 0; j < m; ++j) row += gram(i, j) * x[j];
        q += row * x[i];
      }
      isotropic = q == 0;
    }
    if (!isotropic || gcd_of(x) != 1) return false;
    IntVector v(m);
    for (Index i = 0; i < m; ++i) v(i) = x[i];
    found = std::move(v);
    return true;
  };

  for (long r = 1; r <= budget.max_radius; ++r) {
    if (visit_shell(m, r, support, visit)) return found;
  }
  return std::nullopt;
}

SymplecticBasis symplectic_basis_skew(const BilinearForm& f,
                                      const std::optional<IntVector>& first) {
  if (f.is_symmetric()) {
    fail(ErrorKind::WrongSymmetry, "symplectic basis needs a skew-symmetric form");
  }
  require_unimodular(f);
  const Index r = f.rank();
  if (r % 2 != 0) fail(ErrorKind::DegenerateForm, "odd rank skew form");

  CongruenceFrame frame(f);
  if (first) {
    if (first->size() != r || content(*first) != 1) {
      fail(ErrorKind::Precondition, "first basis vector must be primitive");
    }
    frame.bring_to_front(0, *first);
  }
  SymplecticBasis out;
  for (Index s = 0; s < r; s += 2) {
    // Euclid on row s across columns s+1.. until a single entry +-1 remains.
    while (true) {
      Index pivot = -1;
      for (Index j = s + 1; j < r; ++j) {
        const Int& v = frame.gram()(s, j);
        if (v == 0) continue;
        if (pivot < 0 || abs(v) < abs(frame.gram()(s, pivot))) pivot = j;
      }
      if (pivot < 0) fail(ErrorKind::DegenerateForm, "form is degenerate");
      bool single = true;
      for (Index j = s + 1; j < r; ++j) {
        if (j == pivot || frame.gram()(s, j) == 0) continue;
        const Int c = frame.gram()(s, j) / frame.gram()(s, pivot);
        frame.add_multiple(j, pivot, -c);
        if (frame.gram()(s, j) != 0) single = false;
      }
      if (!single) continue;
      if (abs(frame.gram()(s, pivot)) != 1) {
        fail(ErrorKind::Precondition, "form is not unimodular");
      }
      if (frame.gram()(s, pivot) < 0) frame.negate(pivot);
      frame.swap(s + 1, pivot);
      break;
    }
    // gram(s, s+1) = 1; clear row s+1 using column s (gram(s+1, s) = -1).
    for (Index j = s + 2; j < r; ++j) {
      const Int c = frame.gram()(s + 1, j);
      if (c != 0) frame.add_multiple(j, s, c);
    }
    out.lambdas.push_back(frame.column(s));
    out.mus.push_back(frame.column(s + 1));
  }
  return out;
}

SymplecticBasis lagrangian_frame(const BilinearForm& f, const SearchBudget& budget) {
  if (!f.is_symmetric()) {
    fail(ErrorKind::WrongSymmetry, "lagrangian frame needs a symmetric form");
  }
  require_unimodular(f);
  if (signature(f).signature() != 0) {
    fail(ErrorKind::Precondition, "a Lagrangian needs signature 0");
  }
  const Index r = f.rank();
  CongruenceFrame frame(f);
  SymplecticBasis out;
  for (Index s = 0; s < r; s += 2) {
    const Index m = r - s;
    const IntMatrix block = frame.gram().bottomRightCorner(m, m);
    const std::optional<IntVector> x = find_isotropic_vector(block, budget);
    if (!x) {
      fail(ErrorKind::SearchBudget,
           "no isotropic vector found within radius " +
               std::to_string(budget.max_radius) + " in a rank " +
               std::to_string(m) + " block");
    }
    frame.bring_to_front(s, *x);
    // Euclid on row s over columns s+1.. (gram(s, s) = 0 stays untouched).
    while (true) {
      Index pivot = -1;
      for (Index j = s + 1; j < r; ++j) {
        const Int& v = frame.gram()(s, j);
        if (v == 0) continue;
        if (pivot < 0 || abs(v) < abs(frame.gram()(s, pivot))) pivot = j;
      }
      if (pivot < 0) fail(ErrorKind::DegenerateForm, "form is degenerate");
      bool single = true;
      for (Index j = s + 1; j < r; ++j) {
        if (j == pivot || frame.gram()(s, j) == 0) continue;
        const Int c = frame.gram()(s, j) / frame.gram()(s, pivot);
        frame.add_multiple(j, pivot, -c);
        if (frame.gram()(s, j) != 0) single = false;
      }
      if (!single) continue;
      if (abs(frame.gram()(s, pivot)) != 1) {
        fail(ErrorKind::InternalConstruction, "isotropic vector has no dual partner");
      }
      if (frame.gram()(s, pivot) < 0) frame.negate(pivot);
      frame.swap(s + 1, pivot);
      break;
    }
    for (Index j = s + 2; j < r; ++j) {
      const Int c = frame.gram()(s + 1, j);
      if (c != 0) frame.add_multiple(j, s, -c);
    }
    const Int half = floor_div(frame.gram()(s + 1, s + 1), 2);
    if (half != 0) frame.add_multiple(s + 1, s, -half);
    out.lambdas.push_back(frame.column(s));
    out.mus.push_back(frame.column(s + 1));
  }
  return out;
}

SymplecticBasis hyperbolic_basis_symmetric(const BilinearForm& f,
                                           const SearchBudget& budget) {
  if (!f.is_symmetric()) {
    fail(ErrorKind::Precondition, "hyperbolic basis needs a symmetric form");
  }
  require_unimodular(f);
  if (form_type(f) != FormType::II) {
    fail(ErrorKind::Precondition, "hyperbolic basis needs a type II form");
  }
  if (signature(f).signature() != 0) {
    fail(ErrorKind::Precondition, "hyperbolic basis needs signature 0");
  }
  return lagrangian_frame(f, budget);
}

SymplecticBasis frame_from_lagrangian(const BilinearForm& f,
                                      const std::vector<IntVector>& lagrangian) {
  require_unimodular(f);
  const Index r = f.rank();
  const Index k = static_cast<Index>(lagrangian.size());
  if (2 * k != r) fail(ErrorKind::Precondition, "Lagrangian must have half rank");
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) {
      if (f(lagrangian[i], lagrangian[j]) != 0) {
        fail(ErrorKind::Precondition, "generators are not isotropic");
      }
    }
  }
  const IntMatrix phi = dual_functionals(lagrangian, r);
  SymplecticBasis out;
  out.lambdas = lagrangian;
  for (Index j = 0; j < k; ++j) {
    // f(lambda_i, mu_j) = epsilon * f(mu_j, lambda_i) = phi_j(lambda_i).
    IntVector mu = solve_dual(f, phi.row(j).transpose());
    if (f.epsilon() == -1) mu = -mu;
    out.mus.push_back(std::move(mu));
  }
  // mu_j -= sum_a c_aj lambda_a, chosen so the mu pairings vanish where the
  // form allows it (symmetric diagonal only up to parity).
  IntMatrix gram(k, k);
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) gram(i, j) = f(out.mus[i], out.mus[j]);
  }
  IntMatrix c = IntMatrix::Zero(k, k);
  for (Index i = 0; i < k; ++i) {
    for (Index j = i + 1; j < k; ++j) {
      if (f.is_symmetric()) {
        c(i, j) = gram(i, j);
      } else {
        c(j, i) = gram(i, j);
      }
    }
    if (f.is_symmetric()) c(i, i) = floor_div(gram(i, i), 2);
  }
  std::vector<IntVector> adjusted = out.mus;
  for (Index j = 0; j < k; ++j) {
    for (Index a = 0; a < k; ++a) {
      if (c(a, j) != 0) adjusted[j] -= c(a, j) * out.lambdas[a];
    }
  }
  out.mus = std::move(adjusted);
  return out;
}

}  // namespace hcm
