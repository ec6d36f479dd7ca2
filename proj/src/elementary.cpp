#include <hcm/elementary.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace hcm {

namespace {

// Which component of a group element carries the Arf-relevant bit.
int arf_component(const IntersectionTriple& t) {
  const QuadraticData& nu = t.nu();
  switch (nu.group.kind()) {
    case GroupKind::OrderTwo: return 0;
    case GroupKind::OrderTwoSquared: return 1 - nu.stable_component;
    default: break;
  }
  fail(ErrorKind::MismatchedData, "the Arf invariant needs values in Z2 or Z2xZ2");
}

Int component(const GroupElement& g, int c) { return c == 0 ? g.first : g.second; }

Int nu_bit(const IntersectionTriple& t, const IntVector& x, int c) {
  return component(eval_nu(t, x), c);
}

LagrangianWitness verified(const IntersectionTriple& t,
                           std::vector<IntVector> generators,
                           const char* construction) {
  const WitnessReport report = verify_witness(t, generators);
  if (!report.ok) {
    fail(ErrorKind::InternalConstruction,
         std::string(construction) + " produced a witness failing check '" +
             report.failed + "'");
  }
  return {std::move(generators), report.checks};
}

// Pairs (lambda_i, mu_i) with Lambda(lambda_i, mu_i) = 1, mutually orthogonal.
// Returns Lagrangian generators on which bit c of nu vanishes: (1,0) pairs are
// swapped, (1,1) pairs are either fixed individually (linear skew case) or
// combined two at a time.
std::vector<IntVector> normalize_pairs(const IntersectionTriple& t,
                                       std::vector<IntVector> lambdas,
                                       std::vector<IntVector> mus, int c) {
  const bool skew = !t.form().is_symmetric();
  const bool linear = component(t.nu().boundary_element, c) == 0;
  std::vector<IntVector> out;
  std::vector<std::size_t> both;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const Int a = nu_bit(t, lambdas[i], c);
    const Int b = nu_bit(t, mus[i], c);
    if (a == 0) {
      out.push_back(lambdas[i]);
    } else if (b == 0) {
      out.push_back(mus[i]);
    } else if (linear && skew) {
      out.push_back(lambdas[i] + mus[i]);
    } else {
      both.push_back(i);
    }
  }
  if (both.size() % 2 != 0) {
    fail(ErrorKind::Precondition, "Arf invariant is nonzero");
  }
  for (std::size_t p = 0; p < both.size(); p += 2) {
    const std::size_t i = both[p];
    const std::size_t j = both[p + 1];
    out.push_back(lambdas[i] + lambdas[j]);
    out.push_back(mus[i] - mus[j]);
  }
  return out;
}

IntVector mod2(const IntVector& v) {
  return v.unaryExpr([](const Int& x) { return mod_floor(x, 2); });
}

}  // namespace

WitnessReport verify_witness(const IntersectionTriple& t,
                             const std::vector<IntVector>& generators) {
  WitnessReport report;
  const Index r = t.rank();
  const std::size_t k = generators.size();

  WitnessCheck count{"count", 2 * static_cast<Index>(k) == r, ""};
  if (!count.passed) {
    count.detail = std::to_string(k) + " generators for rank " + std::to_string(r);
  }
  for (const IntVector& g : generators) {
    if (g.size() != r) {
      count.passed = false;
      count.detail = "generator length does not match rank";
    }
  }
  report.checks.push_back(count);
  if (!count.passed) {
    report.failed = count.name;
    return report;
  }

  WitnessCheck iso{"isotropic", true, ""};
  for (std::size_t i = 0; i < k && iso.passed; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      if (t.form()(generators[i], generators[j]) != 0) {
        iso.passed = false;
        iso.detail = "Lambda(g" + std::to_string(i + 1) + ", g" +
                     std::to_string(j + 1) + ") != 0";
        break;
      }
    }
  }
  report.checks.push_back(iso);

  const CoefficientGroup& group = t.group();
  WitnessCheck null{"nu_null", true, ""};
  for (std::size_t i = 0; i < k && null.passed; ++i) {
    if (!group.is_zero(eval_nu(t, generators[i]))) {
      null.passed = false;
      null.detail = "nu(g" + std::to_string(i + 1) + ") != 0";
      break;
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!group.is_zero(eval_nu(t, generators[i] + generators[j]))) {
        null.passed = false;
        null.detail = "nu(g" + std::to_string(i + 1) + " + g" +
                      std::to_string(j + 1) + ") != 0";
        break;
      }
    }
  }
  report.checks.push_back(null);

  WitnessCheck summand{"direct_summand", spans_direct_summand(generators, r), ""};
  if (!summand.passed) summand.detail = "span is not a direct summand of rank " +
                                        std::to_string(k);
  report.checks.push_back(summand);

  for (const WitnessCheck& c : report.checks) {
    if (!c.passed) {
      report.failed = c.name;
      return report;
    }
  }
  report.ok = true;
  return report;
}

int elementary_case(const IntersectionTriple& t) {
  const QuadraticData& nu = t.nu();
  if (t.n() % 2 == 0) {
    const CoefficientGroup expected = pi_bo(t.n());
    if (!nu.stable) {
      fail(ErrorKind::InsufficientInput,
           "even n is decided from the stable normal map; mark nu as stable");
    }
    if (nu.group != expected) {
      fail(ErrorKind::MismatchedData,
           "stable nu must take values in pi_n(BO) = " +
               std::string(group_kind_name(expected.kind())));
    }
    switch (expected.kind()) {
      case GroupKind::Trivial: return 1;
      case GroupKind::IntegerCyclic: return 2;
      case GroupKind::OrderTwo: return 3;
      case GroupKind::OrderTwoSquared: break;
    }
    fail(ErrorKind::InternalConstruction, "pi_n(BO) is never Z2xZ2");
  }
  if (nu.group.kind() == GroupKind::Trivial) return 4;
  if (nu.stable) {
    fail(ErrorKind::InsufficientInput,
         "odd n needs the unstable normal map nu with values in pi_{n-1}(SO_n)");
  }
  switch (nu.group.kind()) {
    case GroupKind::OrderTwo: return 5;
    case GroupKind::OrderTwoSquared: {
      const int s = nu.stable_component;
      const GroupElement& d = nu.boundary_element;
      if (component(d, s) != 0 || component(d, 1 - s) != 1) {
        fail(ErrorKind::Unsupported,
             "Z2xZ2 data needs d(1) zero on the stable component and nonzero "
             "on the other");
      }
      return 6;
    }
    default: break;
  }
  fail(ErrorKind::Unsupported, "no case for odd n with values in " +
                                   std::string(group_kind_name(nu.group.kind())));
}

Int arf_invariant(const IntersectionTriple& t, const SymplecticBasis& basis) {
  const int c = arf_component(t);
  Int sum = 0;
  for (Index i = 0; i < basis.half_rank(); ++i) {
    sum += nu_bit(t, basis.lambdas[i], c) * nu_bit(t, basis.mus[i], c);
  }
  return mod_floor(sum, 2);
}

CharacteristicElement characteristic_element(const IntersectionTriple& t) {
  const QuadraticData& nu = t.nu();
  if (!nu.stable || nu.group.kind() != GroupKind::IntegerCyclic) {
    fail(ErrorKind::MismatchedData,
         "the characteristic element needs a stable nu with values in Z");
  }
  IntVector phi(t.rank());
  for (Index i = 0; i < t.rank(); ++i) phi(i) = nu.basis_values[i].first;
  IntVector kappa = solve_dual(t.form(), phi);
  Int square = t.form()(kappa, kappa);
  return {std::move(kappa), std::move(square)};
}

IntVector characteristic_element_mod2(const IntersectionTriple& t) {
  const QuadraticData& nu = t.nu();
  if (nu.group.kind() != GroupKind::OrderTwoSquared) {
    fail(ErrorKind::MismatchedData, "the mod 2 characteristic element needs Z2xZ2 data");
  }
  IntVector phi(t.rank());
  for (Index i = 0; i < t.rank(); ++i) {
    phi(i) = component(nu.basis_values[i], nu.stable_component);
  }
  return mod2(solve_dual(t.form(), phi));
}

LagrangianWitness witness_case2(const IntersectionTriple& t,
                                const SymplecticBasis& basis,
                                const IntVector& kappa) {
  std::vector<IntVector> lambdas = basis.lambdas;
  std::vector<IntVector> mus = basis.mus;
  const Index k = basis.half_rank();
  if (k == 0) return verified(t, {}, "case 2");
  auto value = [&t](const IntVector& x) { return eval_nu(t, x).first; };

  // Euclid on the values s nu(lambda_i) by transvections
  // lambda_j += c lambda_p, mu_p -= c mu_j.
  while (true) {
    Index pivot = -1;
    Index nonzero = 0;
    for (Index i = 0; i < k; ++i) {
      const Int v = value(lambdas[i]);
      if (v == 0) continue;
      ++nonzero;
      if (pivot < 0 || abs(v) < abs(value(lambdas[pivot]))) pivot = i;
    }
    if (nonzero <= 1) {
      if (pivot > 0) {
        std::swap(lambdas[0], lambdas[pivot]);
        std::swap(mus[0], mus[pivot]);
      }
      break;
    }
    const Int vp = value(lambdas[pivot]);
    for (Index j = 0; j < k; ++j) {
      if (j == pivot) continue;
      const Int c = -(value(lambdas[j]) / vp);
      if (c == 0) continue;
      lambdas[j] += c * lambdas[pivot];
      mus[pivot] -= c * mus[j];
    }
  }

  const std::vector<IntVector> rest(lambdas.begin() + 1, lambdas.end());
  std::vector<IntVector> with_kappa = rest;
  with_kappa.push_back(kappa);
  const Index r = t.rank();
  const SmithForm smith = smith_form(stack_columns(with_kappa, r));
  if (static_cast<Index>(smith.invariants.size()) < k) {
    return verified(t, std::move(lambdas), "case 2");
  }
  if (kappa.size() > 0 && content(kappa) != 0) {
    std::vector<IntVector> reduced = rest;
    reduced.push_back(primitive_reduce(kappa).vector);
    if (spans_direct_summand(reduced, r)) return verified(t, std::move(reduced), "case 2");
  }
  return verified(t, saturate(with_kappa, r), "case 2");
}

LagrangianWitness witness_case3(const IntersectionTriple& t,
                                const SymplecticBasis& basis) {
  const int c = arf_component(t);
  return verified(t, normalize_pairs(t, basis.lambdas, basis.mus, c), "case 3");
}

namespace {

ElementaryVerdict yes(int case_used, LagrangianWitness w) {
  return {true, case_used, std::move(w), std::nullopt};
}

ElementaryVerdict no(int case_used, std::string name, Int value) {
  return {false, case_used, std::nullopt, Obstruction{std::move(name), std::move(value)}};
}

ElementaryVerdict decide_case6(const IntersectionTriple& t) {
  const int u = 1 - t.nu().stable_component;
  const IntVector kappa = characteristic_element_mod2(t);
  const bool kappa_zero = kappa.isZero();
  const SymplecticBasis basis =
      kappa_zero ? symplectic_basis_skew(t.form())
                 : symplectic_basis_skew(t.form(), kappa);
  const Int phi = arf_invariant(t, basis);
  if (phi != 0) return no(6, "arf", phi);
  const Int at_kappa = nu_bit(t, kappa, u);
  if (at_kappa != 0) return no(6, "pr2_nu_kappa", at_kappa);
  if (kappa_zero) {
    return yes(6, verified(t, normalize_pairs(t, basis.lambdas, basis.mus, u), "case 6"));
  }
  // lambda_1 = kappa; the stable part vanishes on kappa and on pairs 2..k.
  std::vector<IntVector> lambdas(basis.lambdas.begin() + 1, basis.lambdas.end());
  std::vector<IntVector> mus(basis.mus.begin() + 1, basis.mus.end());
  std::vector<IntVector> generators{kappa};
  for (IntVector& g : normalize_pairs(t, std::move(lambdas), std::move(mus), u)) {
    generators.push_back(std::move(g));
  }
  return yes(6, verified(t, std::move(generators), "case 6"));
}

}  // namespace

ElementaryVerdict decide_elementary(const IntersectionTriple& t,
                                    const SearchBudget& budget) {
  const int which = elementary_case(t);
  if (which == 3 && form_type(t.form()) != FormType::II) {
    fail(ErrorKind::Unsupported, "case (3) is only defined for type II forms");
  }
  if (t.rank() == 0) return yes(which, verified(t, {}, "rank 0"));
  if (!t.form().is_unimodular()) {
    fail(ErrorKind::DegenerateForm, "the decider needs a unimodular form");
  }

  if (which <= 3) {
    const Inertia in = signature(t.form());
    if (in.signature() != 0) return no(which, "signature", in.signature());
  }
  switch (which) {
    case 1: {
      const SymplecticBasis frame = lagrangian_frame(t.form(), budget);
      return yes(1, verified(t, frame.lambdas, "case 1"));
    }
    case 2: {
      const CharacteristicElement ce = characteristic_element(t);
      if (ce.kappa_squared != 0) return no(2, "kappa_squared", ce.kappa_squared);
      const SymplecticBasis frame = lagrangian_frame(t.form(), budget);
      return yes(2, witness_case2(t, frame, ce.kappa));
    }
    case 3: {
      const SymplecticBasis basis = hyperbolic_basis_symmetric(t.form(), budget);
      const Int phi = arf_invariant(t, basis);
      if (phi != 0) return no(3, "arf", phi);
      return yes(3, witness_case3(t, basis));
    }
    case 4: {
      const SymplecticBasis basis = symplectic_basis_skew(t.form());
      return yes(4, verified(t, basis.lambdas, "case 4"));
    }
    case 5: {
      const SymplecticBasis basis = symplectic_basis_skew(t.form());
      if (t.nu().boundary_element.first != 0) {
        const Int phi = arf_invariant(t, basis);
        if (phi != 0) return no(5, "arf", phi);
      }
      return yes(5, witness_case3(t, basis));
    }
    case 6:
      return decide_case6(t);
    default:
      break;
  }
  fail(ErrorKind::InternalConstruction, "unknown case");
}

// ---------------------------------------------------------------------------
// Brute-force oracle

namespace {

constexpr long kSmallEntry = 1L << 20;

long gcd_all(const std::vector<long>& x) {
  long g = 0;
  for (long v : x) g = std::gcd(g, v);
  return g;
}

IntVector to_vector(const std::vector<long>& x) {
  IntVector v(static_cast<Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) v(static_cast<Index>(i)) = x[i];
  return v;
}

long det_small(std::vector<std::vector<long>> a) {
  // Exact for the tiny minors used here (entries <= radius, size <= 4).
  const std::size_t n = a.size();
  long sign = 1;
  long previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
      }
      a[i][k] = 0;
    }
    previous = a[k][k];
  }
  return n == 0 ? 1 : sign * a[n - 1][n - 1];
}

// gcd of all maximal minors == 1, for a handful of short vectors.
bool summand_small(const std::vector<const std::vector<long>*>& vs, std::size_t r) {
  const std::size_t k = vs.size();
  std::vector<std::size_t> rows(k);
  std::iota(rows.begin(), rows.end(), 0);
  long g = 0;
  while (true) {
    std::vector<std::vector<long>> m(k, std::vector<long>(k));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) m[a][b] = (*vs[b])[rows[a]];
    }
    g = std::gcd(g, det_small(std::move(m)));
    if (g == 1) return true;
    std::size_t i = k;
    while (i > 0 && rows[i - 1] == r - k + i - 1) --i;
    if (i == 0) break;
    ++rows[i - 1];
    for (std::size_t j = i; j < k; ++j) rows[j] = rows[j - 1] + 1;
  }
  return false;
}

}  // namespace

LagrangianOracle::LagrangianOracle(const BilinearForm& form, int radius)
    : form_(form) {
  const Index r = form.rank();
  for (Index i = 0; i < r && small_; ++i) {
    for (Index j = 0; j < r; ++j) {
      if (abs(form(i, j)) > kSmallEntry) {
        small_ = false;
        break;
      }
    }
  }
  small_ = small_ && r <= 8 && radius <= 64;
  if (r == 0 || radius < 1) return;

  Matrix<long> g;
  if (small_) g = form.matrix().unaryExpr([](const Int& v) { return v.convert_to<long>(); });
  auto pair = [&](const std::vector<long>& x, const std::vector<long>& y) -> Int {
    if (small_) {
      long s = 0;
      for (Index i = 0; i < r; ++i) {
        if (x[i] == 0) continue;
        long row = 0;
        for (Index j = 0; j < r; ++j) row += g(i, j) * y[j];
        s += x[i] * row;
      }
      return s;
    }
    return form(to_vector(x), to_vector(y));
  };

  // Lexicographic box enumeration, keeping vectors whose first nonzero entry
  // is positive.
  std::vector<long> x(static_cast<std::size_t>(r), -radius);
  while (true) {
    std::size_t lead = 0;
    while (lead < x.size() && x[lead] == 0) ++lead;
    if (lead < x.size() && x[lead] > 0 && gcd_all(x) == 1 && pair(x, x) == 0) {
      candidates_.push_back(x);
    }
    std::size_t i = x.size();
    while (i > 0 && x[i - 1] == radius) {
      x[i - 1] = -radius;
      --i;
    }
    if (i == 0) break;
    ++x[i - 1];
  }
  orthogonal_.resize(candidates_.size());
  for (std::size_t a = 0; a < candidates_.size(); ++a) {
    for (std::size_t b = a + 1; b < candidates_.size(); ++b) {
      if (pair(candidates_[a], candidates_[b]) == 0) orthogonal_[a].push_back(b);
    }
  }
}

std::optional<LagrangianWitness> LagrangianOracle::search(
    const IntersectionTriple& t) const {
  if (!(t.form() == form_)) {
    fail(ErrorKind::MismatchedData, "oracle was built for a different form");
  }
  const Index r = t.rank();
  if (r % 2 != 0) return std::nullopt;
  const std::size_t k = static_cast<std::size_t>(r / 2);
  if (k == 0) return LagrangianWitness{{}, verify_witness(t, {}).checks};

  // nu-null candidates.
  const CoefficientGroup& group = t.group();
  std::vector<char> null(candidates_.size(), 0);
  bool linear_small = small_;
  std::vector<long> v1, v2;
  long d1 = 0, d2 = 0;
  if (linear_small) {
    for (const GroupElement& e : t.nu().basis_values) {
      if (abs(e.first) > kSmallEntry || abs(e.second) > kSmallEntry) linear_small = false;
      v1.push_back(linear_small ? e.first.convert_to<long>() : 0);
      v2.push_back(linear_small ? e.second.convert_to<long>() : 0);
    }
    const GroupElement& d = t.nu().boundary_element;
    if (abs(d.first) > kSmallEntry || abs(d.second) > kSmallEntry) linear_small = false;
    if (linear_small) {
      d1 = d.first.convert_to<long>();
      d2 = d.second.convert_to<long>();
    }
  }
  Matrix<long> g;
  if (linear_small) g = form_.matrix().unaryExpr([](const Int& v) { return v.convert_to<long>(); });
  for (std::size_t a = 0; a < candidates_.size(); ++a) {
    const std::vector<long>& x = candidates_[a];
    if (linear_small) {
      long l1 = 0, l2 = 0, q = 0;
      for (Index i = 0; i < r; ++i) {
        if (x[i] == 0) continue;
        l1 += x[i] * v1[i];
        l2 += x[i] * v2[i];
        q += x[i] * (x[i] - 1) / 2 * g(i, i);
        for (Index j = i + 1; j < r; ++j) q += x[i] * x[j] * g(i, j);
      }
      const GroupElement value = group.reduce({Int(l1) + Int(q) * d1, Int(l2) + Int(q) * d2});
      null[a] = group.is_zero(value);
    } else {
      null[a] = group.is_zero(eval_nu(t, to_vector(x)));
    }
  }

  // Depth-first search in candidate order; each new vector must be nu-null,
  // orthogonal to the chosen ones and keep the span a direct summand.
  std::vector<std::size_t> chosen;
  std::vector<const std::vector<long>*> vectors;
  std::optional<LagrangianWitness> found;

  auto extends = [&](std::size_t b) {
    for (std::size_t a : chosen) {
      if (!std::binary_search(orthogonal_[a].begin(), orthogonal_[a].end(), b)) {
        return false;
      }
    }
    vectors.push_back(&candidates_[b]);
    bool ok = true;
    if (r <= 8) {
      ok = summand_small(vectors, static_cast<std::size_t>(r));
    } else {
      std::vector<IntVector> gens;
      for (const auto* v : vectors) gens.push_back(to_vector(*v));
      ok = spans_direct_summand(gens, r);
    }
    vectors.pop_back();
    return ok;
  };

  auto dfs = [&](auto&& self, std::size_t from) -> bool {
    if (chosen.size() == k) {
      std::vector<IntVector> gens;
      for (std::size_t a : chosen) gens.push_back(to_vector(candidates_[a]));
      WitnessReport report = verify_witness(t, gens);
      if (!report.ok) return false;
      found = LagrangianWitness{std::move(gens), std::move(report.checks)};
      return true;
    }
    auto visit = [&](std::size_t b) {
      if (!null[b] || !extends(b)) return false;
      chosen.push_back(b);
      vectors.push_back(&candidates_[b]);
      const bool done = self(self, b + 1);
      vectors.pop_back();
      chosen.pop_back();
      return done;
    };
    if (chosen.empty()) {
      for (std::size_t b = from; b < candidates_.size(); ++b) {
        if (visit(b)) return true;
      }
      return false;
    }
    // Later vectors are drawn from the neighbours of the last chosen one.
    for (std::size_t b : orthogonal_[chosen.back()]) {
      if (visit(b)) return true;
    }
    return false;
  };
  dfs(dfs, 0);
  return found;
}

std::optional<LagrangianWitness> brute_force_lagrangian(const IntersectionTriple& t,
                                                        int radius) {
  return LagrangianOracle(t.form(), radius).search(t);
}

}  // namespace hcm
