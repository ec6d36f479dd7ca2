#include "oracles.hpp"

#include <doctest.h>

using namespace hcm;
using oracle::vec;

namespace {

const IntMatrix kH = to_int_matrix({{0, 1}, {1, 0}});
const IntMatrix kS = to_int_matrix({{0, 1}, {-1, 0}});

IntersectionTriple z_triple(const IntMatrix& g, std::vector<long> values) {
  return oracle::closed(4, g, oracle::stable_data(GroupKind::IntegerCyclic, std::move(values)));
}

IntersectionTriple z2_triple(const IntMatrix& g, std::vector<long> values) {
  return oracle::closed(2, g, oracle::stable_data(GroupKind::OrderTwo, std::move(values)));
}

IntersectionTriple skew_z2(const IntMatrix& g, std::vector<long> values, long d = 1) {
  std::vector<GroupElement> v;
  for (long x : values) v.push_back({x, 0});
  return oracle::closed(3, g, oracle::quadratic_data(GroupKind::OrderTwo, {d, 0}, v));
}

bool spans_same(const std::vector<IntVector>& a, const std::vector<IntVector>& b, Index r) {
  std::vector<IntVector> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return saturate(all, r).size() == a.size() && saturate(a, r).size() == a.size();
}

}  // namespace

TEST_CASE("Arf invariant examples") {
  const IntersectionTriple h = z2_triple(kH, {1, 1});
  CHECK(arf_invariant(h, hyperbolic_basis_symmetric(h.form())) == 1);
  CHECK(oracle::majority_arf(h, 2).value == 1);
  const IntersectionTriple zero = z2_triple(kH, {0, 0});
  CHECK(arf_invariant(zero, hyperbolic_basis_symmetric(zero.form())) == 0);
  const IntersectionTriple four = z2_triple(oracle::hyperbolic(2), {1, 1, 1, 1});
  CHECK(arf_invariant(four, hyperbolic_basis_symmetric(four.form())) == 0);
  CHECK(oracle::majority_arf(four, 1).value == 0);
  CHECK_THROWS_AS(arf_invariant(z_triple(kH, {1, 1}), hyperbolic_basis_symmetric(
                                                          BilinearForm::symmetric(kH))),
                  Error);
}

TEST_CASE("characteristic element") {
  CharacteristicElement ce = characteristic_element(z_triple(kH, {2, 0}));
  CHECK(ce.kappa == vec({0, 2}));
  CHECK(ce.kappa_squared == 0);
  ce = characteristic_element(z_triple(kH, {0, 0}));
  CHECK(ce.kappa.isZero());
  CHECK(ce.kappa_squared == 0);
  ce = characteristic_element(z_triple(to_int_matrix({{1, 0}, {0, -1}}), {1, 1}));
  CHECK(ce.kappa == vec({1, -1}));
  CHECK(ce.kappa_squared == 0);

  std::mt19937 rng(13);
  std::uniform_int_distribution<int> value(-5, 5);
  const IntMatrix forms[] = {kH, oracle::hyperbolic(2), oracle::e8_gram(),
                             to_int_matrix({{1, 0, 0}, {0, -1, 0}, {0, 0, 1}})};
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix& g = forms[trial % 4];
    std::vector<long> values;
    for (Index i = 0; i < g.rows(); ++i) values.push_back(value(rng));
    const IntersectionTriple t = z_triple(g, values);
    const CharacteristicElement c = characteristic_element(t);
    for (Index i = 0; i < g.rows(); ++i) {
      IntVector e = IntVector::Zero(g.rows());
      e(i) = 1;
      CHECK(oracle::pairing(g, c.kappa, e) == values[i]);
    }
    CHECK(c.kappa_squared == oracle::pairing(g, c.kappa, c.kappa));
  }
}

TEST_CASE("decider examples") {
  const IntersectionTriple e8 =
      oracle::closed(6, oracle::e8_gram(),
                     oracle::stable_data(GroupKind::Trivial, std::vector<long>(8, 0)));
  ElementaryVerdict v = decide_elementary(e8);
  CHECK_FALSE(v.elementary);
  CHECK(v.case_used == 1);
  REQUIRE(v.obstruction.has_value());
  CHECK(v.obstruction->name == "signature");
  CHECK(v.obstruction->value == 8);

  v = decide_elementary(z_triple(kH, {2, 0}));
  CHECK(v.elementary);
  CHECK(v.case_used == 2);
  REQUIRE(v.witness.has_value());
  REQUIRE(v.witness->generators.size() == 1);
  CHECK(v.witness->generators[0] == vec({0, 1}));

  v = decide_elementary(z_triple(kH, {1, 1}));
  CHECK_FALSE(v.elementary);
  CHECK(v.obstruction->name == "kappa_squared");
  CHECK(v.obstruction->value == 2);

  v = decide_elementary(skew_z2(kS, {1, 1}));
  CHECK_FALSE(v.elementary);
  CHECK(v.case_used == 5);
  CHECK(v.obstruction->name == "arf");
  CHECK(v.obstruction->value == 1);

  for (long n : {2L, 3L, 4L, 6L}) {
    const GroupKind k = n % 2 == 1 ? GroupKind::Trivial : pi_bo(n).kind();
    const IntersectionTriple empty =
        IntersectionTriple::empty(n, oracle::stable_data(k, {}), 2);
    v = decide_elementary(empty);
    CHECK(v.elementary);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->generators.empty());
  }
}

TEST_CASE("decider errors") {
  try {
    decide_elementary(z2_triple(to_int_matrix({{1, 0}, {0, -1}}), {1, 0}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unsupported);
  }
  QuadraticData stable = oracle::stable_data(GroupKind::OrderTwo, {0, 0});
  try {
    decide_elementary(oracle::closed(3, kS, stable));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InsufficientInput);
  }
  try {
    decide_elementary(oracle::closed(4, kH, oracle::stable_data(GroupKind::OrderTwo, {0, 0})));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MismatchedData);
  }
  const IntersectionTriple bad_v = oracle::closed(
      3, kS,
      oracle::quadratic_data(GroupKind::OrderTwoSquared, {1, 1}, {{0, 0}, {0, 0}}));
  CHECK_THROWS_AS(decide_elementary(bad_v), Error);
}

TEST_CASE("case 2 witnesses") {
  const IntersectionTriple h = z_triple(kH, {2, 0});
  const LagrangianWitness w =
      witness_case2(h, hyperbolic_basis_symmetric(h.form()), vec({0, 2}));
  REQUIRE(w.generators.size() == 1);
  CHECK(w.generators[0] == vec({0, 1}));

  const IntersectionTriple z = z_triple(oracle::hyperbolic(2), {0, 0, 0, 0});
  const SymplecticBasis zb = hyperbolic_basis_symmetric(z.form());
  CHECK(spans_same(witness_case2(z, zb, vec({0, 0, 0, 0})).generators, zb.lambdas, 4));

  const IntersectionTriple hh = z_triple(oracle::hyperbolic(2), {2, 0, 0, 0});
  const ElementaryVerdict v = decide_elementary(hh);
  CHECK(v.elementary);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->generators.size() == 2);
  CHECK(verify_witness(hh, v.witness->generators).ok);
  CHECK(brute_force_lagrangian(hh, 2).has_value());
}

TEST_CASE("case 3 witnesses") {
  const IntersectionTriple four = z2_triple(oracle::hyperbolic(2), {1, 1, 1, 1});
  const SymplecticBasis b{{vec({1, 0, 0, 0}), vec({0, 0, 1, 0})},
                          {vec({0, 1, 0, 0}), vec({0, 0, 0, 1})}};
  const LagrangianWitness w = witness_case3(four, b);
  REQUIRE(w.generators.size() == 2);
  CHECK(w.generators[0] == vec({1, 0, 1, 0}));
  CHECK(w.generators[1] == vec({0, 1, 0, -1}));

  const IntersectionTriple zero = z2_triple(oracle::hyperbolic(2), {0, 0, 0, 0});
  CHECK(witness_case3(zero, b).generators == b.lambdas);

  const IntersectionTriple six = z2_triple(oracle::hyperbolic(3), {1, 1, 0, 1, 1, 1});
  const LagrangianWitness w6 = witness_case3(six, hyperbolic_basis_symmetric(six.form()));
  CHECK(verify_witness(six, w6.generators).ok);

  try {
    witness_case3(z2_triple(kH, {1, 1}), hyperbolic_basis_symmetric(BilinearForm::symmetric(kH)));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Precondition);
  }
}

TEST_CASE("brute-force oracle") {
  const std::optional<LagrangianWitness> w = brute_force_lagrangian(z_triple(kH, {2, 0}), 1);
  REQUIRE(w.has_value());
  REQUIRE(w->generators.size() == 1);
  CHECK(w->generators[0] == vec({0, 1}));
  const IntersectionTriple e8 =
      oracle::closed(6, oracle::e8_gram(),
                     oracle::stable_data(GroupKind::Trivial, std::vector<long>(8, 0)));
  CHECK_FALSE(brute_force_lagrangian(e8, 2).has_value());
  const std::optional<LagrangianWitness> empty = brute_force_lagrangian(
      IntersectionTriple::empty(6, oracle::stable_data(GroupKind::Trivial, {}), 2), 3);
  REQUIRE(empty.has_value());
  CHECK(empty->generators.empty());
}

TEST_CASE("verify_witness") {
  const IntersectionTriple h = z_triple(kH, {2, 0});
  WitnessReport r = verify_witness(h, {vec({0, 1})});
  CHECK(r.ok);
  CHECK(r.failed.empty());
  CHECK(r.checks.size() == 4);

  const IntersectionTriple zero = z_triple(kH, {0, 0});
  r = verify_witness(zero, {vec({0, 2})});
  CHECK_FALSE(r.ok);
  CHECK(r.failed == "direct_summand");

  r = verify_witness(h, {vec({1, 0})});
  CHECK_FALSE(r.ok);
  CHECK(r.failed == "nu_null");

  r = verify_witness(zero, {vec({1, 1})});
  CHECK_FALSE(r.ok);
  CHECK(r.failed == "isotropic");

  r = verify_witness(zero, {vec({1, 0}), vec({0, 1})});
  CHECK_FALSE(r.ok);
  CHECK(r.failed == "count");

  // nu vanishes on each generator but not on their sum.
  const IntersectionTriple s = skew_z2(oracle::hyperbolic(2, -1), {0, 0, 0, 0});
  r = verify_witness(s, {vec({1, 0, 0, 0}), vec({0, 0, 1, 0})});
  CHECK(r.ok);
}

TEST_CASE("Arf invariant equals the majority value and ignores the basis") {
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 40; ++trial) {
    const Index k = 1 + trial % 3;
    const bool skew = trial % 2 == 1;
    std::vector<long> values;
    for (Index i = 0; i < 2 * k; ++i) values.push_back(bit(rng));
    const IntersectionTriple t = skew ? skew_z2(oracle::hyperbolic(k, -1), values)
                                      : z2_triple(oracle::hyperbolic(k), values);
    SymplecticBasis b = skew ? symplectic_basis_skew(t.form())
                             : hyperbolic_basis_symmetric(t.form());
    const Int phi = arf_invariant(t, b);
    const oracle::Majority m = oracle::majority_arf(t, 1);
    CHECK(phi == m.value);
    for (int move = 0; move < 30; ++move) {
      oracle::random_symplectic_move(b, skew ? -1 : 1, rng);
      REQUIRE(oracle::is_symplectic(t.form().matrix(), b));
      CHECK(arf_invariant(t, b) == phi);
    }
  }
}

TEST_CASE("decider verdict is invariant under change of basis") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> value(-2, 2);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 120; ++trial) {
    const Index k = 1 + trial % 2;
    IntersectionTriple t = z_triple(kH, {0, 0});
    switch (trial % 4) {
      case 0: {
        std::vector<long> v;
        for (Index i = 0; i < 2 * k; ++i) v.push_back(value(rng));
        t = z_triple(oracle::hyperbolic(k), v);
        break;
      }
      case 1: {
        std::vector<long> v;
        for (Index i = 0; i < 2 * k; ++i) v.push_back(bit(rng));
        t = z2_triple(oracle::hyperbolic(k), v);
        break;
      }
      case 2: {
        std::vector<long> v;
        for (Index i = 0; i < 2 * k; ++i) v.push_back(bit(rng));
        t = skew_z2(oracle::hyperbolic(k, -1), v, bit(rng));
        break;
      }
      default: {
        std::vector<GroupElement> v;
        for (Index i = 0; i < 2 * k; ++i) v.push_back({bit(rng), bit(rng)});
        t = oracle::closed(3, oracle::hyperbolic(k, -1),
                           oracle::quadratic_data(GroupKind::OrderTwoSquared, {0, 1}, v));
      }
    }
    const ElementaryVerdict v = decide_elementary(t);
    const IntersectionTriple moved = t.in_basis(oracle::random_unimodular(2 * k, rng));
    const ElementaryVerdict w = decide_elementary(moved);
    CHECK(v.elementary == w.elementary);
    if (v.obstruction && w.obstruction) CHECK(v.obstruction->name == w.obstruction->name);
    for (const ElementaryVerdict* x : {&v, &w}) {
      if (x->witness) {
        const IntersectionTriple& owner = x == &v ? t : moved;
        CHECK(verify_witness(owner, x->witness->generators).ok);
        for (const WitnessCheck& c : x->witness->verification) CHECK(c.passed);
      }
    }
    CHECK(v.elementary == brute_force_lagrangian(t, 2).has_value());
  }
}

TEST_CASE("Z2xZ2 characteristic element is well defined mod 2H") {
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const Index k = 1 + trial % 3;
    const int sc = trial % 2;
    std::vector<GroupElement> v;
    for (Index i = 0; i < 2 * k; ++i) v.push_back({bit(rng), bit(rng)});
    const GroupElement d = sc == 0 ? GroupElement{0, 1} : GroupElement{1, 0};
    const IntersectionTriple t =
        oracle::closed(3, oracle::hyperbolic(k, -1),
                       oracle::quadratic_data(GroupKind::OrderTwoSquared, d, v, sc));
    const IntVector kappa = characteristic_element_mod2(t);
    const IntMatrix& g = t.form().matrix();
    for (Index i = 0; i < 2 * k; ++i) {
      IntVector e = IntVector::Zero(2 * k);
      e(i) = 1;
      const GroupElement& value = v[i];
      const Int stable = sc == 0 ? value.first : value.second;
      CHECK(mod_floor(oracle::pairing(g, kappa, e), 2) == stable);
    }
    const auto unstable = [&](const IntVector& x) {
      const GroupElement e = oracle::inductive_nu(t, x);
      return sc == 0 ? e.second : e.first;
    };
    for (int shift = 0; shift < 5; ++shift) {
      IntVector h(2 * k);
      for (Index i = 0; i < 2 * k; ++i) h(i) = coef(rng);
      CHECK(unstable(IntVector(kappa + 2 * h)) == unstable(kappa));
    }
  }
}
