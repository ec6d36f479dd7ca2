#include <hcm/surgery.hpp>

namespace hcm {

namespace {

Int euler_delta(long n) { return n % 2 == 0 ? Int(-2) : Int(2); }

SymplecticBasis standard_frame(Index k) {
  SymplecticBasis b;
  for (Index i = 0; i < k; ++i) {
    b.lambdas.push_back(IntVector::Unit(2 * k, i));
    b.mus.push_back(IntVector::Unit(2 * k, k + i));
  }
  return b;
}

}  // namespace

IntersectionTriple surgery_step(const IntersectionTriple& t,
                                const SymplecticBasis& basis, Index r) {
  const BasisCheck frame = check_lagrangian_frame(t.form(), basis);
  if (!frame) fail(ErrorKind::Precondition, "surgery needs a frame: " + frame.failure);
  const Index k = basis.half_rank();
  if (r < 0 || r >= k) fail(ErrorKind::Dimension, "no pair with that index");
  if (!t.group().is_zero(eval_nu(t, basis.lambdas[r]))) {
    fail(ErrorKind::NontrivialNormalBundle,
         "nu(lambda_" + std::to_string(r + 1) + ") != 0: the sphere has a "
         "nontrivial normal bundle");
  }
  std::vector<IntVector> survivors;
  for (Index i = 0; i < k; ++i) {
    if (i != r) survivors.push_back(basis.lambdas[i]);
  }
  for (Index i = 0; i < k; ++i) {
    if (i != r) survivors.push_back(basis.mus[i]);
  }
  const IntersectionTriple moved = t.in_basis(stack_columns(survivors, t.rank()));
  return {t.n(), moved.form(), moved.nu(), t.euler() + euler_delta(t.n()),
          t.boundary()};
}

std::string check_surgery_step(const SurgeryStep& s) {
  if (s.after.rank() != s.before.rank() - 2) return "rank did not drop by 2";
  if (!s.after.form().is_unimodular()) return "result is not unimodular";
  if (s.after.euler() != s.before.euler() + euler_delta(s.before.n())) {
    return "euler characteristic bookkeeping";
  }
  const Index k = s.after.rank() / 2;
  const SymplecticBasis frame = standard_frame(k);
  const BasisCheck check = check_lagrangian_frame(s.after.form(), frame);
  if (!check) return "surviving classes: " + check.failure;
  // Surviving classes keep their products and nu values.
  std::vector<IntVector> old;
  for (Index i = 0; i < s.basis.half_rank(); ++i) {
    if (i != s.killed_pair) old.push_back(s.basis.lambdas[i]);
  }
  for (Index i = 0; i < s.basis.half_rank(); ++i) {
    if (i != s.killed_pair) old.push_back(s.basis.mus[i]);
  }
  for (std::size_t i = 0; i < old.size(); ++i) {
    const IntVector e = IntVector::Unit(s.after.rank(), static_cast<Index>(i));
    if (eval_nu(s.after, e) != eval_nu(s.before, old[i])) return "nu value changed";
    for (std::size_t j = 0; j < old.size(); ++j) {
      const IntVector f = IntVector::Unit(s.after.rank(), static_cast<Index>(j));
      if (s.after.form()(e, f) != s.before.form()(old[i], old[j])) {
        return "intersection number changed";
      }
    }
  }
  if (!s.before.group().is_zero(eval_nu(s.before, s.killed))) {
    return "killed class has nonzero nu";
  }
  return {};
}

SurgeryTrace reduce_to_sphere(const IntersectionTriple& t,
                              const SearchBudget& budget) {
  const ElementaryVerdict verdict = decide_elementary(t, budget);
  if (!verdict.elementary) {
    fail(ErrorKind::NotElementary,
         "not elementary: " + verdict.obstruction->name + " = " +
             verdict.obstruction->value.str());
  }
  SurgeryTrace trace;
  if (t.rank() == 0) return trace;
  SymplecticBasis basis = frame_from_lagrangian(t.form(), verdict.witness->generators);
  IntersectionTriple current = t;
  while (current.rank() > 0) {
    const Index r = basis.half_rank() - 1;
    IntersectionTriple next = surgery_step(current, basis, r);
    SurgeryStep step{current, basis, r, basis.lambdas[r], next};
    const std::string failure = check_surgery_step(step);
    if (!failure.empty()) fail(ErrorKind::InternalConstruction, "surgery step: " + failure);
    trace.steps.push_back(std::move(step));
    current = std::move(next);
    basis = standard_frame(current.rank() / 2);
  }
  return trace;
}

}  // namespace hcm
