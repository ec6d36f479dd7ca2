#include <hcm/coefficients.hpp>
#include <hcm/error.hpp>

#include <sstream>

namespace hcm {

std::string_view group_kind_name(GroupKind kind) {
  switch (kind) {
    case GroupKind::Trivial: return "0";
    case GroupKind::IntegerCyclic: return "Z";
    case GroupKind::OrderTwo: return "Z2";
    case GroupKind::OrderTwoSquared: return "Z2xZ2";
  }
  return "?";
}

std::optional<GroupKind> parse_group_kind(std::string_view name) {
  for (GroupKind k : {GroupKind::Trivial, GroupKind::IntegerCyclic,
                      GroupKind::OrderTwo, GroupKind::OrderTwoSquared}) {
    if (group_kind_name(k) == name) return k;
  }
  return std::nullopt;
}

std::optional<int> CoefficientGroup::order() const {
  switch (kind_) {
    case GroupKind::Trivial: return 1;
    case GroupKind::IntegerCyclic: return std::nullopt;
    case GroupKind::OrderTwo: return 2;
    case GroupKind::OrderTwoSquared: return 4;
  }
  return std::nullopt;
}

int CoefficientGroup::components() const {
  switch (kind_) {
    case GroupKind::Trivial: return 0;
    case GroupKind::IntegerCyclic:
    case GroupKind::OrderTwo: return 1;
    case GroupKind::OrderTwoSquared: return 2;
  }
  return 0;
}

GroupElement CoefficientGroup::reduce(GroupElement a) const {
  switch (kind_) {
    case GroupKind::Trivial: return {};
    case GroupKind::IntegerCyclic: return {a.first, 0};
    case GroupKind::OrderTwo: return {mod_floor(a.first, 2), 0};
    case GroupKind::OrderTwoSquared:
      return {mod_floor(a.first, 2), mod_floor(a.second, 2)};
  }
  return {};
}

bool CoefficientGroup::contains(const GroupElement& a) const {
  return reduce(a) == a;
}

GroupElement CoefficientGroup::add(const GroupElement& a,
                                   const GroupElement& b) const {
  return reduce({a.first + b.first, a.second + b.second});
}

GroupElement CoefficientGroup::negate(const GroupElement& a) const {
  return reduce({-a.first, -a.second});
}

GroupElement CoefficientGroup::multiply(const Int& n,
                                        const GroupElement& a) const {
  return reduce({n * a.first, n * a.second});
}

std::vector<GroupElement> CoefficientGroup::elements() const {
  switch (kind_) {
    case GroupKind::Trivial: return {GroupElement{}};
    case GroupKind::OrderTwo: return {{0, 0}, {1, 0}};
    case GroupKind::OrderTwoSquared: return {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    case GroupKind::IntegerCyclic: break;
  }
  fail(ErrorKind::Unsupported, "the infinite cyclic group cannot be enumerated");
}

std::string to_string(const CoefficientGroup& g, const GroupElement& a) {
  std::ostringstream os;
  switch (g.kind()) {
    case GroupKind::Trivial: os << 0; break;
    case GroupKind::IntegerCyclic:
    case GroupKind::OrderTwo: os << a.first; break;
    case GroupKind::OrderTwoSquared: os << '(' << a.first << ',' << a.second << ')'; break;
  }
  return os.str();
}

CoefficientGroup pi_bo(long n) {
  if (n < 1) fail(ErrorKind::Precondition, "pi_n(BO) is tabulated for n >= 1");
  return {HomotopyGroupTable::pi_bo(n)};
}

}  // namespace hcm
