#pragma once

#include <hcm/integer.hpp>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hcm {

/// The abelian groups that occur as pi_{n-1}(SO) or pi_{n-1}(SO_n).
enum class GroupKind { Trivial, IntegerCyclic, OrderTwo, OrderTwoSquared };

std::string_view group_kind_name(GroupKind kind);
std::optional<GroupKind> parse_group_kind(std::string_view name);

/// An element of one of the coefficient groups. Unused components stay zero:
/// Trivial uses none, IntegerCyclic and OrderTwo use `first`, OrderTwoSquared
/// uses both (each reduced mod 2).
struct GroupElement {
  Int first = 0;
  Int second = 0;

  bool operator==(const GroupElement&) const = default;
};

class CoefficientGroup {
 public:
  constexpr CoefficientGroup(GroupKind kind = GroupKind::Trivial)  // NOLINT
      : kind_(kind) {}

  GroupKind kind() const { return kind_; }
  bool is_finite() const { return kind_ != GroupKind::IntegerCyclic; }
  /// Number of elements; empty for the infinite cyclic group.
  std::optional<int> order() const;
  /// Number of components an element carries (0, 1 or 2).
  int components() const;

  GroupElement zero() const { return {}; }
  GroupElement reduce(GroupElement a) const;
  bool contains(const GroupElement& a) const;
  bool is_zero(const GroupElement& a) const { return reduce(a) == GroupElement{}; }

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement multiply(const Int& n, const GroupElement& a) const;

  /// Every element, in a fixed order (finite kinds only).
  std::vector<GroupElement> elements() const;

  bool operator==(const CoefficientGroup&) const = default;

 private:
  GroupKind kind_;
};

std::string to_string(const CoefficientGroup& g, const GroupElement& a);

/// Bott periodicity for the stable homotopy of the orthogonal group, indexed
/// by n mod 8. pi_n(BO) = pi_{n-1}(O), and pi_{n-1}(SO) agrees with it for
/// n >= 2.
struct HomotopyGroupTable {
  static constexpr std::array<GroupKind, 8> pi_bo_by_residue = {
      GroupKind::IntegerCyclic,  // n = 0 mod 8
      GroupKind::OrderTwo,       // 1
      GroupKind::OrderTwo,       // 2
      GroupKind::Trivial,        // 3
      GroupKind::IntegerCyclic,  // 4
      GroupKind::Trivial,        // 5
      GroupKind::Trivial,        // 6
      GroupKind::Trivial,        // 7
  };

  static constexpr GroupKind pi_bo(long n) {
    return pi_bo_by_residue[static_cast<std::size_t>(((n % 8) + 8) % 8)];
  }
  /// Stable pi_{n-1}(SO), the target of the stable normal bundle map.
  static constexpr GroupKind pi_stable_so(long n) { return pi_bo(n); }
};

static_assert(HomotopyGroupTable::pi_bo(4) == GroupKind::IntegerCyclic);
static_assert(HomotopyGroupTable::pi_bo(8) == GroupKind::IntegerCyclic);
static_assert(HomotopyGroupTable::pi_bo(9) == GroupKind::OrderTwo);

/// pi_n(BO) for n >= 1.
CoefficientGroup pi_bo(long n);

}  // namespace hcm
