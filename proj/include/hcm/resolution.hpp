#pragma once

#include <hcm/triple.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hcm {

/// A Stiefel-Whitney monomial w_{i_1} ... w_{i_r}, stored as the partition
/// (i_1 >= ... >= i_r) of its degree.
using Partition = std::vector<int>;

/// "w1^2 w2" <-> {2, 1, 1}; the empty partition is written "1".
std::string monomial_name(const Partition& p);
std::optional<Partition> parse_monomial(const std::string& name);
/// All partitions of `degree`, largest part first, in decreasing lex order.
std::vector<Partition> partitions(int degree);

struct LinkDescriptor {
  std::string name;
  long dim = 0;
  bool orientable = false;
  bool parallelizable = false;
  std::optional<bool> bounds_parallelizable;
  std::optional<std::map<Partition, int>> sw_numbers;
  std::optional<bool> known_bordism_trivial;
  std::optional<bool> lift_bordism_trivial;
};

/// Throws MalformedInput when the SW table does not cover exactly the
/// partitions of dim, holds a value other than 0/1, or a parallelizable link
/// is declared non-orientable.
void validate_link(const LinkDescriptor& link);

enum class Existence { Yes, No, Undecidable };
std::string_view existence_name(Existence e);

struct LinkFinding {
  std::string link;
  Existence status = Existence::Undecidable;
  std::string rule;
  std::string detail;
};

struct ResolutionVerdict {
  Existence exists = Existence::Undecidable;
  std::string rule;
  std::vector<LinkFinding> links;
  std::vector<std::string> remarks;
};

/// Resolution exists iff every link bounds (unoriented bordism). Rules per
/// link: known assertion, vanishing bordism group in dimensions 1 and 3,
/// Stiefel-Whitney numbers, otherwise undecidable. `n` is the stratifold
/// dimension.
ResolutionVerdict check_resolution_exists(const std::vector<LinkDescriptor>& links,
                                          long n);

/// Optimal resolutions. Rules per link: n = 4 (orientability), parallelizable
/// link with parallelizable null-bordism, user-supplied lift verdict,
/// otherwise undecidable.
ResolutionVerdict check_optimal_resolution(const std::vector<LinkDescriptor>& links,
                                           long n);

/// M / S^1 for a semi-free circle action with isolated fixed points.
ResolutionVerdict check_s1_quotient(long dim_m, bool semi_free,
                                    bool isolated_fixed_points);

struct NeighborhoodDescriptor {
  IntersectionTriple triple;
  Int euler;
  Int index;
  std::string boundary_structure_id;
  std::optional<bool> spin;
};

/// Throws MalformedInput unless euler matches the triple.
void validate_neighborhood(const NeighborhoodDescriptor& d);

struct NeighborhoodPair {
  NeighborhoodDescriptor first;
  NeighborhoodDescriptor second;
  /// Closed triple of first cup_boundary second; computed by gluing when absent.
  std::optional<IntersectionTriple> glued;
};

enum class Classification {
  AlmostEquivalent,
  StablyAlmostEquivalent,
  TopologicallyEquivalentStably,
  ConditionsFailed
};
std::string_view classification_name(Classification c);

struct ConditionResult {
  std::string name;  // "euler", "index", "boundary", "elementary", "signature"
  bool passed = false;
  std::string detail;
};

struct SingularityReport {
  std::vector<ConditionResult> conditions;
};

struct ClassificationReport {
  Classification verdict = Classification::ConditionsFailed;
  std::string k_range;
  /// "singularity <i>: <condition>", in input order.
  std::vector<std::string> failed_conditions;
  std::vector<SingularityReport> per_singularity;
};

/// Dimension 2n with n > 2.
ClassificationReport classify_resolutions(const std::vector<NeighborhoodPair>& pairs,
                                          long n);

/// Dimension 4 (n = 2), both resolutions spin.
ClassificationReport classify_resolutions_dim4(const std::vector<NeighborhoodPair>& pairs);

}  // namespace hcm
