#pragma once

#include <hcm/elementary.hpp>
#include <hcm/resolution.hpp>
#include <hcm/surgery.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hcm::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Malformed document; `pointer` is a JSON pointer to the offending field.
class InputError : public Error {
 public:
  InputError(std::string pointer, const std::string& message)
      : Error(ErrorKind::MalformedInput, "at " + (pointer.empty() ? "/" : pointer) +
                                             ": " + message),
        pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

struct Options {
  std::optional<int> radius;
  std::optional<int> budget;
};

struct TripleProblem {
  IntersectionTriple triple;
  Options options;
};

enum class ResolveRule { Existence, Optimal, CircleQuotient };

struct ResolveProblem {
  ResolveRule rule = ResolveRule::Existence;
  long n = 0;
  std::vector<LinkDescriptor> links;
  long dim_m = 0;
  bool semi_free = false;
  bool isolated_fixed_points = false;
};

enum class ClassifyRule { General, DimensionFour };

struct ClassifyProblem {
  ClassifyRule rule = ClassifyRule::General;
  long n = 0;
  std::vector<NeighborhoodPair> pairs;
};

/// Integers: JSON integers or decimal strings (arbitrary size).
Int read_int(const Json& j, const std::string& at);
Json write_int(const Int& v);

IntersectionTriple read_triple(const Json& j, const std::string& at);
Json write_triple(const IntersectionTriple& t);

LinkDescriptor read_link(const Json& j, const std::string& at);
Json write_link(const LinkDescriptor& link);

NeighborhoodDescriptor read_neighborhood(const Json& j, const std::string& at);
Json write_neighborhood(const NeighborhoodDescriptor& d);

TripleProblem read_triple_problem(const Json& doc);
Json write_triple_problem(const TripleProblem& p);
ResolveProblem read_resolve_problem(const Json& doc);
Json write_resolve_problem(const ResolveProblem& p);
ClassifyProblem read_classify_problem(const Json& doc);
Json write_classify_problem(const ClassifyProblem& p);

Json write_vector(const IntVector& v);
Json write_basis(const SymplecticBasis& b);
Json write_witness(const LagrangianWitness& w);
Json write_verdict(const ElementaryVerdict& v);
Json write_trace(const SurgeryTrace& trace);
Json write_resolution(const ResolutionVerdict& v);
Json write_classification(const ClassificationReport& r);

/// Indented JSON with arrays of scalars kept on one line; deterministic.
std::string pretty(const Json& j);

/// Parses JSON text; syntax errors become an InputError at the root.
Json parse_document(const std::string& text);

}  // namespace hcm::io
