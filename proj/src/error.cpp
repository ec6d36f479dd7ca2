#include <hcm/error.hpp>

namespace hcm {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::WrongSymmetry: return "wrong-symmetry";
    case ErrorKind::DegenerateForm: return "degenerate-form";
    case ErrorKind::NotInvertibleOverIntegers: return "not-invertible-over-integers";
    case ErrorKind::NoPrimitivePart: return "no-primitive-part";
    case ErrorKind::IndexUndefined: return "index-undefined";
    case ErrorKind::MismatchedData: return "mismatched-data";
    case ErrorKind::UnsupportedGluing: return "unsupported-gluing";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::SearchBudget: return "search-budget";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::InsufficientInput: return "insufficient-input";
    case ErrorKind::InternalConstruction: return "internal-construction";
    case ErrorKind::NontrivialNormalBundle: return "nontrivial-normal-bundle";
    case ErrorKind::NotElementary: return "not-elementary";
    case ErrorKind::MalformedInput: return "malformed-input";
  }
  return "unknown";
}

}  // namespace hcm
