#include "cyclohodge/errors.hpp"

namespace cyclohodge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::InvalidForm: return "InvalidForm";
    case ErrorCode::SumNotZeroModN: return "SumNotZeroModN";
    case ErrorCode::FewerThanThreePoints: return "FewerThanThreePoints";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::DisconnectedCover: return "DisconnectedCover";
    case ErrorCode::TrivialLocalMonodromy: return "TrivialLocalMonodromy";
    case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::InvalidRamification: return "InvalidRamification";
    case ErrorCode::NotFourPoints: return "NotFourPoints";
    case ErrorCode::ResonantInput: return "ResonantInput";
    case ErrorCode::ConductorOverflow: return "ConductorOverflow";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::InconsistentSpec: return "InconsistentSpec";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::TableFormat: return "TableFormat";
  }
  return "Unknown";
}

}  // namespace cyclohodge
