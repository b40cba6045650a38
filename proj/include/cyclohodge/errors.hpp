#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclohodge {

/// Stable error identifiers. The string form is part of the CLI contract.
enum class ErrorCode {
  InvalidArgument,
  ResourceLimit,
  InvalidForm,
  SumNotZeroModN,
  FewerThanThreePoints,
  DuplicateLabel,
  DisconnectedCover,
  TrivialLocalMonodromy,
  NonIntegralGenus,
  InvalidRamification,
  NotFourPoints,
  ResonantInput,
  ConductorOverflow,
  GcdNotOne,
  InconsistentSpec,
  SchemaViolation,
  TableFormat,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cyclohodge
