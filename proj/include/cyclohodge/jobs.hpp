#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "cyclohodge/fibration.hpp"

namespace cyclohodge {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct JobOptions {
  std::int64_t bfs_bound = 20000;
  bool certify_infinite = true;
  std::string format = "json";
};

/// Rationals travel as "p/q" strings; plain JSON integers are also accepted.
Rational rational_from_json(const Json& j, const std::string& field);
Json to_json(const Rational& r);

BranchData branch_data_from_json(const Json& j);
HypergeometricParams params_from_json(const Json& j);
FibrationSpec fibration_spec_from_json(const Json& j);

Json to_json(const BranchData& b);
Json to_json(const EigenspaceTable& t);
Json to_json(const HypergeometricParams& p);
Json to_json(const CyclotomicNumber& x);
Json to_json(const Matrix2& m);
Json to_json(const MonodromyRep& r);
Json to_json(const FinitenessVerdict& v);
Json to_json(const GroupClosureReport& r);
Json to_json(const FinitenessReport& r);
Json to_json(const FujitaReport& r);
Json to_json(const KodairaCheck& k);

/// Parses a MonodromyRep exported by to_json.
MonodromyRep monodromy_rep_from_json(const Json& j);

struct CommandOutput {
  Json json;
  /// Filled when options.format == "text".
  std::string text;
};

/// Runs one command on its input body. Throws Error on invalid input.
CommandOutput run_command(const std::string& command, const Json& input, const JobOptions& options);

/// Validates a job {"command", "input", "options"} and runs it; the job's
/// options override `defaults`.
CommandOutput run_job(const Json& job, const JobOptions& defaults = {});

/// {"error": {"code", "message"}}.
Json error_json(const std::string& code, const std::string& message);

}  // namespace cyclohodge
