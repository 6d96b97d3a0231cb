#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "gkit/dsl.hpp"
#include "gkit/ginzburg.hpp"

namespace gkit {

inline constexpr const char* kSchema = "ginzburg-kit/1";
inline constexpr const char* kVersion = "0.1.0";

enum ExitCode { kExitOk = 0, kExitCheckFailed = 1, kExitInputError = 2 };

/// Exit code an uncaught error maps to.
ExitCode exit_code_for(ErrorKind kind);

struct JobResult {
  nlohmann::json report;
  int exit_code = kExitOk;
};

/// Ginzburg presentation of the job with its differential overrides applied.
DGPresentation presentation(const JobSpec& spec);

JobResult run_job(const JobSpec& spec, std::optional<unsigned> seed = std::nullopt);
/// Parses and runs; parse errors become structured error reports.
JobResult run_text(const std::string& text, std::optional<unsigned> seed = std::nullopt);

}  // namespace gkit
