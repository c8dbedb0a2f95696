#pragma once

#include <functional>
#include <optional>
#include <string>

#include "json.hpp"
#include "modtwist/structure_file.hpp"

namespace modtwist::report {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kFailed = 1, kMalformed = 2 };

/// Exit code plus a machine-readable report. All coefficients in the report
/// are exact rational strings; vectors are label -> coefficient objects with
/// zero entries omitted, in basis order.
struct Outcome {
  int code = kOk;
  Json report;
  std::optional<StructureFile> file;  ///< set by commands that emit a structure
};

Outcome verify(const StructureFile& f);
Outcome modular(const StructureFile& f);
Outcome frobenius(const StructureFile& f);
Outcome linearize(const StructureFile& f);
Outcome relations(const StructureFile& f);
/// Without `check`, `file` holds the entry as a structure file.
Outcome catalog(const std::string& name, int n, bool check);

/// Runs one command, turning library exceptions into exit codes 1 and 2.
Outcome guarded(const std::string& command, const std::function<Outcome()>& body);

/// Human-readable rendering of a report.
std::string render_text(const Json& report);

}  // namespace modtwist::report
