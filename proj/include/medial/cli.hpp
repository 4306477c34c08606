#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "medial/bisymmetry.hpp"

namespace medial::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kVerdict = 0,
  kUsage = 2,
  kResourceExceeded = 3,
  kDisagreement = 4,
};

/// The structured report for a verdict. Field order is fixed:
/// verdict, class, witness, method, seed, elapsed_ms. Rationals are strings.
nlohmann::ordered_json verdict_report(const Verdict& verdict, const std::string& method,
                                      std::optional<std::uint64_t> seed, double elapsed_ms);

nlohmann::ordered_json label_json(const ClassLabel& label);

/// Runs the tool on `args` (without the program name). Reports go to `out`,
/// diagnostics and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace medial::cli
