#pragma once

// Batch driver: one JSON config in, a JSON report plus a CSV table out.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qgeo/serialize.hpp"

namespace qgeo::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kValidation = 2, kNumerical = 3 };

// Command-line values that take precedence over the config file.
struct Overrides {
  std::optional<unsigned> threads;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
};

struct Outcome {
  json resolved;  // config with every default filled in
  json result;
  std::string csv_name;  // file name used under --out
  std::string csv;
};

// Validates `config`, applies defaults and overrides, runs the command.
// Throws qgeo::Error on invalid input or numerical failure.
Outcome run_command(const json& config, const Overrides& overrides = {});

// Full report document: command, resolved config, library version, result,
// and a metadata block that holds the only non-deterministic field.
json make_report(const Outcome& outcome, const std::string& timestamp);

const std::vector<std::string>& command_names();

// argv-level entry point. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qgeo::cli
