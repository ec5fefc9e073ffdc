#include "qgeo/cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "qgeo/error.hpp"
#include "qgeo/version.hpp"

namespace qgeo::cli {

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Validation, "cannot open config file \"" + path + "\"");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Validation, "config file \"" + path + "\" is not valid JSON: " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write \"" + path.string() + "\"");
  out << text;
  if (!out) throw std::runtime_error("failed writing \"" + path.string() + "\"");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qgeo: geometric phases, topological invariants and GKLS dynamics"};
  std::string config_path;
  std::string out_dir;
  Overrides overrides;
  unsigned threads = 0;
  double tol = 0.0;
  std::uint64_t seed = 0;

  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--out", out_dir,
                 "output directory for report.json and the command's CSV; "
                 "without it the report is printed to stdout");
  auto* threads_opt = app.add_option("--threads", threads, "worker threads (default: hardware)")
                          ->check(CLI::Range(1u, 4096u));
  auto* tol_opt = app.add_option("--tol", tol, "rank tolerance for stratum checks");
  auto* seed_opt = app.add_option("--seed", seed, "seed for randomized fixtures");
  app.set_version_flag("--version", std::string(kVersion));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  if (*threads_opt) overrides.threads = threads;
  if (*tol_opt) overrides.tol = tol;
  if (*seed_opt) overrides.seed = seed;

  try {
    const Outcome outcome = run_command(load_config(config_path), overrides);
    const std::string report = make_report(outcome, utc_timestamp()).dump(2) + "\n";
    if (out_dir.empty()) {
      out << report;
    } else {
      const std::filesystem::path dir(out_dir);
      std::filesystem::create_directories(dir);
      write_file(dir / "report.json", report);
      write_file(dir / outcome.csv_name, outcome.csv);
      out << "wrote " << (dir / "report.json").string() << " and "
          << (dir / outcome.csv_name).string() << "\n";
    }
    return kOk;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return is_numerical(e.kind()) ? kNumerical : kValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace qgeo::cli
