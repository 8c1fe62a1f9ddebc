#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace socle3::cli {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Text, Json };

struct RunConfig {
  std::string command;
  std::size_t h = 0;
  std::size_t n = 0;
  bool has_n = false;
  std::string f;   // dual generator (ann, poincare)
  std::string f3;  // cubic part (structure, deform)
  std::size_t betti_order = 6;
  std::size_t max_ambient = 0;  // 0: default or SOCLE3_MAX_DIM
  std::string b_samples = "0,1,-1,2,1/2";
  std::size_t trials = 0;
  std::uint64_t seed = 42;
  OutputFormat format = OutputFormat::Text;
  bool as_displayed = false;
};

// A command's outcome: the JSON result object plus a human-readable rendering.
struct Report {
  Json result = Json::object();
  std::vector<std::string> lines;
};

Report cmd_ann(const RunConfig& config);
Report cmd_structure(const RunConfig& config);
Report cmd_poincare(const RunConfig& config);
Report cmd_deform(const RunConfig& config);
Report cmd_random(const RunConfig& config);

// Dispatches on config.command; unknown commands raise PreconditionError.
Report run(const RunConfig& config);

Json config_json(const RunConfig& config);
Json versions_json();
// {command, config, result, versions}, serialized with two-space indentation.
std::string render_json(const RunConfig& config, const Report& report);
std::string render_text(const Report& report);

// Exit codes: 0 success, 2 parse error, 3 precondition violation, 4 resource guard.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitResource = 4;

// Parses argv, runs the command, writes the report to stdout and diagnostics to stderr.
int main_entry(int argc, char** argv);

}  // namespace socle3::cli
