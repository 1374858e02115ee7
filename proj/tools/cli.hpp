#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphperiod::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Environment variable holding the default subset-expansion cap.
inline constexpr const char* kSubsetCapEnv = "GRAPHPERIOD_SUBSET_CAP";

struct CommandRequest {
  std::string subcommand;  // compute | check | exclude | oracle | quotient
  std::string action;      // polynomial kind, criterion, or oracle action
  std::string graph;       // named spec (`cycle:5`) or edge-list file path
  std::optional<std::uint32_t> modulus;
  bool fold = false;
  bool classic = false;
  std::optional<std::uint32_t> p;
  std::vector<std::uint32_t> primes;
  bool use_oracle = false;
  bool self_dual = false;
  bool json = false;
  std::size_t subset_cap = 24;
  std::size_t oracle_vertex_limit = 32;
};

struct CommandResult {
  int status = kExitPass;
  std::string out;
  std::string err;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses and validates arguments (without the program name). Throws
// UsageError; help requests are only handled by run_command_line.
CommandRequest parse_request(const std::vector<std::string>& args);

CommandResult run(const CommandRequest& request);

// parse_request + run, mapping every error to a diagnostic and status 2.
CommandResult run_command_line(const std::vector<std::string>& args);

}  // namespace graphperiod::cli
