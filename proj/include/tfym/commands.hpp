#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tfym/config.hpp"

namespace tfym {

struct RunOptions {
  int seeds = 50;
  std::optional<int> degree_cap;  // overrides random.degree_cap
  std::optional<int> dim;         // overrides ambient_dim
  bool float_sweep = false;
  bool timing = false;
  bool fake_flat = false;
  std::string connection_text;  // optional A, B, C in the forms text format
  int threads = 0;              // 0: hardware concurrency
};

using ReportValue = std::variant<std::string, double, long long>;

struct CheckRecord {
  std::string name;
  std::optional<int> seed;
  CheckStatus status = CheckStatus::pass;
  std::optional<Rational> residual;
  std::string note;
  double seconds = 0;
  std::vector<std::pair<std::string, ReportValue>> data;
};

struct CommandReport {
  std::string command;
  std::string instance;
  std::vector<std::pair<std::string, ReportValue>> settings;
  std::vector<CheckRecord> checks;
  std::vector<std::pair<std::string, ReportValue>> diagnostics;
  std::string csv_header;
  std::vector<std::string> csv_rows;
  std::string forms;  // serialized constructed forms, if any

  bool passed() const;
  // Checks are ordered by seed (unseeded first), then by name.
  std::string to_json(bool with_timing) const;
  std::string to_csv() const;
};

// command is one of verify, bianchi, gradcheck, action, reduce.
CommandReport run_command(const std::string& command, const InstanceConfig& cfg, const RunOptions& opt);

const std::vector<std::string>& command_names();

}  // namespace tfym
