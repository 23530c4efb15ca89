#pragma once

// Run configuration and the machine-readable report emitted by every command.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace e6geom {

struct RunConfig {
  std::uint32_t p = 5;
  std::uint32_t d = 2;
  std::uint64_t seed = 1;
  /// 0 keeps each check's default sample count.
  std::uint64_t trials = 0;
  std::string suite = "all";
  std::string out;
  std::uint64_t budget = 1000;
};

/// ConfigError unless p is a prime in [5, 65521] and d is a non-square mod p.
void validate(const RunConfig& config);

/// `recorded` is for diagnostics that do not assert; `not-applicable` marks
/// claims outside what a finite field can exhibit.
enum class Status { Pass, Fail, Recorded, NotApplicable };

std::string_view to_string(Status s);
Status status_from_string(std::string_view s);

struct Check {
  std::string name;
  std::string claim;
  Status status = Status::Pass;
  std::uint64_t samples = 0;
  nlohmann::json witness = nlohmann::json::object();
  /// Printed in the table only; kept out of the JSON so reports are
  /// reproducible byte for byte.
  double wall_ms = 0;
};

class Report {
 public:
  static constexpr int kSchemaVersion = 1;

  Report() = default;
  Report(std::string command, RunConfig config)
      : command_(std::move(command)), config_(std::move(config)) {}

  const std::string& command() const noexcept { return command_; }
  const RunConfig& config() const noexcept { return config_; }
  const std::vector<Check>& checks() const noexcept { return checks_; }

  void add(Check c) { checks_.push_back(std::move(c)); }
  void append(const Report& other);
  /// Sorts by name; the sort is stable, so repeated names keep trial order.
  void sort();

  std::size_t count(Status s) const;
  bool passed() const { return count(Status::Fail) == 0; }
  const Check* find(std::string_view name) const;

  nlohmann::json to_json() const;
  static Report from_json(const nlohmann::json& j);
  std::string dump() const;

  void print_table(std::ostream& out) const;

 private:
  std::string command_;
  RunConfig config_;
  std::vector<Check> checks_;
};

}  // namespace e6geom
