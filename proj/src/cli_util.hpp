#pragma once

#include <chrono>
#include <exception>
#include <optional>
#include <string>

#include <json.hpp>

#include "e6geom/albert.hpp"
#include "e6geom/cli.hpp"
#include "e6geom/linalg.hpp"
#include "e6geom/report.hpp"

namespace e6geom::detail {

inline nlohmann::json to_json(const Vector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const Scalar& s : v) out.push_back(s.to_string());
  return out;
}

inline nlohmann::json to_json(const AlbertElement& x) { return to_json(x.coords()); }

// Collects checks into a report, timing each one and turning exceptions into
// failures.
class CheckRunner {
 public:
  CheckRunner(const RunConfig& config, Report& report) : config_(config), report_(report) {}

  const RunConfig& config() const noexcept { return config_; }
  std::uint64_t samples(std::uint64_t fallback) const {
    return config_.trials ? config_.trials : fallback;
  }
  std::mt19937_64 rng(std::string_view name) const { return check_rng(config_.seed, name); }

  template <class Body>
  void run(const std::string& name, const std::string& claim, Body&& body) {
    Check c;
    c.name = name;
    c.claim = claim;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (const std::exception& e) {
      c.status = Status::Fail;
      c.witness["error"] = e.what();
    }
    c.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report_.add(std::move(c));
  }

  // `sample(rng)` returns a counterexample or nullopt.
  template <class Sample>
  void property(const std::string& name, const std::string& claim, std::uint64_t n,
                Sample&& sample) {
    run(name, claim, [&](Check& c) {
      std::mt19937_64 g = rng(name);
      std::uint64_t failures = 0;
      nlohmann::json first;
      for (std::uint64_t i = 0; i < n; ++i) {
        std::optional<nlohmann::json> bad = sample(g);
        if (!bad) continue;
        if (failures++ == 0) first = std::move(*bad);
      }
      c.samples = n;
      c.status = failures ? Status::Fail : Status::Pass;
      c.witness["failures"] = failures;
      if (failures) c.witness["first"] = std::move(first);
    });
  }

 private:
  const RunConfig& config_;
  Report& report_;
};

}  // namespace e6geom::detail
