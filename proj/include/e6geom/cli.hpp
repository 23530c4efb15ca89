#pragma once

// Verification suites and the three commands behind the e6geom executable.

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "e6geom/albert.hpp"
#include "e6geom/report.hpp"

namespace e6geom {

/// octonion, albert, brown, geometry, weyl, scope; "all" runs each of them.
const std::vector<std::string>& suite_names();

/// Runs one suite. Check failures, including exceptions thrown inside a
/// check, are reported as failing checks.
Report run_suite(const std::string& suite, const RunConfig& config);

/// Deterministic generator for a named check: depends on the seed and the
/// name only, so a check draws the same samples whichever suites run.
std::mt19937_64 check_rng(std::uint64_t seed, std::string_view name);

/// |P^4(K)| = (q^5 - 1) / (q - 1) with q = |K|.
std::uint64_t projective_four_space_size(const QuadExt& k);
inline constexpr std::uint64_t kEnumerationGuard = 10'000'000;

/// "random", "E1", "E2", "E3" or 27 comma-separated entries "a" or "a:b"
/// (a + b sqrt d). Malformed input raises ConfigError; "random" is returned
/// unparsed as nullopt.
std::optional<AlbertElement> parse_point_spec(const QuadExt& k, const std::string& spec);

Report cmd_verify(const RunConfig& config);
Report cmd_chain(const RunConfig& config, const std::string& from, const std::string& to);
/// what: "special-intersection" or "line-quadric".
Report cmd_count(const RunConfig& config, const std::string& what);

/// 0 if no check failed, 1 otherwise.
int exit_code(const Report& report);

}  // namespace e6geom
