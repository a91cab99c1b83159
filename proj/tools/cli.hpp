#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace streamcode::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitConfig = 2;

/// Entry point of the `streamcode` binary. Subcommands: encode, simulate,
/// verify, gap, sweep. Results go to --out (or `out`), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct RateRow {
  std::string codec;
  std::string params;
  std::uint64_t seed = 0;
  long symbols_in = 0;
  long symbols_out = 0;
};

/// "# config <json>" line, CSV header, one row per result. The rate is
/// printed unreduced ("9/15"), reduced and as a decimal.
/// std::invalid_argument when `rows` is empty.
void emit_rate_table(std::ostream& out, const std::vector<RateRow>& rows, const nlohmann::json& config);

}  // namespace streamcode::cli
