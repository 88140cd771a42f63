/** @file cli.hpp
 *  @brief Command-line surface.
 *
 *  Subcommands: verify, series, tower, induce, dist, gen. Systems load from
 *  JSON files; sets are given inline or as a file ({"points":[...]} for
 *  permutation systems, {"intervals":[["a","b"],...]} for exchanges, default
 *  the full space). Exchange inputs are compiled onto their grid on demand.
 *
 *  Exit codes: 0 success (and, for verify, an equal verdict); 1 verify ran
 *  but the two sides differ, which signals an implementation bug, not bad
 *  input; 2 malformed input or failed validation, with a one-line diagnostic
 *  on stderr.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "recur/recurrence.hpp"

namespace recur {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitBadInput = 2;

struct RunConfig {
    enum class Command { verify, series, tower, induce, dist, gen };
    enum class Output { human, json };

    Command command = Command::verify;
    Output output = Output::json;

    std::string system_path;              // non-gen commands
    std::optional<std::string> set_arg;   // inline JSON (leading '{') or a file path
    std::optional<long long> horizon;     // series
    bool normalize = false;               // verify

    // gen
    std::string kind;  // cycle | random_permutation | cat_map
    long long n = 0;
    long long q = 0;
    std::uint64_t seed = 0;
    std::optional<std::string> total;
    long long max_denominator = 1000000;
    std::optional<std::string> out_path;
};

/// Seam for the verify verdict; tests substitute a corrupted double to cover
/// the falsified exit path, which no valid system can reach.
using KacCheckFn = std::function<VerificationReport(const FiniteMeasureSpace&,
                                                    const Transformation&, const PointSet&)>;

/// Executes one configured command, writing the report to `out` and
/// diagnostics to `err`; returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err,
        const KacCheckFn& check = {});

/// Full argv-level entry point (parses flags, then delegates to run).
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace recur
