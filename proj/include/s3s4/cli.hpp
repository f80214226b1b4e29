#pragma once

// Command-line front end. Every subcommand wraps one decision procedure or
// enumeration; --format json emits a versioned envelope with deterministic
// serialization (sorted keys, fixed integer formatting) so output is
// byte-stable across runs.
//
// Exit codes: 0 affirmative/success, 1 non-affirmative decision
// (not standard / No / Indeterminate / no witness), 2 usage or input error.

#include <iosfwd>
#include <string>

#include "s3s4/modcore.hpp"

namespace s3s4 {

inline constexpr const char* kSchemaVersion = "1";

inline constexpr int kExitAffirmative = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

// Strict decimal integer parse (optional sign); throws invalid_argument on
// anything else.
Int parse_integer(const std::string& text);

// Runs one command line; out receives the payload, err the diagnostics.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace s3s4
