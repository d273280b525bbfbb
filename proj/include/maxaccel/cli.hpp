#pragma once

// Command-line dispatch. Exit codes: 0 success, 1 domain error (the message
// names the violated precondition), 2 usage error, 3 reproduction regression.

#include <iosfwd>
#include <string>
#include <vector>

#include "maxaccel/speed_limit.hpp"

namespace maxaccel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRegression = 3;

/// `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// State file: one `energy weight` pair per line, '#' comments, and an
/// optional `unit eV` or `unit erg` directive (default erg) before the
/// first level. Returns the levels in erg. Throws ParseError.
std::vector<speed_limit::EnergyLevel> read_state_file(std::istream& in);

}  // namespace maxaccel::cli
