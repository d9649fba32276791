#pragma once

#include <iosfwd>

namespace dicol::cli {

// Exit contract shared by all subcommands:
//   0  the checked property holds / the request succeeded
//   1  the property is violated (a certificate is emitted)
//   2  the verdict is unknown: a budget ran out or materialization was refused
//   64 usage error or unreadable/invalid input
inline constexpr int exit_ok = 0;
inline constexpr int exit_violated = 1;
inline constexpr int exit_unknown = 2;
inline constexpr int exit_usage = 64;
inline constexpr int exit_internal = 70;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dicol::cli
