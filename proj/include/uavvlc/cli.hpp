#ifndef UAVVLC_CLI_HPP
#define UAVVLC_CLI_HPP

#include <iosfwd>

namespace uavvlc {

/// Entry point of the `uavvlc` tool. Subcommands: run, gen, plan, check,
/// oracle, config. Returns the process exit code.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace uavvlc

#endif  // UAVVLC_CLI_HPP
