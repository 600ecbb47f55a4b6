#pragma once

// Command-line front end.  Every decider and constructor is a subcommand
// taking JSON literals through flags (or "-" for standard input) and
// printing one line of deterministic JSON.  Exit codes: 0 computed,
// 1 checked property refuted, 2 usage or input error.

#include <iosfwd>
#include <string>
#include <vector>

namespace cog {

// Runs one invocation; args excludes the program name.  Streams are
// injected so tests can run the CLI in-process.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, std::istream& in);

}  // namespace cog
