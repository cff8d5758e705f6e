#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "bnskein/state.hpp"

namespace bnskein {
namespace cli {

/*
 * Dispatches one subcommand with its arguments (no program name) and
 * writes the result to `out`.  Returns the process exit code: 0 on
 * success, 1 when the inputs name something the engine rejects
 * (DomainError, ClassificationError), 2 on malformed arguments or
 * unparseable text, with the message on `err` either way.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Reads a state from a text file, one term per line in the State
// grammar, blank lines and '#' comments skipped.  Throws ParseError
// with the offending line number, or for an unreadable file.
core::State parse_state_file(const std::string& path);

}  // namespace cli
}  // namespace bnskein
