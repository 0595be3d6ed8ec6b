#pragma once

#include <symmetria/linalg.hpp>
#include <symmetria/groups.hpp>

#include <ostream>
#include <stdexcept>
#include <string>

namespace symmetria::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kParseError = 2, kSemanticError = 3 };

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SemanticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ChannelFile {
    RepSpec rep_in;
    RepSpec rep_out;
    Superoperator map;
};

// Throws ParseError on malformed input, SemanticError on dimension/group mismatch
// or (unless allow_nonphysical) a non-CPTP payload.
ChannelFile parse_channel_file(const std::string& text, bool allow_nonphysical = false);
ChannelFile load_channel_file(const std::string& path, bool allow_nonphysical = false);

// Full command line without the program name handled by CLI11; output is written
// to `out` only on completion.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symmetria::cli
