#pragma once

// Plain-text voter matrices: one voter per line as a Y/N string, optionally
// prefixed by a multiplicity ("3x YNN"). '#' starts a comment; blank lines
// are ignored.

#include <iosfwd>
#include <string>
#include <string_view>

#include "anscombe/core.hpp"

namespace anscombe {

/// Throws MalformedInput carrying the 1-based line number.
VoterMatrix parse_matrix(std::string_view text);
VoterMatrix read_matrix_file(const std::string& path);

/// One line per row; unit weights are written without a prefix. Each entry
/// of `comments` becomes a leading "# ..." line.
std::string format_matrix(const VoterMatrix& v, const std::vector<std::string>& comments = {});

}  // namespace anscombe
