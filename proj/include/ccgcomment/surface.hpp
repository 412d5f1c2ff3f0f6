#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ccgc {

/// A finished comment: first character uppercase, single spaces, no
/// surrounding whitespace, no terminal period.
struct CommentText {
  std::string text;
  friend bool operator==(const CommentText&, const CommentText&) = default;
};

/// Drops a trailing `[tag]` from a realized token (`checking[ger]`).
std::string strip_metadata(std::string_view token);

/// Joins realized tokens into a comment. Only the sentence-initial letter is
/// capitalized; identifiers later in the sentence keep their spelling.
/// Throws EmptyTokens when nothing remains to print.
CommentText finalize(const std::vector<std::string>& tokens);

}  // namespace ccgc
