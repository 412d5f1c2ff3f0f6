#include "ccgcomment/surface.hpp"

#include <cctype>

#include "ccgcomment/error.hpp"

namespace ccgc {

std::string strip_metadata(std::string_view token) {
  if (!token.empty() && token.back() == ']') {
    const auto open = token.rfind('[');
    if (open != std::string_view::npos && open > 0) {
      token = token.substr(0, open);
    }
  }
  return std::string(token);
}

CommentText finalize(const std::vector<std::string>& tokens) {
  std::string text;
  for (const auto& raw : tokens) {
    std::string word = strip_metadata(raw);
    // Tokens never carry spaces, but be strict about what reaches the output.
    std::string clean;
    for (char c : word) {
      if (std::isspace(static_cast<unsigned char>(c)) == 0) clean += c;
    }
    if (clean.empty()) continue;
    if (!text.empty()) text += ' ';
    text += clean;
  }
  if (text.empty()) throw EmptyTokens();
  text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  return CommentText{std::move(text)};
}

}  // namespace ccgc
