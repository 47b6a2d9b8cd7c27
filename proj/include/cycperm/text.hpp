#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cycperm/perm_core.hpp"
#include "cycperm/qpoly.hpp"
#include "cycperm/statistics.hpp"

namespace cycperm {

/// Malformed permutation text. what() names the offending token.
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string &message, std::string token)
      : std::invalid_argument(message), token_(std::move(token)) {}
  const std::string &token() const { return token_; }

private:
  std::string token_;
};

/**
 * Parses "4,2,1,8" or the digit shorthand "4218". The shorthand is taken
 * whenever the text has no comma, so "12" is the word 1 2. Blank text is the
 * empty word.
 */
Word parse_word(std::string_view text);

/// One-line notation: digits run together when every letter is a single
/// digit, comma separated otherwise; "()" for the empty word.
std::string to_text(const Word &w);
std::string to_text(const Cycle &c);
std::string to_text(const IndexSet &s);
/// Counts as numbers, sets as {..}, multisets as {{ S^k, ... }}.
std::string to_text(const StatValue &v);
std::string to_text(const Distribution &d);
/// "1 + q + 2q^2"; "0" for the zero polynomial.
std::string to_text(const QPoly &p);

} // namespace cycperm
