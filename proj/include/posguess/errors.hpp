#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace posguess {

// Malformed input text: lexicon/frequency/rule/config lines that do not
// parse. Carries enough context (source name, line number) to act on.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem-level failure: missing file, unwritable output.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void throw_parse_error(std::string_view source, std::size_t line,
                                           std::string_view message) {
  throw ParseError(std::string(source) + ":" + std::to_string(line) + ": " +
                   std::string(message));
}

}  // namespace posguess
