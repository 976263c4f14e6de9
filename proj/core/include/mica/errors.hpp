#ifndef MICA_ERRORS_HPP
#define MICA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mica {

/// Bad or inconsistent input: mismatched contexts or fields, malformed
/// files, preconditions violated by the caller.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parse failure with a 0-based character position into the source text.
class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : InputError(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A configured safety cap (pair count, degree) was exceeded. Distinct from
/// mathematical failure, which cannot occur.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Trials of a randomized generic computation disagreed; the draw was not
/// generic. Increase trials or the entropy range.
class UnstableError : public std::runtime_error {
 public:
  explicit UnstableError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mica

#endif
