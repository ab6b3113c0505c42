#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coref {

// Malformed bracketed parse. offset is the byte position of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Missing or malformed resource file.
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A call whose arguments violate the documented preconditions
// (nodes from another document, unknown mention ids, mismatched universes).
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Bad document input (JSON structure, annotation indices, gold spans).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coref
