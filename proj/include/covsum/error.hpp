#pragma once

#include <stdexcept>
#include <string>

namespace covsum {

// Malformed input: unreadable files, bad JSON, schema violations.
// The CLI maps these to exit code 2.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Semantically invalid data or arguments (duplicate ids, empty corpus,
// dangling references, bad parameter combinations). CLI exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace covsum
