#pragma once

#include <stdexcept>
#include <string>

namespace cauchon {

// Malformed input: ragged grid, illegal character, unparseable header or flag value.
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally well-formed diagram that violates the diagram condition.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or expansion exceeded its configured cap.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cauchon
