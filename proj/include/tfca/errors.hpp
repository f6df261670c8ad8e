#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tfca {

// Base for everything thrown by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed arguments: roster mismatches, out-of-range indices, unknown names.
struct invalid_input_error : error {
  using error::error;
};

// A guarded exhaustive search would exceed its configured bound.
struct capacity_error : error {
  using error::error;
};

// Text/JSON input violated the grammar; `line` is 1-based where known.
struct parse_error : error {
  std::size_t line;
  parse_error(std::size_t line_, const std::string& what_)
      : error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
  explicit parse_error(const std::string& what_) : error(what_), line(0) {}
};

// Caller-supplied precomputed data (intent lists, partial bases, concept sets)
// contradicts the context it claims to describe.
struct inconsistent_input_error : error {
  using error::error;
};

}  // namespace tfca
