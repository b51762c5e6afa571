#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace taulog {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Formula / environment-file / proof-script syntax errors carry a
// 1-based byte offset into the offending text.
struct parse_error : error {
  parse_error(const std::string& msg, std::size_t position)
      : error(msg + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// Enumeration codes are unbounded in principle; we use fixed-width
// integers and refuse to wrap.
struct overflow_error : error {
  using error::error;
};

struct env_error : error {
  using error::error;
};

struct schema_error : error {
  using error::error;
};

// Kernel rejection; `path` locates the offending node ("root", "root.2.1", ...).
struct check_error : error {
  check_error(const std::string& msg, const std::string& path)
      : error("at " + path + ": " + msg), path(path) {}
  std::string path;
};

}  // namespace taulog
