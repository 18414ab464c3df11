#pragma once

#include <stdexcept>
#include <string>

namespace ane {

// File missing or unreadable.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// File exists but its content is malformed (bad line, bad magic, bad checksum).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Artifacts that do not fit together (model trained on a different graph, ...).
struct IncompatibleError : std::runtime_error {
  explicit IncompatibleError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ane
