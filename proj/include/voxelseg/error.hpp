#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace voxelseg {

// Data-level failure: malformed input, undefined operation, protocol
// violation. The CLI maps these to exit code 2 (usage errors exit 1).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Non-fatal diagnostics (drain too small, probabilities out of range, ...)
// go through a process-wide handler. Default handler writes to stderr.
using WarningHandler = std::function<void(const std::string&)>;

// Passing nullptr restores the stderr default. Returns the previous handler.
WarningHandler set_warning_handler(WarningHandler handler);

void warn(const std::string& message);

} // namespace voxelseg
