#pragma once

#include <stdexcept>
#include <string>

namespace ptlab {

/// Instance is too large for the enumeration-based path (use sampling
/// instead). Kept separate from argument errors so callers can map it to
/// its own exit path.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ptlab
