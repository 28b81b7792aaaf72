#pragma once

#include <stdexcept>
#include <string>

namespace olap {

// Single error type for the whole library. Messages carry their own
// location context ("line 5: ...", "offset 17: ...", "session 'S1' query 3: ...").
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace olap
