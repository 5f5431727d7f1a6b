#pragma once

#include <stdexcept>

namespace fibcube {

// Thrown when a request exceeds a configured size cap (exhaustive generation,
// graph materialization, oracle search).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fibcube
