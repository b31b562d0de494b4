#pragma once

#include <stdexcept>
#include <string>

namespace renlib {

// Root of every domain error raised by the library. Callers that only need
// a message can catch this; the derived types carry structured witnesses.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace renlib
