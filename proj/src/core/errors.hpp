#pragma once

#include <stdexcept>
#include <string>

namespace labbench {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad config file, bad CLI/API arguments, contract misuse.
struct UsageError : Error {
  using Error::Error;
};

// Selector matched no instrument.
struct NotFoundError : Error {
  using Error::Error;
};

// Selector matched more than one instrument by model.
struct AmbiguousError : Error {
  using Error::Error;
};

// Socket/file failures.
struct IoError : Error {
  using Error::Error;
};

struct TimeoutError : Error {
  using Error::Error;
};

// Unexpected traffic on the wire protocol.
struct ProtocolError : Error {
  using Error::Error;
};

}  // namespace labbench
