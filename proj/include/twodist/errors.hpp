#pragma once

#include <stdexcept>
#include <string>

namespace twodist {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
  using Error::Error;
};
struct EmptySetError : Error {
  using Error::Error;
};
struct NonNormalizedSet : Error {
  using Error::Error;
};
struct CornerClash : Error {
  using Error::Error;
};
struct CaseMismatch : Error {
  using Error::Error;
};
struct NotCoprime : Error {
  using Error::Error;
};
struct OutOfRange : Error {
  using Error::Error;
};
struct NoPositiveRoot : Error {
  using Error::Error;
};
struct InconsistentGreenCycle : Error {
  using Error::Error;
};

}  // namespace twodist
