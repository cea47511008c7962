#pragma once

#include <stdexcept>
#include <string>

namespace hallkit {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A configured enumeration bound was exceeded; the message names the bound.
class ResourceError : public Error {
public:
  using Error::Error;
};

/// Invalid input to an algebraic operation (wrong shapes, non-exceptional pair, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

/// An internal consistency check failed.
class InvariantError : public Error {
public:
  using Error::Error;
};

} // namespace hallkit
