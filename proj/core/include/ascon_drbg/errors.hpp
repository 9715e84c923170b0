#pragma once

#include <stdexcept>

namespace ascon_drbg {

/// Base class for every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bit count exceeds the length of the string it addresses, or an
/// operation needs whole bytes and got a partial one.
class LengthError : public Error {
 public:
  using Error::Error;
};

/// An integer does not fit in the requested encoding width.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed key, nonce, round count, block width or similar argument.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The entropy source could not deliver the requested bits.
class EntropyError : public Error {
 public:
  using Error::Error;
};

/// Unparseable hex text or vector file.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace ascon_drbg
