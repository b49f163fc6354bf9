#pragma once

#include <stdexcept>
#include <string>

namespace diamond {

  // Base of every exception thrown by the library. Mathematical failures
  // (a claim that does not hold) are never reported through exceptions;
  // these are reserved for misuse and for internal invariant violations.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class InvalidElement : public Error {
   public:
    using Error::Error;
  };

  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  class DiamondMismatch : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // A subset was expected to be closed (subsemiring) or to be an ideal.
  class NotClosed : public Error {
   public:
    using Error::Error;
  };

  class NotAnIdeal : public Error {
   public:
    using Error::Error;
  };

  class BadFamily : public Error {
   public:
    using Error::Error;
  };

  class UnknownClaim : public Error {
   public:
    using Error::Error;
  };

  class SearchLimit : public Error {
   public:
    using Error::Error;
  };

  // Raised when a freshly built table fails a semiring law. Indicates a bug.
  class LawViolation : public Error {
   public:
    using Error::Error;
  };

}  // namespace diamond
