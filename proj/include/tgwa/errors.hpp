#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tgwa {

// All engine failures derive from Error so callers can catch a single type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroValue : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error("syntax error at position " + std::to_string(position) + ": " + message),
        position_(position),
        detail_(message) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

class UnknownVariable : public Error {
 public:
  UnknownVariable(std::size_t position, const std::string& name)
      : Error("unknown identifier '" + name + "' at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DegreeTooLarge : public Error {
 public:
  using Error::Error;
};

class InternalReductionStuck : public Error {
 public:
  using Error::Error;
};

class UnknownEntries : public Error {
 public:
  using Error::Error;
};

class FamilyMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidGCM : public Error {
 public:
  using Error::Error;
};

class ZeroQ : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace tgwa
