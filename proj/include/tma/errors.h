/// @file
/// @brief Exception types raised by the library.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tma {

/// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MidiError : public Error {
 public:
  enum class Kind { kMalformed, kUnsupportedFormat };

  MidiError(Kind kind, std::size_t offset, const std::string& what)
      : Error(what + " (byte offset " + std::to_string(offset) + ")"),
        kind_(kind),
        offset_(offset) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

/// A fragment document that does not match the schema. `pointer` is a JSON
/// pointer to the offending value.
class SchemaViolation : public Error {
 public:
  SchemaViolation(std::string pointer, const std::string& what)
      : Error(pointer + ": " + what), pointer_(std::move(pointer)) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

/// A file that cannot be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class EmptyChord : public Error {
 public:
  EmptyChord() : Error("chord has no pitch classes") {}
};

class RadiusTooLarge : public Error {
 public:
  using Error::Error;
};

class DimensionOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidFiltration : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class MalformedMatrix : public Error {
 public:
  using Error::Error;
};

}  // namespace tma
