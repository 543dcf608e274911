#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace moire {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidBase : public Error {
 public:
  InvalidBase(std::size_t position, char character, std::string record = {});

  std::size_t position() const noexcept { return position_; }
  char character() const noexcept { return character_; }
  const std::string& record() const noexcept { return record_; }

 private:
  std::size_t position_;
  char character_;
  std::string record_;
};

class EmptySequence : public Error {
 public:
  EmptySequence() : Error("sequence is empty") {}
};

class WrongScheme : public Error {
 public:
  using Error::Error;
};

class TooShort : public Error {
 public:
  using Error::Error;
};

class NotAligned : public Error {
 public:
  using Error::Error;
};

class WindowTooLarge : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class UndefinedSnr : public Error {
 public:
  using Error::Error;
};

class TooManySlots : public Error {
 public:
  using Error::Error;
};

class TooFewRings : public Error {
 public:
  using Error::Error;
};

class NoCandidates : public Error {
 public:
  using Error::Error;
};

class NoAlignment : public Error {
 public:
  using Error::Error;
};

class InconsistentSpec : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class MalformedFasta : public Error {
 public:
  MalformedFasta(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace moire
