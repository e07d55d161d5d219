#pragma once

#include <stdexcept>
#include <string>

namespace bifloquet {

enum class ErrorCode {
  InvalidArgument = 1,
  Numerical,
  NonConvergence,
  Tracking,
  Pole,
  PerturbativeRegime,
  Io,
  Parse,
};

const char* to_string(ErrorCode code) noexcept;

// Base for every error raised by the library. The code survives the trip
// through the C API as a status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCode::InvalidArgument, what) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what)
      : Error(ErrorCode::Numerical, what) {}
};

class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, int iterations, double last_value)
      : Error(ErrorCode::NonConvergence, what),
        iterations_(iterations),
        last_value_(last_value) {}
  int iterations() const noexcept { return iterations_; }
  double last_value() const noexcept { return last_value_; }

 private:
  int iterations_;
  double last_value_;
};

// Mode continuity was lost between two nearby parameter points.
class TrackingError : public Error {
 public:
  TrackingError(const std::string& what, double overlap)
      : Error(ErrorCode::Tracking, what), overlap_(overlap) {}
  double overlap() const noexcept { return overlap_; }

 private:
  double overlap_;
};

// A closed-form expression hit its singular point (vanishing gap).
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error(ErrorCode::Pole, what) {}
};

class PerturbativeRegimeError : public Error {
 public:
  explicit PerturbativeRegimeError(const std::string& what)
      : Error(ErrorCode::PerturbativeRegime, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::Io, what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorCode::Parse, what) {}
};

}  // namespace bifloquet
