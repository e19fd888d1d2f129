/*
 * (C) Copyright 2026 the fockwig developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace fockwig {

/// Stable error categories; the C layer maps these 1:1 onto fw_status codes.
enum class ErrorCode {
  domain = 1,        // argument outside the mathematical domain (t < 0, extrapolation)
  argument = 2,      // malformed or inconsistent arguments
  data = 3,          // NaN/Inf in inputs, conflicting CSV entries, divergent data
  capacity = 4,      // index beyond the configured evaluation ceiling
  numeric = 5,       // iteration/quadrature failed to reach its tolerance
  precondition = 6,  // a stated hypothesis of the checked bound does not hold
  convention = 7,    // phase-space convention misuse (e.g. double tilde rescale)
  io = 8,            // file not readable/writable, parse failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorCode::domain, w) {}
};
struct ArgumentError : Error {
  explicit ArgumentError(const std::string& w) : Error(ErrorCode::argument, w) {}
};
struct DataError : Error {
  explicit DataError(const std::string& w) : Error(ErrorCode::data, w) {}
};
struct CapacityError : Error {
  explicit CapacityError(const std::string& w) : Error(ErrorCode::capacity, w) {}
};
struct NumericError : Error {
  explicit NumericError(const std::string& w) : Error(ErrorCode::numeric, w) {}
};
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& w) : Error(ErrorCode::precondition, w) {}
};
struct ConventionError : Error {
  explicit ConventionError(const std::string& w) : Error(ErrorCode::convention, w) {}
};
struct IoError : Error {
  explicit IoError(const std::string& w) : Error(ErrorCode::io, w) {}
};

}  // namespace fockwig
