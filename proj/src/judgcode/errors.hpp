#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace judgcode {

// Mirrors jc_status in the C API.
enum class ErrorCode {
  invalid_argument = 1,
  io = 2,
  parse = 3,
  network = 4,
  domain = 5,
  rank_deficient = 6,
  data = 7,
  config = 8,
  not_found = 9,
  internal = 10,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorCode::invalid_argument, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::io, what) {}
};

// Ill-formed input. line/column are 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, long line = 0, long column = 0)
      : Error(ErrorCode::parse, what), line_(line), column_(column) {}
  long line() const noexcept { return line_; }
  long column() const noexcept { return column_; }

 private:
  long line_;
  long column_;
};

class NetworkError : public Error {
 public:
  NetworkError(const std::string& what, bool retriable)
      : Error(ErrorCode::network, what), retriable_(retriable) {}
  bool retriable() const noexcept { return retriable_; }

 private:
  bool retriable_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::domain, what) {}
};

class RankDeficientError : public Error {
 public:
  RankDeficientError(const std::string& what, std::vector<std::string> columns)
      : Error(ErrorCode::rank_deficient, what), columns_(std::move(columns)) {}
  const std::vector<std::string>& columns() const noexcept { return columns_; }

 private:
  std::vector<std::string> columns_;
};

// Violates a data invariant (e.g. an offender younger than 18).
class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(ErrorCode::data, what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorCode::config, what) {}
};

}  // namespace judgcode
