// Copyright 2026 The refkac Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace refkac {

enum class ErrorCode {
  invalid_argument,
  parse_error,
  precondition,
  division_by_zero,
  out_of_range,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

// Parse failures carry the byte offset into the input where parsing stopped.
class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::parse_error,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace refkac
