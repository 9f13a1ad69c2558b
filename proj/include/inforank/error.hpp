/*
 * Copyright 2026 The InfoRank Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace inforank {

// Bad input data: malformed files, out-of-range values read from disk,
// inconsistent snapshots. The CLI maps these to exit status 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid caller-supplied configuration (alpha outside (0,1), z < 1, ...).
// The CLI maps these to exit status 1.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A malformed N-Triples statement. Carries the 1-based line number.
class ParseError : public DataError {
 public:
  ParseError(std::uint64_t line, const std::string& reason)
      : DataError("line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}

  std::uint64_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::uint64_t line_;
  std::string reason_;
};

// Input bytes that are not valid UTF-8. Carries the 0-based byte offset.
class EncodingError : public DataError {
 public:
  explicit EncodingError(std::uint64_t offset)
      : DataError("invalid UTF-8 byte sequence at byte offset " +
                  std::to_string(offset)),
        offset_(offset) {}

  std::uint64_t offset() const noexcept { return offset_; }

 private:
  std::uint64_t offset_;
};

}  // namespace inforank
