/*
 * Copyright 2026 The BTL Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BTL_ERROR_HPP
#define BTL_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace btl {

enum class ErrorKind {
  Syntax,
  DuplicateName,
  ArityMismatch,
  UnboundVariable,
  UnknownOp,
  UnknownSort,
  UnknownPredicate,
  SortMismatch,
  NonGroundArg,
  NonGroundAtom,
  ShapeError,
  SizeCapExceeded,
  RepUnsupported,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Positions are 1-based. `expected` is empty when no single token would have
// fixed the input.
class SourceError : public Error {
 public:
  SourceError(ErrorKind kind, int line, int column, const std::string& message,
              std::string expected = {});

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }
  const std::string& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::string message_;
  std::string expected_;
};

// A failure of type synthesis. `path` lists child indices from the root.
class TypeError : public Error {
 public:
  TypeError(ErrorKind kind, std::vector<std::size_t> path, const std::string& message);

  const std::vector<std::size_t>& path() const { return path_; }

 private:
  std::vector<std::size_t> path_;
};

std::string format_path(const std::vector<std::size_t>& path);

}  // namespace btl

#endif  // BTL_ERROR_HPP
