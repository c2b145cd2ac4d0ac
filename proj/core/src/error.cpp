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

#include "btl/error.hpp"

#include <sstream>

namespace btl {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::UnknownOp: return "UnknownOp";
    case ErrorKind::UnknownSort: return "UnknownSort";
    case ErrorKind::UnknownPredicate: return "UnknownPredicate";
    case ErrorKind::SortMismatch: return "SortMismatch";
    case ErrorKind::NonGroundArg: return "NonGroundArg";
    case ErrorKind::NonGroundAtom: return "NonGroundAtom";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::RepUnsupported: return "RepUnsupported";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

namespace {

std::string positioned(ErrorKind kind, int line, int column, const std::string& message,
                       const std::string& expected) {
  std::ostringstream out;
  out << line << ":" << column << ": " << to_string(kind) << ": " << message;
  if (!expected.empty()) out << " (expected " << expected << ")";
  return out.str();
}

}  // namespace

SourceError::SourceError(ErrorKind kind, int line, int column, const std::string& message,
                         std::string expected)
    : Error(kind, positioned(kind, line, column, message, expected)),
      line_(line),
      column_(column),
      message_(message.empty() ? std::string(to_string(kind)) : message),
      expected_(std::move(expected)) {}

std::string format_path(const std::vector<std::size_t>& path) {
  std::string s = "[";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(path[i]);
  }
  return s + "]";
}

TypeError::TypeError(ErrorKind kind, std::vector<std::size_t> path, const std::string& message)
    : Error(kind, std::string(to_string(kind)) + " at " + format_path(path) + ": " + message),
      path_(std::move(path)) {}

}  // namespace btl
