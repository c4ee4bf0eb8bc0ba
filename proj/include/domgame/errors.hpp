// Copyright 2026 The domgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace domgame {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad parameters, out-of-range vertices, universe mismatches, malformed input.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class IllegalMoveError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// The games are only defined on isolate-free graphs.
class IsolatedVertexError : public Error {
 public:
  using Error::Error;
};

/// A search exceeded its configured memo or enumeration cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace domgame

namespace domgame {

/// A checked claim failed on a concrete graph; carries its graph6 encoding.
class ClaimViolation : public Error {
 public:
  ClaimViolation(const std::string& what, std::string graph6) : Error(what), graph6_(std::move(graph6)) {}
  const std::string& graph6() const noexcept { return graph6_; }

 private:
  std::string graph6_;
};

}  // namespace domgame
