// Copyright 2026 The ILM Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ilm {

/// Base of every error thrown by the core library.  The C API maps each
/// subclass onto a distinct status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a documented precondition (bad vertex id, missing tail...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input: sequence grammar, edge-list files, corpus JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap would be exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Process-wide vertex cap used by graph construction and generation.
/// Defaults to 32768, or to ILM_MAX_VERTICES when that variable is set.
std::size_t max_vertices();
void set_max_vertices(std::size_t cap);

}  // namespace ilm
