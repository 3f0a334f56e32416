// Copyright 2026 The qwsed Authors
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

#ifndef QWSED_ERROR_HPP_
#define QWSED_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace qwsed {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad graph, bad parameters, violated precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// The request is well formed but outside what the library can decide.
class Unsupported : public Error {
 public:
  using Error::Error;
};

// A numerical routine failed to produce a result.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qwsed

#endif  // QWSED_ERROR_HPP_
