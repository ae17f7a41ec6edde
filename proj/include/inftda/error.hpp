// Copyright 2026 The InfTDA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INFTDA_ERROR_HPP_
#define INFTDA_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace inftda {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition (bad parameter range,
// mismatched schema, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed input data (CSV structure, rational syntax, ...).
class ParseError : public Error {
 public:
  using Error::Error;
};

// File could not be opened or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace inftda

#endif  // INFTDA_ERROR_HPP_
