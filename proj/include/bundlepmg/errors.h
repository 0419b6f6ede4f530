// Copyright 2026 The bundlepmg Authors
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

#ifndef BUNDLEPMG_ERRORS_H_
#define BUNDLEPMG_ERRORS_H_

#include <stdexcept>
#include <string>

namespace bundlepmg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A MarketParams field violates its domain.
class InvalidParams : public Error {
 public:
  using Error::Error;
};

// Prices are non-finite or do not match the scenario's product set.
class InvalidPrices : public Error {
 public:
  using Error::Error;
};

// A closed form would divide by zero.
class DegenerateParams : public Error {
 public:
  using Error::Error;
};

// A gradient was requested exactly on a regime boundary.
class KinkEvaluation : public Error {
 public:
  using Error::Error;
};

// A regime profit is not strictly concave, so its stationary point is not a
// maximizer.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

class UnknownSet : public Error {
 public:
  using Error::Error;
};

// Malformed configuration text. line() is 1-based, or 0 when the problem is
// not tied to a single line.
class ConfigError : public Error {
 public:
  ConfigError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace bundlepmg

#endif  // BUNDLEPMG_ERRORS_H_
