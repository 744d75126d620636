// Copyright 2026 The entropy_games Authors
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

#ifndef ENTROPY_GAMES_ERRORS_HPP_
#define ENTROPY_GAMES_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace entropy_games {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something that violates a precondition (bad shape,
// off-simplex vector, non-stochastic kernel, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A numerical invariant drifted past its abort threshold during a
// computation. The inputs were well-formed; the numerics were not.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace entropy_games

#endif  // ENTROPY_GAMES_ERRORS_HPP_
