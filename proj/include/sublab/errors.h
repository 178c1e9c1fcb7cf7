// Copyright 2026 The Authors.
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

#ifndef SUBLAB_ERRORS_H_
#define SUBLAB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace sublab {

// Precondition violated by the caller (bad element, bad parameter range,
// non-monotone input where monotone is required, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The request is well-formed but exceeds what an exhaustive method can
// enumerate (ground set too large, randomness tree too big, ...).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws CapabilityError when `n` exceeds `limit` for operation `what`.
void RequireAtMost(int n, int limit, const std::string& what);

}  // namespace sublab

#endif  // SUBLAB_ERRORS_H_
