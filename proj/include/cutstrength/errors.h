// Copyright 2026 The cutstrength Authors
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

#ifndef CUTSTRENGTH_ERRORS_H_
#define CUTSTRENGTH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace cutstrength {

// Raised when an input violates a documented precondition: a body parameter
// out of range, a root vertex outside the interior, a malformed rational.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace cutstrength

#endif  // CUTSTRENGTH_ERRORS_H_
