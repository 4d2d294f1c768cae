// Copyright 2026 The symtk Authors.
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

#ifndef SYMTK_ERROR_H_
#define SYMTK_ERROR_H_

#include <stdexcept>
#include <string>

namespace symtk {

enum class ErrorKind {
  kInvalidDegree,
  kDegreeMismatch,
  kMalformedCycles,
  kOutOfRange,
  kEmptyGenerators,
  kCapacityExceeded,
  kInvalidParameter,
  kMalformedGraph6,
  kUnsupported,
  kInvalidPartition,
};

const char* ErrorKindName(ErrorKind kind);

// All precondition violations in the library throw this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace symtk

#endif  // SYMTK_ERROR_H_
