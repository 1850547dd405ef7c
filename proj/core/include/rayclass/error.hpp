// Copyright 2026 The rayclass Authors.
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

#ifndef RAYCLASS_ERROR_HPP_
#define RAYCLASS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace rayclass {

/// Argument outside the documented domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured limit (sieve size, group order, subgroup cap) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different groups, or carry different discriminants.
class ParentMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A one-sided numerical certificate did not hold.
class CertificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rayclass

#endif  // RAYCLASS_ERROR_HPP_
