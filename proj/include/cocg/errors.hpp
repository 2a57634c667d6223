// Copyright 2026 The cocg Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace cocg {

// Parameter outside the supported range (group parameters, field degree, ...).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised for abelian groups, which have no proper centralizers.
class NoProperCentralizers : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DisconnectedGraph : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The exact characteristic polynomial is capped by dimension; callers fall
// back to per-eigenvalue nullity checks.
class UseNullityPath : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ComplexRoots : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class MalformedSpectrum : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonSymmetricMatrix : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MultiplicityMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DegenerateSpec : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace cocg
