// Copyright 2026 The gsys Authors.
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

namespace gsys {

// Base of every error raised by the library. The subclasses mirror the
// failure kinds callers need to tell apart (the CLI maps them onto exit codes).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GSYS_DEFINE_ERROR(Name)            \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

// Input validation.
GSYS_DEFINE_ERROR(ParseError);
GSYS_DEFINE_ERROR(IndexOutOfRange);
GSYS_DEFINE_ERROR(DimensionMismatch);
GSYS_DEFINE_ERROR(PreconditionViolation);
GSYS_DEFINE_ERROR(NotSkewSymmetrizable);
GSYS_DEFINE_ERROR(SingularBasis);

// Algebra.
GSYS_DEFINE_ERROR(NotDivisible);
GSYS_DEFINE_ERROR(InternalLaurentFailure);
GSYS_DEFINE_ERROR(NonIntegerEntry);

// Violations of a theorem or axiom that should hold for valid input.
GSYS_DEFINE_ERROR(NoCandidate);
GSYS_DEFINE_ERROR(AxiomViolation);
GSYS_DEFINE_ERROR(TheoremViolation);
GSYS_DEFINE_ERROR(PostconditionViolation);
GSYS_DEFINE_ERROR(ColumnNotFound);
GSYS_DEFINE_ERROR(InternalError);

#undef GSYS_DEFINE_ERROR

// Raised when exchange-graph enumeration hits a node or depth cap before
// closing. Carries the partial counts reached so far.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t nodes, std::size_t edges)
      : Error(what), nodes_(nodes), edges_(edges) {}

  std::size_t nodes() const noexcept { return nodes_; }
  std::size_t edges() const noexcept { return edges_; }

 private:
  std::size_t nodes_;
  std::size_t edges_;
};

}  // namespace gsys
