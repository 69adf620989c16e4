// Copyright 2026 The unimap Authors.
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

#include <stdexcept>
#include <string>
#include <string_view>

namespace unimap {

enum class Errc {
  kInvalidArgument,
  kLengthMismatch,
  kNotInvolution,
  kNotConnected,
  kNotUnicellular,
  kNotCanonical,
  kUnknownVertex,
  kHalfEdgeNotOnVertex,
  kEmptyCutSet,
  kSameVertex,
  kDuplicateHalfEdge,
  kGlueTooShort,
  kGenusZero,
  kInconsistentDecomposition,
  kNotDominant,
  kNotIntertwined,
  kInvalidSequence,
  kTooFewMarks,
  kSingular,
  kMissingLabel,
  kUnequalTripleLabels,
  kOrderTooLarge,
  kGenusOutOfRange,
  kResourceBound,
  kOutOfRange,
  kEmptyClass,
  kParse,
};

std::string_view to_string(Errc code);

// All library failures are reported as Error; code() identifies the contract
// that was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace unimap
