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

#include "unimap/error.hpp"

namespace unimap {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kLengthMismatch: return "LengthMismatch";
    case Errc::kNotInvolution: return "NotInvolution";
    case Errc::kNotConnected: return "NotConnected";
    case Errc::kNotUnicellular: return "NotUnicellular";
    case Errc::kNotCanonical: return "NotCanonical";
    case Errc::kUnknownVertex: return "UnknownVertex";
    case Errc::kHalfEdgeNotOnVertex: return "HalfEdgeNotOnVertex";
    case Errc::kEmptyCutSet: return "EmptyCutSet";
    case Errc::kSameVertex: return "SameVertex";
    case Errc::kDuplicateHalfEdge: return "DuplicateHalfEdge";
    case Errc::kGlueTooShort: return "GlueTooShort";
    case Errc::kGenusZero: return "GenusZero";
    case Errc::kInconsistentDecomposition: return "InconsistentDecomposition";
    case Errc::kNotDominant: return "NotDominant";
    case Errc::kNotIntertwined: return "NotIntertwined";
    case Errc::kInvalidSequence: return "InvalidSequence";
    case Errc::kTooFewMarks: return "TooFewMarks";
    case Errc::kSingular: return "Singular";
    case Errc::kMissingLabel: return "MissingLabel";
    case Errc::kUnequalTripleLabels: return "UnequalTripleLabels";
    case Errc::kOrderTooLarge: return "OrderTooLarge";
    case Errc::kGenusOutOfRange: return "GenusOutOfRange";
    case Errc::kResourceBound: return "ResourceBound";
    case Errc::kOutOfRange: return "OutOfRange";
    case Errc::kEmptyClass: return "EmptyClass";
    case Errc::kParse: return "Parse";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace unimap
