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

// Self-checks behind `unimap check`. Each suite compares two independent
// computations and stops at the first disagreement.

#include <optional>
#include <string>

#include "unimap/enumerate.hpp"
#include "unimap/io.hpp"

namespace unimap::cli {

struct CheckResult {
  bool ok = true;
  std::string report;                    // one line per check
  std::optional<io::Json> counterexample;
};

CheckResult check_surgery(int nmax);
CheckResult check_bijection(int g, int nmax, const EnumConfig& cfg);
CheckResult check_counts(int g, int nmax, const EnumConfig& cfg);
CheckResult check_labelled(int g, int nmax, const EnumConfig& cfg);
CheckResult check_series(int nmax, int order);

}  // namespace unimap::cli
