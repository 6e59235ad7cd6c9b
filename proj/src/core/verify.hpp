// Copyright 2026 the sl2sr authors
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

// Named verification suites: each runs a batch of numeric property checks
// against the library's own modules and reports per-topic tallies.

#ifndef SL2SR_CORE_VERIFY_HPP
#define SL2SR_CORE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sl2sr {

struct VerifyRow {
  std::string name;
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  double max_error = 0.0;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<VerifyRow> rows;

  bool passed() const {
    for (const auto& r : rows)
      if (r.failures > 0) return false;
    return true;
  }
};

// Suite names accepted by run_verify_suite, "all" included.
const std::vector<std::string>& verify_suite_names();

// Runs one suite (or every suite for "all") with deterministic sampling.
// Unknown names raise InvalidArgument.
VerifyReport run_verify_suite(const std::string& suite, std::uint64_t seed);

}  // namespace sl2sr

#endif
