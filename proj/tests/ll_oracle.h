// Copyright 2026 The textlens Authors
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

// Log-likelihood from an explicit 2x2 contingency table. Expected cell
// values come from row total x column total / grand total; the statistic
// sums O*ln(O/E) over the term row, with 0*ln(0) taken as 0.

#ifndef TEXTLENS_TESTS_LL_ORACLE_H_
#define TEXTLENS_TESTS_LL_ORACLE_H_

#include <cmath>
#include <cstdint>

namespace textlens::oracle {

struct LlResult {
  double e1, e2, ll;
};

inline LlResult log_likelihood(std::int64_t a, std::int64_t b,
                               std::int64_t n1, std::int64_t n2) {
  // Rows: term, other. Columns: study, reference.
  const long double observed[2][2] = {{static_cast<long double>(a),
                                       static_cast<long double>(b)},
                                      {static_cast<long double>(n1 - a),
                                       static_cast<long double>(n2 - b)}};
  long double row[2] = {0, 0};
  long double col[2] = {0, 0};
  long double grand = 0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      row[i] += observed[i][j];
      col[j] += observed[i][j];
      grand += observed[i][j];
    }
  }
  long double expected[2];
  long double sum = 0;
  for (int j = 0; j < 2; ++j) {
    expected[j] = row[0] * col[j] / grand;
    if (observed[0][j] > 0) {
      sum += observed[0][j] * std::log(observed[0][j] / expected[j]);
    }
  }
  return {static_cast<double>(expected[0]), static_cast<double>(expected[1]),
          static_cast<double>(2 * sum)};
}

}  // namespace textlens::oracle

#endif  // TEXTLENS_TESTS_LL_ORACLE_H_
