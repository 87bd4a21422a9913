// Copyright 2026 The NND Evaluation Authors.
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

#ifndef NND_LIKELIHOOD_H_
#define NND_LIKELIHOOD_H_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nnd/types.h"

namespace nnd {

// Mean of the token log-probabilities. Throws when the candidate has no
// tokens, when token_count disagrees with the list length, or when a value is
// not finite.
double SequenceLogLikelihood(const ScoredCandidate& scored);

// Strict comparison: a tie fails. Throws nnd::Error (validation) when the
// scores do not belong to this test, are on the wrong side, or come from
// different models.
TestOutcome AdministerTest(const NndTest& test, const ScoredCandidate& high,
                           const ScoredCandidate& low);

// Scores for one model keyed by (test_id, side).
using ScoreIndex = std::map<std::pair<std::string, Side>, ScoredCandidate>;

struct Administration {
  std::vector<TestOutcome> outcomes;
  std::vector<std::string> unscored_test_ids;
};

// Administers every test with both sides present in `scores`. Tests are split
// across `threads` workers; the result does not depend on the thread count.
Administration AdministerSuite(const std::vector<NndTest>& suite,
                               const ScoreIndex& scores,
                               std::size_t threads = 1);

}  // namespace nnd

#endif  // NND_LIKELIHOOD_H_
