// Copyright 2026 The gcover Authors
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

// Convenience header pulling in the whole library.

#ifndef GCOVER_GCOVER_HPP_
#define GCOVER_GCOVER_HPP_

#include "gcover/bintrack.hpp"
#include "gcover/bitset.hpp"
#include "gcover/bounds.hpp"
#include "gcover/core.hpp"
#include "gcover/cover_problem.hpp"
#include "gcover/csv.hpp"
#include "gcover/errors.hpp"
#include "gcover/exact_oracle.hpp"
#include "gcover/greedy.hpp"
#include "gcover/gsemo.hpp"
#include "gcover/problems/cds.hpp"
#include "gcover/problems/generators.hpp"
#include "gcover/problems/graph.hpp"
#include "gcover/problems/io.hpp"
#include "gcover/problems/set_cover.hpp"
#include "gcover/problems/weighted_coverage.hpp"
#include "gcover/rng.hpp"
#include "gcover/verify.hpp"

#endif  // GCOVER_GCOVER_HPP_
