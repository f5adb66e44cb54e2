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

#ifndef GCOVER_ERRORS_HPP_
#define GCOVER_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gcover {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GCOVER_DEFINE_ERROR(Name)        \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

GCOVER_DEFINE_ERROR(InvalidArgument);
GCOVER_DEFINE_ERROR(ParseError);
// The utility oracle returned a negative marginal gain.
GCOVER_DEFINE_ERROR(MonotonicityViolation);
GCOVER_DEFINE_ERROR(NoPositiveGain);
// Greedy found g(C) < g(X) with no element of positive gain.
GCOVER_DEFINE_ERROR(StalledProgress);
GCOVER_DEFINE_ERROR(UncoverableInstance);
GCOVER_DEFINE_ERROR(DisconnectedGraph);
GCOVER_DEFINE_ERROR(NotConnected);
// opt <= delta: the phase-two log term is undefined.
GCOVER_DEFINE_ERROR(DegenerateOpt);
GCOVER_DEFINE_ERROR(TooLarge);
GCOVER_DEFINE_ERROR(Infeasible);
// A runtime self-check (archive law, tracker monotonicity) failed.
GCOVER_DEFINE_ERROR(InvariantViolation);

#undef GCOVER_DEFINE_ERROR

}  // namespace gcover

#endif  // GCOVER_ERRORS_HPP_
