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

// Approximation-ratio guarantees for greedy and GSEMO. All quantities are in
// normalized weight units (cheapest element weighs 1): `opt` and `w_max`
// below are raw values divided by the cheapest weight.

#ifndef GCOVER_BOUNDS_HPP_
#define GCOVER_BOUNDS_HPP_

#include <cmath>
#include <cstdint>

#include "gcover/cover_problem.hpp"
#include "gcover/errors.hpp"

namespace gcover {

// Instance constants the bounds depend on.
struct BoundInputs {
  double p = 0.0;
  double delta = 1.0;
  double w_max = 1.0;    // normalized
  double g_total = 0.0;  // g(X)
  double f1_empty = 0.0;  // f1(empty) = beta * delta

  static BoundInputs of(const CoverProblem& problem) {
    return {problem.p_param(), problem.delta(), problem.w_max_normalized(),
            problem.g_total(), static_cast<double>(problem.beta()) * problem.delta()};
  }
};

// (p + 1) * w_max / delta + ln((g(X) - p * opt) / opt), with the log term
// taken as 0 whenever g(X) - (p + 1) * opt <= 0.
inline double greedy_ratio_bound(const BoundInputs& in, double opt) {
  if (!(opt > 0.0)) throw InvalidArgument("opt must be positive");
  double bound = (in.p + 1.0) * in.w_max / in.delta;
  if (in.g_total - (in.p + 1.0) * opt > 0.0)
    bound += std::log((in.g_total - in.p * opt) / opt);
  return bound;
}

// Same bound from a problem and a raw-unit optimum.
inline double greedy_ratio_bound(const CoverProblem& problem, double opt_raw) {
  return greedy_ratio_bound(BoundInputs::of(problem), opt_raw * problem.weight_scale());
}

// GSEMO on integer-valued utilities (delta = 1):
// w_max * (1 + p) + ln((g(X) - p * opt) / opt), log clamped as for greedy.
inline double gsemo_integer_ratio_bound(const BoundInputs& in, double opt) {
  if (!(opt > 0.0)) throw InvalidArgument("opt must be positive");
  double bound = in.w_max * (1.0 + in.p);
  if (in.g_total - (in.p + 1.0) * opt > 0.0)
    bound += std::log((in.g_total - in.p * opt) / opt);
  return bound;
}

// ln(alpha0' / (opt - delta)) with alpha0' = f1(empty) - (p + 2 delta) opt,
// taken as 0 when the argument is at most 1. The argument is >= 1 whenever
// the first analysis phase exists; it drops below 1 (or turns negative) only
// when f1(empty) / delta is already under the phase boundary.
inline double phase_two_log_term(const BoundInputs& in, double opt) {
  if (!(opt > in.delta))
    throw DegenerateOpt("opt = " + std::to_string(opt) + " <= delta = " +
                        std::to_string(in.delta));
  const double alpha0 = in.f1_empty - (in.p + 2.0 * in.delta) * opt;
  const double arg = alpha0 / (opt - in.delta);
  return arg > 1.0 ? std::log(arg) : 0.0;
}

// GSEMO on real-valued utilities, nearly feasible output:
// w_max / delta * (p + 1 + 2 delta) + ln(alpha0' / (opt - delta)).
// Throws DegenerateOpt when opt <= delta.
inline double gsemo_general_ratio_bound(const BoundInputs& in, double opt) {
  return in.w_max / in.delta * (in.p + 1.0 + 2.0 * in.delta) + phase_two_log_term(in, opt);
}

// Ratio bound matching the problem's arithmetic: the integer form when
// g is integer-valued with delta = 1, the general form otherwise.
inline double gsemo_ratio_bound(const CoverProblem& problem, double opt_raw) {
  const BoundInputs in = BoundInputs::of(problem);
  const double opt = opt_raw * problem.weight_scale();
  return problem.integer_mode() ? gsemo_integer_ratio_bound(in, opt)
                                : gsemo_general_ratio_bound(in, opt);
}

// Checks cost <= bound * opt with relative tolerance; opt = 0 demands cost 0.
inline bool within_ratio(double cost, double opt, double ratio_bound) {
  if (opt == 0.0) return cost == 0.0;
  return cost <= ratio_bound * opt * (1.0 + 1e-9);
}

// e * beta * (beta + 1) * n: expected iterations for the tracker to reach 0.
inline double expected_hitting_bound(std::int64_t beta, std::size_t n) {
  return std::exp(1.0) * static_cast<double>(beta) * static_cast<double>(beta + 1) *
         static_cast<double>(n);
}

}  // namespace gcover

#endif  // GCOVER_BOUNDS_HPP_
