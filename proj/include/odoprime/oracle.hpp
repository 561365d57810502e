#pragma once

#include <cstdint>
#include <vector>

#include "odoprime/holes.hpp"

namespace odoprime {

// Brute-force ground truth on the finite quotient Z/q_{L+1}: the odometer is
// +1 mod q, holes are marked per their digit definitions, and T is the next
// non-hole state.  Built by one literal sweep over all states; queries on
// horizons past a full cycle reduce modulo the cycle, which is the quotient's
// wraparound semantics.
class FiniteQuotient {
 public:
  FiniteQuotient(SchedulePtr sched, int level, std::int64_t state_budget = 2'000'000);

  const AlphabetSchedule& sched() const { return *sched_; }
  int level() const { return level_; }
  std::int64_t state_count() const { return q_; }
  std::int64_t y_count() const { return static_cast<std::int64_t>(y_states_.size()); }

  bool in_y(std::int64_t state) const { return y_index_[state] >= 0; }
  std::int64_t y_state(std::int64_t ordinal) const { return y_states_[ordinal]; }
  std::int64_t y_ordinal(std::int64_t state) const;

  std::int64_t t_apply(std::int64_t state) const;      // one first-return step
  std::int64_t t_inverse(std::int64_t state) const;
  std::int64_t t_power(std::int64_t state, const BigInt& n) const;

  // S-steps m with S^m y = T^n y (signed n); exact via the enumerated cycle.
  BigInt zeta(std::int64_t state, const BigInt& n) const;
  // Least m with T^m y = S^l y for some l >= n (n >= 0).
  BigInt xi(std::int64_t state, const BigInt& n) const;

  // Literal orbit counting: #{0 <= j < m : S^j x in C}.
  BigInt hit_count(std::int64_t state, const BigInt& m, const Cylinder& c) const;
  BigInt holes_count(std::int64_t state, const BigInt& m) const;

  std::vector<int> digits_of(std::int64_t state) const;

 private:
  std::int64_t y_prefix(std::int64_t v) const { return y_cum_[v + 1]; }  // #Y-states <= v

  SchedulePtr sched_;
  int level_;
  std::int64_t q_;
  std::vector<std::int32_t> y_index_;   // state -> Y ordinal, -1 for holes
  std::vector<std::int64_t> y_states_;  // ordinal -> state, ascending
  std::vector<std::int64_t> y_cum_;     // y_cum_[v] = #Y-states with value < v
};

}  // namespace odoprime
