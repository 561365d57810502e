#include "odoprime/oracle.hpp"

namespace odoprime {

FiniteQuotient::FiniteQuotient(SchedulePtr sched, int level, std::int64_t state_budget)
    : sched_(std::move(sched)), level_(level) {
  if (level_ < 1 || level_ > sched_->depth_limit())
    throw RangeError("quotient level out of range");
  BigInt qe = sched_->q(level_ + 1);
  if (qe > state_budget)
    throw RangeError("quotient of " + qe.str() + " states exceeds the budget of " +
                     std::to_string(state_budget));
  q_ = qe.convert_to<std::int64_t>();

  y_index_.assign(q_, -1);
  y_cum_.assign(q_ + 1, 0);

  // Literal sweep: maintain the digit vector of the current state and test
  // each hole definition directly (prefix of a_i - 2's, then 7 or the W band).
  std::vector<int> digits(level_, 0);
  std::vector<int> alpha(level_), band_hi(level_ + 1, -2);
  for (int i = 1; i <= level_; ++i) {
    alpha[i - 1] = sched_->alphabet_size(i);
    const ESlot* slot = sched_->e_at(i);
    if (slot == nullptr)
      band_hi[i] = -1;  // Z hole: digit == 7
    else if (slot->kind == EKind::WType)
      band_hi[i] = slot->size / 2 - 1;  // W hole: digit <= band_hi
    // Empty-type: band_hi stays -2, no hole at i.
  }

  for (std::int64_t v = 0; v < q_; ++v) {
    bool hole = false;
    for (int top = 1; top <= level_ && !hole; ++top) {
      if (band_hi[top] == -2) continue;
      bool prefix = true;
      for (int i = 1; i < top; ++i) {
        if (digits[i - 1] != alpha[i - 1] - 2) {
          prefix = false;
          break;
        }
      }
      if (!prefix) continue;
      const int d = digits[top - 1];
      hole = band_hi[top] == -1 ? d == 7 : d <= band_hi[top];
    }
    if (!hole) {
      y_index_[v] = static_cast<std::int32_t>(y_states_.size());
      y_states_.push_back(v);
    }
    y_cum_[v + 1] = y_cum_[v] + (hole ? 0 : 1);
    // Increment the digit vector (the odometer itself).
    for (int i = 0; i < level_; ++i) {
      if (digits[i] + 1 < alpha[i]) {
        ++digits[i];
        break;
      }
      digits[i] = 0;
    }
  }
  if (y_states_.empty()) throw ConfigError("quotient has no Y states");
}

std::int64_t FiniteQuotient::y_ordinal(std::int64_t state) const {
  if (state < 0 || state >= q_ || y_index_[state] < 0)
    throw DomainError("state is not a Y state");
  return y_index_[state];
}

std::int64_t FiniteQuotient::t_apply(std::int64_t state) const {
  std::int64_t v = state;
  do {
    v = v + 1 == q_ ? 0 : v + 1;
  } while (y_index_[v] < 0);
  return v;
}

std::int64_t FiniteQuotient::t_inverse(std::int64_t state) const {
  std::int64_t v = state;
  do {
    v = v == 0 ? q_ - 1 : v - 1;
  } while (y_index_[v] < 0);
  return v;
}

std::int64_t FiniteQuotient::t_power(std::int64_t state, const BigInt& n) const {
  const std::int64_t m = y_count();
  const std::int64_t i = y_ordinal(state);
  const std::int64_t k = floor_mod(BigInt(i) + n, BigInt(m)).convert_to<std::int64_t>();
  return y_states_[k];
}

BigInt FiniteQuotient::zeta(std::int64_t state, const BigInt& n) const {
  const std::int64_t m = y_count();
  const std::int64_t i = y_ordinal(state);
  const BigInt cycles = (n - floor_mod(n, BigInt(m))) / m;  // floor(n / m)
  const std::int64_t rem = floor_mod(n, BigInt(m)).convert_to<std::int64_t>();
  const std::int64_t j = (i + rem) % m;
  BigInt s_steps = BigInt(y_states_[j]) - y_states_[i];
  if (j < i || (j == i && rem > 0)) s_steps += q_;
  return cycles * q_ + s_steps;
}

BigInt FiniteQuotient::xi(std::int64_t state, const BigInt& n) const {
  if (n < 0) throw RangeError("xi expects a nonnegative horizon");
  if (n == 0) return 0;
  y_ordinal(state);  // validate
  const std::int64_t m = y_count();
  const BigInt cycles = n / q_;
  const std::int64_t rem = (n % q_).convert_to<std::int64_t>();
  // Y-visits among S^1..S^rem from `state`, by cumulative counts over values.
  const std::int64_t lo = state + 1;
  std::int64_t visits;
  std::int64_t land;
  if (lo + rem - 1 < q_) {
    visits = y_prefix(lo + rem - 1) - y_prefix(lo - 1);
    land = lo + rem - 1;
  } else {
    const std::int64_t wrapped = lo + rem - 1 - q_;
    visits = (y_prefix(q_ - 1) - y_prefix(lo - 1)) + y_prefix(wrapped);
    land = wrapped;
  }
  BigInt count = cycles * m + visits;
  if (rem == 0) land = state;
  if (y_index_[land] < 0) count += 1;  // round up to the next visit
  return count;
}

BigInt FiniteQuotient::hit_count(std::int64_t state, const BigInt& m, const Cylinder& c) const {
  // Walk literally; a horizon past a full cycle is reduced modulo q with the
  // per-cycle count obtained from one complete walk.
  BigInt full = m / q_;
  std::int64_t rem = (m % q_).convert_to<std::int64_t>();
  BigInt total = 0;
  std::int64_t per_cycle = 0;
  std::vector<int> digits = digits_of(state);
  const std::int64_t sweep = full > 0 ? q_ : rem;
  for (std::int64_t j = 0; j < sweep; ++j) {
    bool inside = true;
    for (const auto& [pos, band] : c.constraints()) {
      const int d = pos <= level_ ? digits[pos - 1] : 0;
      if (d < band.lo || d > band.hi) {
        inside = false;
        break;
      }
    }
    if (inside) {
      ++per_cycle;
      if (j < rem) ++total;
    }
    for (int i = 0; i < level_; ++i) {
      if (digits[i] + 1 < sched_->alphabet_size(i + 1)) {
        ++digits[i];
        break;
      }
      digits[i] = 0;
    }
  }
  return full > 0 ? full * per_cycle + total : total;
}

BigInt FiniteQuotient::holes_count(std::int64_t state, const BigInt& m) const {
  const BigInt full = m / q_;
  const std::int64_t rem = (m % q_).convert_to<std::int64_t>();
  const std::int64_t holes_per_cycle = q_ - y_count();
  std::int64_t partial = 0;
  if (rem > 0) {
    if (state + rem - 1 < q_) {
      partial = rem - (y_prefix(state + rem - 1) - y_prefix(state - 1));
    } else {
      const std::int64_t wrapped = state + rem - 1 - q_;
      partial = rem - (y_prefix(q_ - 1) - y_prefix(state - 1)) - y_prefix(wrapped);
    }
  }
  return full * holes_per_cycle + partial;
}

std::vector<int> FiniteQuotient::digits_of(std::int64_t state) const {
  std::vector<int> digits(level_);
  std::int64_t v = state;
  for (int i = 1; i <= level_; ++i) {
    const int a = sched_->alphabet_size(i);
    digits[i - 1] = static_cast<int>(v % a);
    v /= a;
  }
  return digits;
}

}  // namespace odoprime
