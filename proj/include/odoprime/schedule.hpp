#pragma once

#include <memory>
#include <string>
#include <vector>

#include "odoprime/bigint.hpp"
#include "odoprime/errors.hpp"

namespace odoprime {

enum class EKind { Empty, WType };

struct ESlot {
  int pos = 0;
  EKind kind = EKind::Empty;
  int size = 2;
};

// Digit alphabet schedule: a fixed base everywhere except the finitely many
// E positions, each of which carries its own size and an Empty/W type.
// Immutable after construction; shared by points, cylinders and hole
// families through shared_ptr.
class AlphabetSchedule {
 public:
  AlphabetSchedule(int non_e_base, std::vector<ESlot> e, int depth_limit);

  // Base 8, position 10^k of size k for every k >= 2 that fits below the
  // depth limit; even exponents are W-type, odd exponents are empty.
  static std::shared_ptr<const AlphabetSchedule> paper(int depth_limit);
  static std::shared_ptr<const AlphabetSchedule> desk(int non_e_base, std::vector<ESlot> e,
                                                      int depth_limit);

  int non_e_base() const { return non_e_base_; }
  int depth_limit() const { return depth_limit_; }
  const std::vector<ESlot>& e_slots() const { return e_; }

  int alphabet_size(int i) const;  // a_i, 1 <= i <= depth_limit
  const ESlot* e_at(int i) const;  // nullptr when i is not an E position
  bool in_e(int i) const { return e_at(i) != nullptr; }

  // q(i) = prod_{j<i} a_j, valid for 1 <= i <= depth_limit+1; q(1) = 1.
  const BigInt& q(int i) const;
  const BigInt& q_top() const { return q(depth_limit_ + 1); }

  // Mixed-radix round trip over [0, q_top).
  std::vector<int> encode(const BigInt& value) const;
  BigInt decode(const std::vector<int>& digits) const;

  std::string describe() const;

 private:
  int non_e_base_;
  std::vector<ESlot> e_;
  int depth_limit_;
  std::vector<BigInt> q_;          // q_[i-1] = q(i)
  std::vector<int> e_index_;       // position -> slot index or -1
};

using SchedulePtr = std::shared_ptr<const AlphabetSchedule>;

}  // namespace odoprime
