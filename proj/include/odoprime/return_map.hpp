#pragma once

#include <mutex>
#include <optional>
#include <vector>

#include "odoprime/holes.hpp"

namespace odoprime {

enum class TieBreak { MinIndex, MaxIndex };

// Signed greedy expansion n = sum c_i q_i with |c_i| <= floor(a_{i+1}/2).
struct DigitExpansion {
  BigInt n;
  std::vector<std::pair<int, long long>> coeffs;  // (index, c_i), ascending
  int sigma = 0;                                  // top nonzero index; 0 for n = 0

  long long coeff(int i) const {
    for (const auto& [idx, c] : coeffs)
      if (idx == i) return c;
    return 0;
  }
  long long top_coeff() const { return sigma == 0 ? 0 : coeff(sigma); }
};

DigitExpansion greedy_digits(const SchedulePtr& sched, const BigInt& n,
                             TieBreak tie = TieBreak::MinIndex);

// The induced first-return map T on Y and the time changes between S and T.
// All heavy operations are closed-form over the hole family's residue sets;
// nothing ever iterates an orbit step by step here.
class ReturnMap {
 public:
  explicit ReturnMap(FamilyPtr family, TieBreak tie = TieBreak::MinIndex);

  const HoleFamily& family() const { return *family_; }
  const FamilyPtr& family_ptr() const { return family_; }
  const AlphabetSchedule& sched() const { return family_->sched(); }
  const SchedulePtr& sched_ptr() const { return family_->sched_ptr(); }

  bool in_y(const Point& x) const { return family_->in_y(x); }
  Point first_return(const Point& x) const;          // T
  Point first_return_inverse(const Point& x) const;  // T^{-1}

  // zeta_x(n): the unique m with S^m x = T^n x; sign(m) = sign(n).
  BigInt zeta(const Point& x, const BigInt& n) const;
  // xi_x(n): least m >= 0 with T^m x = S^l x for some l >= n.
  BigInt xi(const Point& x, const BigInt& n) const;

  // r_i = xi_0(q_i); memoized.
  const BigInt& r(int i) const;

  Point t_power(const Point& x, const BigInt& n) const;  // S^{zeta_x(n)}

  // d_i(n) = c_i(zeta_0(n)) and sigma_n = top nonzero index (0 for n = 0).
  DigitExpansion d_digits(const BigInt& n) const;
  int sigma(const BigInt& n) const { return d_digits(n).sigma; }

  TieBreak tie_break() const { return tie_; }

 private:
  void require_in_y(const Point& x, const char* op) const;

  FamilyPtr family_;
  TieBreak tie_;
  mutable std::mutex memo_mutex_;
  mutable std::vector<std::optional<BigInt>> r_memo_;
};

}  // namespace odoprime
