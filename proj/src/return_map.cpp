#include "odoprime/return_map.hpp"

#include <algorithm>

namespace odoprime {

DigitExpansion greedy_digits(const SchedulePtr& sched, const BigInt& n, TieBreak tie) {
  DigitExpansion out;
  out.n = n;
  const int max_index = sched->depth_limit() - 1;  // c_i is clamped by a_{i+1}
  if (2 * bigint_abs(n) >= sched->q(max_index + 1))
    throw RangeError("greedy_digits: |n| too large for the depth limit");

  std::vector<std::pair<int, long long>> coeffs;
  std::vector<bool> used(max_index + 1, false);
  BigInt rest = n;
  while (rest != 0) {
    // Scan unused indices with q_i <= 2|rest| + 2 for the (index, coefficient)
    // pair minimizing |rest - c q_i|; larger q_i only give residual >= |rest|.
    // Each index carries one coefficient, so a clamped pick leaves its
    // residual to smaller indices.
    const BigInt bound = 2 * bigint_abs(rest) + 2;
    int best_i = 0;
    BigInt best_c = 0, best_res = bigint_abs(rest) + 1;
    for (int i = 1; i <= max_index && sched->q(i) <= bound; ++i) {
      if (used[i]) continue;
      const BigInt& qi = sched->q(i);
      const BigInt clamp = sched->alphabet_size(i + 1) / 2;
      // Nearest c, ties toward zero, then clamped to [-clamp, clamp].
      BigInt c = rest / qi;
      const BigInt rem = rest - c * qi;
      if (2 * bigint_abs(rem) > qi) c += rem > 0 ? 1 : -1;
      if (c > clamp) c = clamp;
      if (c < -clamp) c = -clamp;
      const BigInt res = bigint_abs(rest - c * qi);
      const bool better =
          tie == TieBreak::MinIndex ? res < best_res : res <= best_res && c != 0;
      if (better && c != 0) {
        best_i = i;
        best_c = c;
        best_res = res;
      }
    }
    if (best_i == 0) throw RangeError("greedy_digits: no progress (n out of range)");
    used[best_i] = true;
    coeffs.emplace_back(best_i, best_c.convert_to<long long>());
    rest -= best_c * sched->q(best_i);
  }
  std::sort(coeffs.begin(), coeffs.end());
  out.coeffs = std::move(coeffs);
  out.sigma = out.coeffs.empty() ? 0 : out.coeffs.back().first;
  return out;
}

ReturnMap::ReturnMap(FamilyPtr family, TieBreak tie)
    : family_(std::move(family)), tie_(tie) {
  r_memo_.assign(sched().depth_limit() + 1, std::nullopt);
}

void ReturnMap::require_in_y(const Point& x, const char* op) const {
  if (!family_->in_y(x)) throw DomainError(std::string(op) + ": point is not in Y");
}

Point ReturnMap::first_return(const Point& x) const {
  require_in_y(x, "first_return");
  Point p = x;
  // Between consecutive Y points the orbit spends at most 3 steps outside.
  for (int j = 1; j <= 4; ++j) {
    p = p.step(family_->wrap());
    if (family_->in_y(p)) return p;
  }
  throw Error("first_return: gap bound violated (internal invariant)");
}

Point ReturnMap::first_return_inverse(const Point& x) const {
  require_in_y(x, "first_return_inverse");
  Point p = x;
  for (int j = 1; j <= 4; ++j) {
    p = p.advance(-1, family_->wrap());
    if (family_->in_y(p)) return p;
  }
  throw Error("first_return_inverse: gap bound violated (internal invariant)");
}

BigInt ReturnMap::zeta(const Point& x, const BigInt& n) const {
  require_in_y(x, "zeta");
  if (n == 0) return 0;
  const BigInt v = x.value();
  const BigInt& q = sched().q_top();
  const bool wrap = family_->wrap() == Wrap::Modular;

  if (n > 0) {
    // g(m) = #{1 <= j <= m : S^j x in Y} = m - holes_count(x, m+1); monotone.
    auto g = [&](const BigInt& m) { return m - family_->holes_count_value(v, m + 1); };
    BigInt hi = 4 * n;  // gap bound makes g(4n) >= n
    while (g(hi) < n) hi *= 2;
    BigInt lo = n;  // g(m) <= m
    while (lo < hi) {
      const BigInt mid = (lo + hi) / 2;
      if (g(mid) >= n)
        hi = mid;
      else
        lo = mid + 1;
    }
    if (!wrap && v + lo >= q)
      throw RangeError("zeta: forward horizon leaves [0, q_top) without wraparound");
    return lo;
  }

  // Backward: count Y-visits among S^{-1}..S^{-m}.
  const BigInt k = -n;
  auto g = [&](const BigInt& m) {
    BigInt start = v - m;
    if (wrap) start = floor_mod(start, q);
    return m - family_->holes_count_value(start, m);
  };
  BigInt hi = 4 * k;
  if (!wrap && hi > v) {
    if (g(v) < k) throw RangeError("zeta: backward horizon leaves [0, q_top)");
    hi = v;
  }
  while (g(hi) < k) hi *= 2;
  BigInt lo = k;
  while (lo < hi) {
    const BigInt mid = (lo + hi) / 2;
    if (g(mid) >= k)
      hi = mid;
    else
      lo = mid + 1;
  }
  return -lo;
}

BigInt ReturnMap::xi(const Point& x, const BigInt& n) const {
  require_in_y(x, "xi");
  if (n < 0) throw RangeError("xi expects a nonnegative horizon");
  if (n == 0) return 0;
  const BigInt v = x.value();
  BigInt visits = n - family_->holes_count_value(v, n + 1);
  if (!family_->in_y(x.advance(n, family_->wrap()))) visits += 1;
  return visits;
}

const BigInt& ReturnMap::r(int i) const {
  if (i < 1 || i > sched().depth_limit()) throw RangeError("r index out of range");
  std::lock_guard<std::mutex> lock(memo_mutex_);
  if (!r_memo_[i]) {
    const Point zero = Point::zero(sched_ptr());
    r_memo_[i] = xi(zero, sched().q(i));
  }
  return *r_memo_[i];
}

Point ReturnMap::t_power(const Point& x, const BigInt& n) const {
  return x.advance(zeta(x, n), family_->wrap());
}

DigitExpansion ReturnMap::d_digits(const BigInt& n) const {
  const Point zero = Point::zero(sched_ptr());
  return greedy_digits(sched_ptr(), zeta(zero, n), tie_);
}

}  // namespace odoprime
