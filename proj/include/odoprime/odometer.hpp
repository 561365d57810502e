#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "odoprime/schedule.hpp"

namespace odoprime {

enum class Wrap { Error, Modular };

// A point of X: finitely many explicit digits, implicit zeros beyond.
class Point {
 public:
  Point() = default;
  Point(SchedulePtr sched, std::vector<int> digits);

  static Point zero(SchedulePtr sched) { return Point(std::move(sched), {}); }
  static Point from_value(const SchedulePtr& sched, const BigInt& value);

  int digit(int i) const;  // 1-based; 0 beyond the stored prefix
  int stored_depth() const { return static_cast<int>(digits_.size()); }
  const AlphabetSchedule& sched() const { return *sched_; }
  const SchedulePtr& sched_ptr() const { return sched_; }

  BigInt value() const { return sched_->decode(digits_); }
  std::string to_string() const;  // comma separated, trailing zeros elided

  // The odometer S: +1 with carry to the right.  A carry past the depth
  // limit wraps to zero under Wrap::Modular and throws DepthError otherwise.
  Point step(Wrap wrap = Wrap::Error) const;

  // S^n as exact mixed-radix addition, for arbitrary-precision signed n.
  Point advance(const BigInt& n, Wrap wrap = Wrap::Error) const;

  bool operator==(const Point& o) const;
  bool operator!=(const Point& o) const { return !(*this == o); }

 private:
  SchedulePtr sched_;
  std::vector<int> digits_;
};

struct DigitBand {
  int lo = 0;
  int hi = 0;  // inclusive
  int width() const { return hi - lo + 1; }
};

// A cylinder: finitely many positions constrained to single values or bands.
class Cylinder {
 public:
  explicit Cylinder(SchedulePtr sched) : sched_(std::move(sched)) {}

  Cylinder& fix(int pos, int value) { return band(pos, value, value); }
  Cylinder& band(int pos, int lo, int hi);

  const std::map<int, DigitBand>& constraints() const { return constraints_; }
  const AlphabetSchedule& sched() const { return *sched_; }
  const SchedulePtr& sched_ptr() const { return sched_; }

  int top_index() const;  // largest constrained position, 0 if none
  bool contains(const Point& x) const;
  BigRat measure() const;  // product of width/a over constrained positions

  // Intersection; nullopt when some band intersection is empty.
  std::optional<Cylinder> intersect(const Cylinder& other) const;

  std::string to_string() const;  // {pos:val | pos:lo..hi}

 private:
  SchedulePtr sched_;
  std::map<int, DigitBand> constraints_;
};

// The residues r mod q(modulus_index) whose encodings lie in a cylinder,
// expressed as maximal sorted disjoint inclusive intervals.
struct ResidueSet {
  int modulus_index = 1;  // modulus = q(modulus_index) = q(top_index + 1)
  BigInt modulus = 1;
  std::vector<std::pair<BigInt, BigInt>> intervals;

  BigInt width() const;
  BigInt min_residue() const { return intervals.empty() ? modulus : intervals.front().first; }
};

ResidueSet residues_of(const Cylinder& c);

// #{0 <= j < steps : (start + j) mod set.modulus lies in set}, closed form.
BigInt count_hits(const ResidueSet& set, const BigInt& start, const BigInt& steps);

// Decompose a value interval [lo, hi] within [0, q(modulus_index)) into
// digit cylinders (positions < modulus_index).  Inverse of residues_of.
std::vector<Cylinder> interval_to_cylinders(const SchedulePtr& sched, const BigInt& lo,
                                            const BigInt& hi, int modulus_index);

}  // namespace odoprime
