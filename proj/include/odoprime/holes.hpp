#pragma once

#include <memory>
#include <vector>

#include "odoprime/odometer.hpp"

namespace odoprime {

// One removed cylinder: Z_k (k not in E) fixes positions i<k at a_i-2 and
// position k at 7; a W-type hole at an E position p fixes the same prefix
// and bounds the digit at p below floor(size/2).  Empty-type E positions
// contribute no hole.
struct Hole {
  int top_index = 0;
  bool w_type = false;
  Cylinder cyl;
  ResidueSet residues;
  bool absorbed = false;  // contained in a size-2 W hole below it
};

struct HoleFamilyOptions {
  int truncation_depth = -1;         // -1: use the schedule depth limit
  bool tolerate_truncation = false;  // family-relative semantics, no depth guard
  Wrap wrap = Wrap::Error;
};

// The truncated family of holes with top defining index <= D, the membership
// test for Y, closed-form orbit hit counting, and exact measure accounting.
//
// All answers are exact for the truncated system.  When tolerate_truncation
// is false, queries whose answer could be affected by ignored holes beyond D
// throw DepthError carrying the exact ignored tail mass bound.
class HoleFamily {
 public:
  HoleFamily(SchedulePtr sched, HoleFamilyOptions opts = {});

  const AlphabetSchedule& sched() const { return *sched_; }
  const SchedulePtr& sched_ptr() const { return sched_; }
  int truncation_depth() const { return depth_; }
  Wrap wrap() const { return opts_.wrap; }
  bool tolerant() const { return opts_.tolerate_truncation; }

  const std::vector<Hole>& holes() const { return holes_; }
  const std::vector<const Hole*>& maximal_holes() const { return maximal_; }

  bool in_y(const Point& x) const;

  // #{0 <= j < m : S^j x outside Y}, closed form, no orbit iteration.
  BigInt holes_count(const Point& x, const BigInt& m) const;
  BigInt holes_count_value(const BigInt& value, const BigInt& m) const;

  // #{0 <= j < m : S^j x in C}.
  BigInt hit_count(const Point& x, const BigInt& m, const Cylinder& c) const;
  BigInt hit_count_value(const BigInt& value, const BigInt& m, const ResidueSet& rs) const;

  // mu of the union of truncated holes intersected with a cylinder; exact.
  BigRat mu_holes(const Cylinder& within) const;
  BigRat mu_holes() const { return mu_holes_full_; }

  // Lower bound 1 - mu(union of holes with index <= D) and the exact
  // geometric bound on the ignored tail sum_{k>D} mu(D_k).
  BigRat measure_y() const { return 1 - mu_holes_full_; }
  BigRat tail_bound() const { return tail_bound_; }

  // mu(A intersect Y_D) / mu(Y_D) for a cylinder A; exact.
  BigRat nu(const Cylinder& a) const;

  // The one value below q_top with every digit equal to a_i - 2: the only
  // value whose point could lie in a hole with top index past the depth
  // limit.  Horizons crossing it are flagged when truncation is not tolerated.
  const BigInt& all_penultimate_value() const { return safe_horizon_; }

 private:
  void check_horizon(const BigInt& value, const BigInt& m) const;

  SchedulePtr sched_;
  HoleFamilyOptions opts_;
  int depth_;
  std::vector<Hole> holes_;
  std::vector<const Hole*> maximal_;
  std::vector<Hole> ignored_;        // decidable holes with top index in (D, depth_limit]
  bool beyond_uncertain_ = true;     // no size-2 W hole absorbs indices past the depth limit
  std::vector<int> size2_w_before_;  // position of first size-2 W hole < i, 0 if none
  BigRat mu_holes_full_;
  BigRat tail_bound_;
  BigInt safe_horizon_;
};

using FamilyPtr = std::shared_ptr<const HoleFamily>;

}  // namespace odoprime
