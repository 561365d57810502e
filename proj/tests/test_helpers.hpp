#pragma once

#include <memory>

#include "odoprime/holes.hpp"
#include "odoprime/rng.hpp"
#include "odoprime/schedule.hpp"

namespace odoprime::testing {

// The desk schedule used throughout the spec-level examples.
inline SchedulePtr desk_small(int depth = 24) {
  return AlphabetSchedule::desk(
      8, {{3, EKind::Empty, 5}, {4, EKind::WType, 6}}, depth);
}

inline SchedulePtr desk_w_only(int depth = 12) {
  return AlphabetSchedule::desk(8, {{3, EKind::WType, 6}}, depth);
}

inline FamilyPtr family_of(SchedulePtr sched, bool tolerant = false,
                           Wrap wrap = Wrap::Error, int depth = -1) {
  HoleFamilyOptions opts;
  opts.truncation_depth = depth;
  opts.tolerate_truncation = tolerant;
  opts.wrap = wrap;
  return std::make_shared<HoleFamily>(std::move(sched), opts);
}

inline Point random_point(Rng& rng, const SchedulePtr& sched) {
  std::vector<int> digits(sched->depth_limit());
  for (int i = 1; i <= sched->depth_limit(); ++i)
    digits[i - 1] = rng.below_int(sched->alphabet_size(i));
  return Point(sched, std::move(digits));
}

inline Point random_y_point(Rng& rng, const SchedulePtr& sched, const HoleFamily& family) {
  for (int tries = 0; tries < 10000; ++tries) {
    Point p = random_point(rng, sched);
    if (family.in_y(p)) return p;
  }
  throw Error("random_y_point: rejection failed");
}

}  // namespace odoprime::testing
