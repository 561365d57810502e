#include "odoprime/holes.hpp"

#include <sstream>

namespace odoprime {

namespace {

Cylinder hole_cylinder(const SchedulePtr& sched, int top, bool w_type, int band_hi) {
  Cylinder c(sched);
  for (int i = 1; i < top; ++i) c.fix(i, sched->alphabet_size(i) - 2);
  if (w_type)
    c.band(top, 0, band_hi);
  else
    c.fix(top, 7);
  return c;
}

std::string rat_string(const BigRat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace

HoleFamily::HoleFamily(SchedulePtr sched, HoleFamilyOptions opts)
    : sched_(std::move(sched)), opts_(opts) {
  depth_ = opts_.truncation_depth >= 0 ? opts_.truncation_depth : sched_->depth_limit();
  if (depth_ > sched_->depth_limit())
    throw RangeError("hole truncation depth beyond the schedule depth limit");

  for (int k = 1; k <= depth_; ++k) {
    const ESlot* slot = sched_->e_at(k);
    if (slot == nullptr) {
      Hole h{k, false, hole_cylinder(sched_, k, false, 0), {}, false};
      h.residues = residues_of(h.cyl);
      holes_.push_back(std::move(h));
    } else if (slot->kind == EKind::WType) {
      const int band_hi = slot->size / 2 - 1;  // digit < floor(size/2)
      Hole h{k, true, hole_cylinder(sched_, k, true, band_hi), {}, false};
      h.residues = residues_of(h.cyl);
      holes_.push_back(std::move(h));
    }
    // Empty-type E positions remove nothing.
  }

  // A hole is absorbed when an earlier W hole of size 2 contains it: the
  // deeper hole's prefix pins that position to size-2 == 0, inside the band.
  size2_w_before_.assign(depth_ + 2, 0);
  int first_size2 = 0;
  for (int i = 1; i <= depth_ + 1; ++i) {
    size2_w_before_[i] = first_size2;
    const ESlot* slot = sched_->e_at(i);
    if (first_size2 == 0 && slot != nullptr && slot->kind == EKind::WType && slot->size == 2)
      first_size2 = i;
  }
  for (auto& h : holes_) {
    h.absorbed = size2_w_before_[h.top_index] != 0;
    if (!h.absorbed) maximal_.push_back(&h);
  }

  mu_holes_full_ = 0;
  for (const Hole* h : maximal_) mu_holes_full_ += h->cyl.measure();

  // Holes with top index in (D, depth_limit] are ignored but still decidable
  // from the schedule; keep their residues so queries can detect exactly when
  // a horizon reaches one.  Beyond the depth limit only the single value with
  // every digit a_i - 2 is consistent with a hole prefix.
  const int full_depth = sched_->depth_limit();
  bool absorbed_beyond = size2_w_before_[depth_ + 1] != 0;
  BigRat ignored_mass = 0;
  for (int k = depth_ + 1; k <= full_depth; ++k) {
    const ESlot* slot = sched_->e_at(k);
    if (slot != nullptr && slot->kind == EKind::Empty) continue;
    if (absorbed_beyond) continue;  // contained in a size-2 W hole already seen
    const bool w = slot != nullptr;
    Hole h{k, w, hole_cylinder(sched_, k, w, w ? slot->size / 2 - 1 : 0), {}, false};
    h.residues = residues_of(h.cyl);
    ignored_mass += h.cyl.measure();
    ignored_.push_back(std::move(h));
    if (slot != nullptr && slot->kind == EKind::WType && slot->size == 2) absorbed_beyond = true;
  }
  beyond_uncertain_ = !absorbed_beyond;
  tail_bound_ = ignored_mass + (beyond_uncertain_ ? BigRat(1, sched_->q(full_depth + 1)) : BigRat(0));

  safe_horizon_ = 0;
  for (int i = 1; i <= full_depth; ++i)
    safe_horizon_ += BigInt(sched_->alphabet_size(i) - 2) * sched_->q(i);
}

bool HoleFamily::in_y(const Point& x) const {
  int f = depth_ + 1;
  for (int i = 1; i <= depth_; ++i) {
    if (x.digit(i) != sched_->alphabet_size(i) - 2) {
      f = i;
      break;
    }
  }
  bool member = true;
  if (size2_w_before_[f] != 0) {
    member = false;  // inside the size-2 W hole whose prefix x carries
  } else if (f <= depth_) {
    const ESlot* slot = sched_->e_at(f);
    if (slot == nullptr) {
      if (x.digit(f) == 7) member = false;
    } else if (slot->kind == EKind::WType) {
      if (x.digit(f) < slot->size / 2) member = false;
    }
  }
  if (!member || opts_.tolerate_truncation) return member;

  // Certify the answer against the untruncated family: the digits must
  // exclude every hole beyond the truncation depth as well.
  if (f > depth_) {
    int g = sched_->depth_limit() + 1;
    for (int i = depth_ + 1; i <= sched_->depth_limit(); ++i) {
      if (x.digit(i) != sched_->alphabet_size(i) - 2) {
        g = i;
        break;
      }
    }
    if (g > sched_->depth_limit())
      throw DepthError("in_y: digits cannot exclude holes beyond the depth limit",
                       rat_string(tail_bound_));
    for (int p = depth_ + 1; p < g; ++p) {
      const ESlot* slot = sched_->e_at(p);
      if (slot != nullptr && slot->kind == EKind::WType && slot->size == 2)
        throw DepthError("in_y: point lies in a hole beyond the truncation depth",
                         rat_string(tail_bound_));
    }
    const ESlot* slot = sched_->e_at(g);
    const bool in_deeper = slot == nullptr ? x.digit(g) == 7
                           : slot->kind == EKind::WType ? x.digit(g) < slot->size / 2
                                                        : false;
    if (in_deeper)
      throw DepthError("in_y: point lies in a hole beyond the truncation depth",
                       rat_string(tail_bound_));
  }
  return member;
}

void HoleFamily::check_horizon(const BigInt& value, const BigInt& m) const {
  if (opts_.tolerate_truncation || tail_bound_ == 0) return;
  for (const Hole& h : ignored_) {
    if (count_hits(h.residues, value, m) > 0)
      throw DepthError("holes_count: horizon reaches a hole beyond the truncation depth",
                       rat_string(tail_bound_));
  }
  if (beyond_uncertain_ &&
      count_hits(ResidueSet{sched_->depth_limit() + 1,
                            sched_->q_top(),
                            {{safe_horizon_, safe_horizon_}}},
                 value, m) > 0)
    throw DepthError("holes_count: horizon reaches digits beyond the depth limit",
                     rat_string(tail_bound_));
}

BigInt HoleFamily::holes_count_value(const BigInt& value, const BigInt& m) const {
  check_horizon(value, m);
  BigInt total = 0;
  for (const Hole* h : maximal_) total += count_hits(h->residues, value, m);
  return total;
}

BigInt HoleFamily::holes_count(const Point& x, const BigInt& m) const {
  return holes_count_value(x.value(), m);
}

BigInt HoleFamily::hit_count_value(const BigInt& value, const BigInt& m,
                                   const ResidueSet& rs) const {
  return count_hits(rs, value, m);
}

BigInt HoleFamily::hit_count(const Point& x, const BigInt& m, const Cylinder& c) const {
  return count_hits(residues_of(c), x.value(), m);
}

BigRat HoleFamily::mu_holes(const Cylinder& within) const {
  BigRat total = 0;
  for (const Hole* h : maximal_) {
    if (auto meet = h->cyl.intersect(within)) total += meet->measure();
  }
  return total;
}

BigRat HoleFamily::nu(const Cylinder& a) const {
  return (a.measure() - mu_holes(a)) / measure_y();
}

}  // namespace odoprime
