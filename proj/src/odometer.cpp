#include "odoprime/odometer.hpp"

#include <algorithm>
#include <sstream>

namespace odoprime {

Point::Point(SchedulePtr sched, std::vector<int> digits)
    : sched_(std::move(sched)), digits_(std::move(digits)) {
  if (!sched_) throw ConfigError("point without a schedule");
  if (static_cast<int>(digits_.size()) > sched_->depth_limit())
    throw RangeError("point deeper than the schedule depth limit");
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    const int a = sched_->alphabet_size(static_cast<int>(i) + 1);
    if (digits_[i] < 0 || digits_[i] >= a)
      throw RangeError("digit " + std::to_string(digits_[i]) + " outside radix at position " +
                       std::to_string(i + 1));
  }
}

Point Point::from_value(const SchedulePtr& sched, const BigInt& value) {
  return Point(sched, sched->encode(value));
}

int Point::digit(int i) const {
  if (i < 1) throw RangeError("digit index must be positive");
  if (i > static_cast<int>(digits_.size())) return 0;
  return digits_[i - 1];
}

std::string Point::to_string() const {
  int last = static_cast<int>(digits_.size());
  while (last > 0 && digits_[last - 1] == 0) --last;
  if (last == 0) return "0";
  std::ostringstream os;
  for (int i = 0; i < last; ++i) {
    if (i) os << ",";
    os << digits_[i];
  }
  return os.str();
}

bool Point::operator==(const Point& o) const {
  const int n = std::max(stored_depth(), o.stored_depth());
  for (int i = 1; i <= n; ++i)
    if (digit(i) != o.digit(i)) return false;
  return true;
}

Point Point::step(Wrap wrap) const {
  const int depth = sched_->depth_limit();
  std::vector<int> digits(depth, 0);
  for (int i = 1; i <= depth; ++i) digits[i - 1] = digit(i);
  for (int i = 0; i < depth; ++i) {
    const int a = sched_->alphabet_size(i + 1);
    if (digits[i] < a - 1) {
      ++digits[i];
      return Point(sched_, std::move(digits));
    }
    digits[i] = 0;
  }
  if (wrap == Wrap::Modular) return Point(sched_, std::move(digits));
  throw DepthError("odometer carry past the depth limit");
}

Point Point::advance(const BigInt& n, Wrap wrap) const {
  BigInt v = value() + n;
  if (wrap == Wrap::Modular) {
    v = floor_mod(v, sched_->q_top());
  } else if (v < 0 || v >= sched_->q_top()) {
    throw RangeError("advance leaves [0, q_top) and wraparound is disabled");
  }
  return Point::from_value(sched_, v);
}

Cylinder& Cylinder::band(int pos, int lo, int hi) {
  if (pos < 1 || pos > sched_->depth_limit())
    throw RangeError("cylinder position " + std::to_string(pos) + " out of range");
  const int a = sched_->alphabet_size(pos);
  if (lo < 0 || hi >= a || lo > hi)
    throw RangeError("cylinder band [" + std::to_string(lo) + "," + std::to_string(hi) +
                     "] invalid at position " + std::to_string(pos));
  constraints_[pos] = DigitBand{lo, hi};
  return *this;
}

int Cylinder::top_index() const {
  return constraints_.empty() ? 0 : constraints_.rbegin()->first;
}

bool Cylinder::contains(const Point& x) const {
  for (const auto& [pos, b] : constraints_) {
    const int d = x.digit(pos);
    if (d < b.lo || d > b.hi) return false;
  }
  return true;
}

BigRat Cylinder::measure() const {
  BigRat m(1);
  for (const auto& [pos, b] : constraints_) m *= BigRat(b.width(), sched_->alphabet_size(pos));
  return m;
}

std::optional<Cylinder> Cylinder::intersect(const Cylinder& other) const {
  Cylinder out(sched_);
  out.constraints_ = constraints_;
  for (const auto& [pos, b] : other.constraints_) {
    auto it = out.constraints_.find(pos);
    if (it == out.constraints_.end()) {
      out.constraints_[pos] = b;
    } else {
      const int lo = std::max(it->second.lo, b.lo);
      const int hi = std::min(it->second.hi, b.hi);
      if (lo > hi) return std::nullopt;
      it->second = DigitBand{lo, hi};
    }
  }
  return out;
}

std::string Cylinder::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [pos, b] : constraints_) {
    if (!first) os << " | ";
    first = false;
    os << pos << ":";
    if (b.lo == b.hi)
      os << b.lo;
    else
      os << b.lo << ".." << b.hi;
  }
  os << "}";
  return os.str();
}

BigInt ResidueSet::width() const {
  BigInt w = 0;
  for (const auto& [lo, hi] : intervals) w += hi - lo + 1;
  return w;
}

ResidueSet residues_of(const Cylinder& c) {
  const AlphabetSchedule& sched = c.sched();
  const int top = c.top_index();
  ResidueSet out;
  out.modulus_index = top + 1;
  out.modulus = sched.q(top + 1);
  // Build the residue set position by position; unconstrained positions
  // replicate the current intervals a_i times, which merge when the current
  // set is the full block [0, q_i).
  std::vector<std::pair<BigInt, BigInt>> cur = {{BigInt(0), BigInt(0)}};
  for (int i = 1; i <= top; ++i) {
    const int a = sched.alphabet_size(i);
    const auto it = c.constraints().find(i);
    const int lo = it == c.constraints().end() ? 0 : it->second.lo;
    const int hi = it == c.constraints().end() ? a - 1 : it->second.hi;
    const BigInt& qi = sched.q(i);
    std::vector<std::pair<BigInt, BigInt>> next;
    next.reserve(cur.size() * (hi - lo + 1));
    for (int v = lo; v <= hi; ++v) {
      const BigInt off = qi * v;
      for (const auto& [a0, b0] : cur) next.emplace_back(a0 + off, b0 + off);
    }
    std::sort(next.begin(), next.end());
    std::vector<std::pair<BigInt, BigInt>> merged;
    for (auto& iv : next) {
      if (!merged.empty() && merged.back().second + 1 == iv.first)
        merged.back().second = iv.second;
      else
        merged.push_back(iv);
    }
    cur = std::move(merged);
  }
  out.intervals = std::move(cur);
  return out;
}

namespace {

// #{u in [0, x] : u in [lo, hi]}; x may be -1 (empty).
BigInt cum(const BigInt& x, const BigInt& lo, const BigInt& hi) {
  if (x < lo) return 0;
  return (x < hi ? x : hi) - lo + 1;
}

// #{t in [0, len) : (s0 + t) mod q lies in [lo, hi]} for one interval.
BigInt hits_one(const BigInt& s0, const BigInt& len, const BigInt& lo, const BigInt& hi,
                const BigInt& q) {
  if (len <= 0) return 0;
  BigInt count = (len / q) * (hi - lo + 1);
  const BigInt rem = len % q;
  if (rem > 0) {
    const BigInt start = floor_mod(s0, q);
    const BigInt end = start + rem - 1;  // may pass q-1, i.e. wrap once
    if (end < q) {
      count += cum(end, lo, hi) - cum(start - 1, lo, hi);
    } else {
      count += cum(q - 1, lo, hi) - cum(start - 1, lo, hi) + cum(end - q, lo, hi);
    }
  }
  return count;
}

}  // namespace

BigInt count_hits(const ResidueSet& set, const BigInt& start, const BigInt& steps) {
  BigInt total = 0;
  for (const auto& [lo, hi] : set.intervals) total += hits_one(start, steps, lo, hi, set.modulus);
  return total;
}

std::vector<Cylinder> interval_to_cylinders(const SchedulePtr& sched, const BigInt& lo,
                                            const BigInt& hi, int modulus_index) {
  const BigInt& q = sched->q(modulus_index);
  if (lo < 0 || hi >= q || lo > hi) throw RangeError("interval_to_cylinders: bad interval");
  std::vector<Cylinder> out;
  BigInt v = lo;
  while (v <= hi) {
    // Largest level whose aligned block starting at v fits inside [v, hi].
    int level = 1;
    while (level < modulus_index && v % sched->q(level + 1) == 0 &&
           v + sched->q(level + 1) - 1 <= hi)
      ++level;
    if (level == modulus_index) {
      out.emplace_back(sched);  // the whole space below the modulus
      return out;
    }
    const BigInt& block = sched->q(level);
    // Run of consecutive digit values at `level`, not crossing q(level+1).
    const int a = sched->alphabet_size(level);
    const int d0 = static_cast<int>((v / block) % a);
    const BigInt avail = (hi - v + 1) / block;
    const int take = static_cast<int>((std::min)(avail, BigInt(a - d0)));
    const int d1 = d0 + take - 1;
    Cylinder c(sched);
    if (!(d0 == 0 && d1 == a - 1)) c.band(level, d0, d1);
    BigInt rest = v / sched->q(level + 1);
    for (int p = level + 1; p < modulus_index; ++p) {
      const int ap = sched->alphabet_size(p);
      c.fix(p, static_cast<int>(rest % ap));
      rest /= ap;
    }
    out.push_back(std::move(c));
    v += block * take;
  }
  return out;
}

}  // namespace odoprime
