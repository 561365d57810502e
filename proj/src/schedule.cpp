#include "odoprime/schedule.hpp"

#include <algorithm>
#include <sstream>

namespace odoprime {

AlphabetSchedule::AlphabetSchedule(int non_e_base, std::vector<ESlot> e, int depth_limit)
    : non_e_base_(non_e_base), e_(std::move(e)), depth_limit_(depth_limit) {
  if (non_e_base_ < 8)
    throw ConfigError("non-E base must be at least 8, got " + std::to_string(non_e_base_));
  if (depth_limit_ < 1) throw ConfigError("depth limit must be positive");
  std::sort(e_.begin(), e_.end(), [](const ESlot& a, const ESlot& b) { return a.pos < b.pos; });
  for (std::size_t i = 0; i < e_.size(); ++i) {
    const ESlot& s = e_[i];
    if (s.pos < 2) throw ConfigError("E positions must be at least 2");
    if (s.pos > depth_limit_) throw ConfigError("E position beyond depth limit");
    if (s.size < 2) throw ConfigError("E sizes must be at least 2");
    if (i > 0 && e_[i - 1].pos == s.pos) throw ConfigError("duplicate E position");
  }

  e_index_.assign(depth_limit_ + 1, -1);
  for (std::size_t i = 0; i < e_.size(); ++i) e_index_[e_[i].pos] = static_cast<int>(i);

  q_.reserve(depth_limit_ + 1);
  q_.push_back(BigInt(1));
  for (int i = 1; i <= depth_limit_; ++i) q_.push_back(q_.back() * alphabet_size(i));
}

std::shared_ptr<const AlphabetSchedule> AlphabetSchedule::paper(int depth_limit) {
  std::vector<ESlot> e;
  long long pos = 100;
  for (int k = 2; pos <= depth_limit; ++k, pos *= 10)
    e.push_back({static_cast<int>(pos), k % 2 == 0 ? EKind::WType : EKind::Empty, k});
  return std::make_shared<AlphabetSchedule>(8, std::move(e), depth_limit);
}

std::shared_ptr<const AlphabetSchedule> AlphabetSchedule::desk(int non_e_base,
                                                               std::vector<ESlot> e,
                                                               int depth_limit) {
  return std::make_shared<AlphabetSchedule>(non_e_base, std::move(e), depth_limit);
}

int AlphabetSchedule::alphabet_size(int i) const {
  if (i < 1 || i > depth_limit_)
    throw RangeError("alphabet index " + std::to_string(i) + " out of range [1," +
                     std::to_string(depth_limit_) + "]");
  const int idx = e_index_[i];
  return idx < 0 ? non_e_base_ : e_[idx].size;
}

const ESlot* AlphabetSchedule::e_at(int i) const {
  if (i < 1 || i > depth_limit_) return nullptr;
  const int idx = e_index_[i];
  return idx < 0 ? nullptr : &e_[idx];
}

const BigInt& AlphabetSchedule::q(int i) const {
  if (i < 1 || i > depth_limit_ + 1)
    throw RangeError("q index " + std::to_string(i) + " out of range [1," +
                     std::to_string(depth_limit_ + 1) + "]");
  return q_[i - 1];
}

std::vector<int> AlphabetSchedule::encode(const BigInt& value) const {
  if (value < 0 || value >= q_top()) throw RangeError("encode: value outside [0, q_top)");
  std::vector<int> digits(depth_limit_, 0);
  BigInt rest = value;
  for (int i = 1; i <= depth_limit_ && rest != 0; ++i) {
    const int a = alphabet_size(i);
    digits[i - 1] = static_cast<int>(rest % a);
    rest /= a;
  }
  return digits;
}

BigInt AlphabetSchedule::decode(const std::vector<int>& digits) const {
  if (static_cast<int>(digits.size()) > depth_limit_)
    throw RangeError("decode: more digits than the depth limit");
  BigInt value = 0;
  for (int i = static_cast<int>(digits.size()); i >= 1; --i) {
    const int a = alphabet_size(i);
    const int d = digits[i - 1];
    if (d < 0 || d >= a)
      throw RangeError("decode: digit " + std::to_string(d) + " outside radix at position " +
                       std::to_string(i));
    value = value * a + d;
  }
  return value;
}

std::string AlphabetSchedule::describe() const {
  std::ostringstream os;
  os << "base=" << non_e_base_ << " depth=" << depth_limit_ << " E=[";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) os << ", ";
    os << "(" << e_[i].pos << (e_[i].kind == EKind::WType ? " w " : " empty ") << e_[i].size
       << ")";
  }
  os << "]";
  return os.str();
}

}  // namespace odoprime
