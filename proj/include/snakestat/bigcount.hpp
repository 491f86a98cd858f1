#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace snakestat {

// Exact 128-bit counter for orbit/trace arithmetic.  Matrix powers of the
// 88x88 transition matrix stay well below 2^127 for every exponent this
// library accepts, but every operation is overflow-checked anyway so a
// bad cap shows up as an exception instead of silent wraparound.
class BigCount {
 public:
  constexpr BigCount() : v_(0) {}
  constexpr BigCount(int x) : v_(x) {}
  constexpr BigCount(long long x) : v_(x) {}

  BigCount operator+(BigCount o) const {
    __int128 r;
    if (__builtin_add_overflow(v_, o.v_, &r)) throw std::overflow_error("BigCount add");
    return BigCount(r);
  }
  BigCount operator-(BigCount o) const {
    __int128 r;
    if (__builtin_sub_overflow(v_, o.v_, &r)) throw std::overflow_error("BigCount sub");
    return BigCount(r);
  }
  BigCount operator*(BigCount o) const {
    __int128 r;
    if (__builtin_mul_overflow(v_, o.v_, &r)) throw std::overflow_error("BigCount mul");
    return BigCount(r);
  }
  BigCount& operator+=(BigCount o) { *this = *this + o; return *this; }

  bool operator==(const BigCount& o) const { return v_ == o.v_; }
  bool operator!=(const BigCount& o) const { return v_ != o.v_; }
  bool operator<(const BigCount& o) const { return v_ < o.v_; }
  bool operator<=(const BigCount& o) const { return v_ <= o.v_; }
  bool operator>(const BigCount& o) const { return v_ > o.v_; }

  double to_double() const { return static_cast<double>(v_); }
  long long to_ll() const {
    if (v_ > INT64_MAX || v_ < INT64_MIN) throw std::overflow_error("BigCount to_ll");
    return static_cast<long long>(v_);
  }

  std::string str() const {
    if (v_ == 0) return "0";
    __int128 x = v_;
    bool neg = x < 0;
    if (neg) x = -x;
    std::string s;
    while (x > 0) {
      s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
      x /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
  }

 private:
  constexpr explicit BigCount(__int128 v) : v_(v) {}
  __int128 v_;
};

}  // namespace snakestat
