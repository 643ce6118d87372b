#pragma once

#include <compare>
#include <limits>
#include <string>

#include "coarsetw/errors.hpp"

namespace coarsetw {

// Nonnegative hop-count distance, or infinite when no path exists.
// Infinite compares greater than every finite value and equal to itself.
class Dist {
public:
  constexpr Dist() : v_(kInf) {}

  static constexpr Dist infinite() { return Dist(); }

  static Dist finite(long long n) {
    if (n < 0) throw InputError("finite distance must be nonnegative");
    Dist d;
    d.v_ = n;
    return d;
  }

  bool is_finite() const { return v_ != kInf; }
  bool is_infinite() const { return v_ == kInf; }

  long long value() const {
    if (is_infinite()) throw InputError("infinite distance has no finite value");
    return v_;
  }

  friend bool operator==(const Dist&, const Dist&) = default;
  friend std::strong_ordering operator<=>(const Dist& a, const Dist& b) {
    return a.v_ <=> b.v_;
  }

  Dist operator+(const Dist& o) const {
    if (is_infinite() || o.is_infinite()) return infinite();
    return finite(v_ + o.v_);
  }

  std::string str() const { return is_finite() ? std::to_string(v_) : "inf"; }

private:
  static constexpr long long kInf = std::numeric_limits<long long>::max();
  long long v_;
};

}  // namespace coarsetw
