#pragma once

#include <limits>

namespace padiclab {

/// Neumaier-compensated accumulator; the running compensation keeps long
/// mixed-magnitude series near one ulp of the true sum.
template <class T>
class KahanAccumulator {
 public:
  void add(T x) {
    T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }

  T value() const { return sum_ + comp_; }

 private:
  T sum_{};
  T comp_{};
};

}  // namespace padiclab
