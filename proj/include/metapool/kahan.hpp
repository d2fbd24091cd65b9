#pragma once

namespace metapool {

// Kahan-compensated accumulator. Sums are taken in study order, so the
// result is independent of thread count and platform scheduling.
class KahanSum {
public:
  void add(double x) {
    const double y = x - carry_;
    const double t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }

  double value() const { return sum_; }

private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace metapool
