#pragma once

#include <cmath>

namespace tailkit {

// Neumaier's variant of Kahan summation. Robust when addends are larger
// than the running sum.
class CompensatedSum {
public:
    void add(double v) noexcept {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            compensation_ += (sum_ - t) + v;
        } else {
            compensation_ += (v - t) + sum_;
        }
        sum_ = t;
    }

    CompensatedSum& operator+=(double v) noexcept {
        add(v);
        return *this;
    }

    double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

}  // namespace tailkit
