#pragma once

#include <cmath>

namespace sincsum {

// Neumaier's variant of Kahan summation; also correct when a term is
// larger in magnitude than the running sum.
class CompensatedSum {
public:
    void add(double term) noexcept
    {
        const double t = sum_ + term;
        if (std::fabs(sum_) >= std::fabs(term))
            compensation_ += (sum_ - t) + term;
        else
            compensation_ += (term - t) + sum_;
        sum_ = t;
    }

    CompensatedSum& operator+=(double term) noexcept
    {
        add(term);
        return *this;
    }

    double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

} // namespace sincsum
