#pragma once

#include <cmath>
#include <complex>

namespace nfx {

// Neumaier-compensated accumulator.
class CompensatedSum {
public:
    void add(double term) {
        const double t = sum_ + term;
        if (std::abs(sum_) >= std::abs(term)) comp_ += (sum_ - t) + term;
        else comp_ += (term - t) + sum_;
        sum_ = t;
        magnitude_ += std::abs(term);
    }
    double value() const { return sum_ + comp_; }
    // Sum of |terms|; sets the rounding-noise floor of value().
    double magnitude() const { return magnitude_; }

private:
    double sum_ = 0;
    double comp_ = 0;
    double magnitude_ = 0;
};

// Sequential exp(i l phase) for l = 1, 2, ... by complex rotation, re-anchored
// every 256 steps to keep the phase error at the rounding level.
class PhaseWalker {
public:
    explicit PhaseWalker(double phase) : phase_(phase), step_(std::polar(1.0, phase)), cur_(1.0, 0.0) {}
    std::complex<double> next() {
        ++l_;
        if ((l_ & 255) == 0) cur_ = std::polar(1.0, phase_ * static_cast<double>(l_));
        else cur_ *= step_;
        return cur_;
    }

private:
    double phase_;
    std::complex<double> step_;
    std::complex<double> cur_;
    long l_ = 0;
};

}  // namespace nfx
