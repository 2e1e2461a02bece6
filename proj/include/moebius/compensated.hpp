#pragma once

#include <cmath>
#include <complex>
#include <cstddef>

namespace moebius {

/// Neumaier's variant of Kahan summation, with a running bound on the
/// distance between the returned sum and the exact sum of the exact terms.
class CompensatedSum {
public:
    /// `err` bounds |x - exact term|.
    void add(double x, double err = 0.0) {
        double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
        abs_ += std::fabs(x);
        err_ += err;
        ++n_;
    }

    void merge(const CompensatedSum& o) {
        add(o.sum_, 0.0);
        add(o.comp_, 0.0);
        n_ += o.n_ - 2;
        abs_ += o.abs_ - std::fabs(o.sum_) - std::fabs(o.comp_);
        err_ += o.err_ + o.rounding_bound();
    }

    double value() const { return sum_ + comp_; }
    std::size_t count() const { return n_; }

    /// Accumulated input errors plus the summation error
    /// 2u|S| + 2n^2 u^2 sum|x_i|, inflated for the final addition.
    double error_bound() const { return (err_ + rounding_bound()) * (1.0 + 0x1p-40); }

private:
    double rounding_bound() const {
        constexpr double u = 0x1p-53;
        double n = static_cast<double>(n_) + 2.0;
        return 2.0 * u * std::fabs(value()) + 2.0 * n * n * u * u * abs_ + 0x1p-1070;
    }

    double sum_ = 0.0, comp_ = 0.0, abs_ = 0.0, err_ = 0.0;
    std::size_t n_ = 0;
};

/// Componentwise compensated complex sum.
class CompensatedComplexSum {
public:
    void add(std::complex<double> z, double err = 0.0) {
        re_.add(z.real(), err);
        im_.add(z.imag(), err);
    }
    void merge(const CompensatedComplexSum& o) {
        re_.merge(o.re_);
        im_.merge(o.im_);
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }
    /// Radius of a disk around value() containing the exact sum.
    double error_bound() const { return (re_.error_bound() + im_.error_bound()) * (1.0 + 0x1p-40); }

private:
    CompensatedSum re_, im_;
};

} // namespace moebius
