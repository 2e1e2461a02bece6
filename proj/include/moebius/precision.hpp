#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <string_view>

namespace moebius {

/// Multiple-precision real. Precision is taken from the process-wide working
/// precision at construction time.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

inline constexpr int kDefaultPrecisionBits = 128;

/// Set the mantissa size (bits) used for every Real created afterwards.
/// Throws DomainError below 53 bits.
void set_working_precision(int bits);

/// Mantissa bits of a freshly constructed Real.
int working_precision();

/// 2^-p for the working precision: bound on the relative error of one
/// correctly rounded MPFR operation.
double unit_roundoff();

int precision_of(const Real& x);

/// Restores the previous working precision on destruction.
class PrecisionScope {
public:
    explicit PrecisionScope(int bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    int saved_;
};

/// Euler-Mascheroni constant from a stored 105-digit expansion.
Real euler_gamma();
Real pi_value();

/// Decimal text to Real, rounded to nearest at the working precision.
Real parse_real(std::string_view text);

/// Nearest double.
double to_double(const Real& x);

/// Upper bound of |x| as a double.
double mag(const Real& x);

/// Lower bound of |x| as a double (never negative).
double mag_lower(const Real& x);

/// Scientific notation with `digits` significant digits.
std::string to_string(const Real& x, int digits);

/// Multiply by 1 + 2^-50: applied after double operations on radii so that
/// accumulated rounding in the radius itself only ever enlarges it.
inline double up(double v) { return v * (1.0 + 0x1p-50); }

inline double down(double v) { return v * (1.0 - 0x1p-50); }

} // namespace moebius
