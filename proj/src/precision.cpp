#include "moebius/precision.hpp"

#include "moebius/errors.hpp"

#include <cmath>
#include <sstream>

namespace moebius {

namespace {

constexpr const char* kEulerGamma =
    "0.57721566490153286060651209008240243104215933593992359880576723488486772677766467093694"
    "7063291746749514631";

// Smallest Boost digits10 whose mantissa is at least `bits` bits wide.
unsigned digits10_for_bits(int bits) {
    unsigned d = 1;
    while (boost::multiprecision::detail::digits10_2_2(d) < static_cast<unsigned long>(bits)) ++d;
    return d;
}

struct DefaultPrecision {
    DefaultPrecision() { Real::default_precision(digits10_for_bits(kDefaultPrecisionBits)); }
};
const DefaultPrecision kInit;

} // namespace

void set_working_precision(int bits) {
    if (bits < 53) throw DomainError("precision must be at least 53 bits, got " + std::to_string(bits));
    if (bits > 1 << 16) throw DomainError("precision above 65536 bits is not supported");
    Real::default_precision(digits10_for_bits(bits));
}

int working_precision() {
    Real probe;
    return precision_of(probe);
}

double unit_roundoff() { return std::ldexp(1.0, -working_precision()); }

int precision_of(const Real& x) { return static_cast<int>(mpfr_get_prec(x.backend().data())); }

PrecisionScope::PrecisionScope(int bits) : saved_(working_precision()) { set_working_precision(bits); }

PrecisionScope::~PrecisionScope() { Real::default_precision(digits10_for_bits(saved_)); }

Real euler_gamma() {
    // The stored expansion is good to ~345 bits; beyond that defer to MPFR.
    if (working_precision() > 340) {
        Real g;
        mpfr_const_euler(g.backend().data(), MPFR_RNDN);
        return g;
    }
    return Real(kEulerGamma);
}

Real pi_value() {
    Real p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

Real parse_real(std::string_view text) { return Real(std::string(text)); }

double to_double(const Real& x) { return mpfr_get_d(x.backend().data(), MPFR_RNDN); }

double mag(const Real& x) { return std::fabs(mpfr_get_d(x.backend().data(), MPFR_RNDA)); }

double mag_lower(const Real& x) { return std::fabs(mpfr_get_d(x.backend().data(), MPFR_RNDZ)); }

std::string to_string(const Real& x, int digits) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(std::max(1, digits - 1)) << x;
    return os.str();
}

} // namespace moebius
