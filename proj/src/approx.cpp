#include "moebius/approx.hpp"

#include <algorithm>

namespace moebius {

const char* to_string(Rigor r) { return r == Rigor::rigorous ? "rigorous" : "heuristic"; }

ApproxValue ApproxValue::from_double(double v, double radius, Rigor r) {
    return ApproxValue(CBall(Real(v), Real(0), radius), r, 53);
}

namespace {
ApproxValue combine(const CBall& v, const ApproxValue& a, const ApproxValue& b) {
    return ApproxValue(v, weaker(a.rigor, b.rigor), std::min(a.precision_bits, b.precision_bits));
}
} // namespace

ApproxValue operator+(const ApproxValue& a, const ApproxValue& b) { return combine(a.value + b.value, a, b); }
ApproxValue operator-(const ApproxValue& a, const ApproxValue& b) { return combine(a.value - b.value, a, b); }
ApproxValue operator*(const ApproxValue& a, const ApproxValue& b) { return combine(a.value * b.value, a, b); }
ApproxValue operator/(const ApproxValue& a, const ApproxValue& b) { return combine(a.value / b.value, a, b); }

} // namespace moebius
