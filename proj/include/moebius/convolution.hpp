#pragma once

#include "moebius/piecewise.hpp"
#include "moebius/zeta.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace moebius {

/// An arithmetic sequence a(n), n >= 1: a named one or an explicit table.
struct SequenceSpec {
    enum class Kind { mobius, one, alternating, harmonic, delta, table };
    Kind kind = Kind::one;
    std::vector<Ball> values; // table: values[n-1] = a(n)
    std::string label;

    static SequenceSpec named(const std::string& name); // mobius | one | alternating | harmonic
    static SequenceSpec table(std::vector<Ball> values, std::string label = "table");
    static SequenceSpec delta(); // 1 at n = 1, else 0: the unit for *

    std::string name() const;
    Ball at(std::uint64_t n) const;
    /// Callable view valid for n <= upto; throws CoverageError when a table is too short.
    SeqFn fn(std::uint64_t upto) const;
};

/// S_a phi(x) = sum_{n <= x} a(n) phi(x/n).
ApproxValue S_op(const SequenceSpec& a, const FunctionSpec& phi, const Real& x);

/// (a * b)(n) for n <= N as a table.
SequenceSpec dirichlet_convolve(const SequenceSpec& a, const SequenceSpec& b, std::uint64_t N);

struct Sides {
    ApproxValue lhs, rhs;
    double residual() const;   // |lhs - rhs| midpoint distance, rounded up
    double radii() const;      // lhs radius + rhs radius
    bool agree() const { return overlaps(lhs.value, rhs.value); }
};

/// int_1^x S_a omega(x/t) S_b phi(t) dt/t, integrated exactly piece by piece.
ApproxValue convolution_lhs(const SequenceSpec& a, const FunctionSpec& omega, const SequenceSpec& b,
                            const FunctionSpec& phi, const Real& x);

/// Both sides of the four-parameter convolution identity:
///   int_1^x S_a omega(x/t) S_b phi(t) dt/t = int_1^x S_{a*b} omega(x/t) phi(t) dt/t.
Sides terre_sides(const SequenceSpec& a, const SequenceSpec& b, const FunctionSpec& omega, const FunctionSpec& phi,
                  const Real& x);

/// int_1^x omega(x/t) sum_{k<=t} phi(t/k) dt/t against the same with omega and phi swapped.
Sides voyage_sides(const FunctionSpec& omega, const FunctionSpec& phi, const Real& x);

/// x^{1-s} int_1^x (mcheck(x/t) - 1) sum_{j<=t} (t/j)^s dt/t^2  against
/// int_1^x (log t - H(t)) t^-s dt.
Sides kgen1_sides(const ComplexParam& s, const Real& x);

/// Weight in front of the kernel: m(x/t), or mcheck(x/t) - 1.
enum class MWeight { m, mcheck_minus_one };

/// Kernels g(t) for int_1^x w(x/t) g(t) dt/t^2, all piecewise closed form.
struct MKernel {
    enum class Kind { Q, R, q, t, harmonic, power_sum, half_minus_frac, function };
    Kind kind = Kind::t;
    ComplexParam s{Real(2), Real(0)};
    FunctionSpec f; // for Kind::function

    /// Q | R | q | t | harmonic | power_sum | half_minus_frac; UnsupportedKernelError otherwise.
    static MKernel parse(const std::string& name, const ComplexParam& s = ComplexParam{Real(2), Real(0)});
    static MKernel function(const FunctionSpec& f);
    std::string name() const;
};

/// int_1^x w(x/t) g(t) dt/t^2. Throws CapacityError for x beyond 1e7.
ApproxValue integrate_m_kernel(const Real& x, const MKernel& g, MWeight w = MWeight::m,
                               PiecewiseStats* stats = nullptr);

} // namespace moebius
