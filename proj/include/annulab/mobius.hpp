#pragma once

#include <complex>
#include <optional>

#include "annulab/errors.hpp"

namespace annulab {

using Complex = std::complex<double>;

/// A point of the Riemann sphere: a finite complex number or the point at
/// infinity.  Kept as an explicit tag so Mobius chains never propagate NaN.
struct ExtComplex {
    Complex z{0.0, 0.0};
    bool at_infinity = false;

    ExtComplex() = default;
    ExtComplex(Complex value) : z(value) {}  // implicit on purpose
    ExtComplex(double value) : z(value, 0.0) {}

    static ExtComplex infinity() { return ExtComplex{Complex{}, true}; }

    bool finite() const { return !at_infinity; }

private:
    ExtComplex(Complex value, bool inf) : z(value), at_infinity(inf) {}
};

/// z -> (az + b)/(cz + d), normalized to ad - bc = 1 on construction.
class MobiusMap {
public:
    MobiusMap() : a_(1.0), b_(0.0), c_(0.0), d_(1.0) {}

    /// Normalizes the determinant to 1; throws DegenerateData if it vanishes.
    MobiusMap(Complex a, Complex b, Complex c, Complex d);

    static MobiusMap identity() { return MobiusMap(); }

    /// z -> s z as a det-1 map, s != 0.
    static MobiusMap scaling(Complex s);

    /// The map sending (z0, z1, zinf) to (0, 1, infinity).
    static MobiusMap from_three_points(const ExtComplex& z0, const ExtComplex& z1,
                                       const ExtComplex& zinf);

    Complex a() const { return a_; }
    Complex b() const { return b_; }
    Complex c() const { return c_; }
    Complex d() const { return d_; }

    Complex trace() const { return a_ + d_; }
    Complex determinant() const { return a_ * d_ - b_ * c_; }

    MobiusMap inverse() const;
    MobiusMap compose(const MobiusMap& rhs) const;  // this after rhs

    /// Derivative at a finite point z with cz + d != 0.
    Complex derivative(Complex z) const;

private:
    Complex a_, b_, c_, d_;
};

/// Total extended-plane evaluation; poles map to the point at infinity.
ExtComplex mobius_apply(const MobiusMap& m, const ExtComplex& z);

/// Complex translation length of a non-parabolic element.
///
/// value satisfies tr = +-2 cosh(value / 2) with Re value >= 0; branch counts
/// the 2 pi i multiples relative to Im in (-pi, pi].
struct ComplexLength {
    Complex value{0.0, 0.0};
    int branch = 0;
};

inline constexpr double kParabolicTol = 1e-10;

/// Extracts the complex length of M.  When hint is present the 2 pi i branch
/// nearest the hint is chosen, otherwise Im falls in (-pi, pi].
/// Throws ParabolicOrIdentity when |tr^2 - 4| is below tolerance.
ComplexLength complex_length(const MobiusMap& m,
                             std::optional<ComplexLength> hint = std::nullopt);

/// Hyperbolic length |v| / Im z of a tangent vector at z in the upper half
/// plane.  Throws DomainError when Im z <= 0.
double hyperbolic_norm(Complex z, Complex v);

}  // namespace annulab
