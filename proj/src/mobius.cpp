#include "annulab/mobius.hpp"

#include <cmath>

namespace annulab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool near_zero(Complex z, double scale) {
    return std::abs(z) <= 1e-14 * scale;
}

}  // namespace

MobiusMap::MobiusMap(Complex a, Complex b, Complex c, Complex d)
    : a_(a), b_(b), c_(c), d_(d) {
    const Complex det = a * d - b * c;
    const double scale = std::abs(a) + std::abs(b) + std::abs(c) + std::abs(d);
    if (std::abs(det) <= 1e-28 * scale * scale) {
        throw DegenerateData("MobiusMap: determinant vanishes");
    }
    const Complex s = 1.0 / std::sqrt(det);
    a_ *= s;
    b_ *= s;
    c_ *= s;
    d_ *= s;
}

MobiusMap MobiusMap::scaling(Complex s) {
    const Complex r = std::sqrt(s);
    return MobiusMap(r, 0.0, 0.0, 1.0 / r);
}

MobiusMap MobiusMap::from_three_points(const ExtComplex& z0, const ExtComplex& z1,
                                       const ExtComplex& zinf) {
    // Rows of the matrix for z -> (z - z0)/(z - zinf) * (z1 - zinf)/(z1 - z0),
    // written homogeneously so any argument may be the point at infinity.
    Complex a, b, c, d;
    if (z0.finite()) {
        a = 1.0;
        b = -z0.z;
    } else {
        a = 0.0;
        b = 1.0;
    }
    if (zinf.finite()) {
        c = 1.0;
        d = -zinf.z;
    } else {
        c = 0.0;
        d = 1.0;
    }
    // Scale so z1 maps to 1.
    const Complex num = z1.finite() ? a * z1.z + b : a;
    const Complex den = z1.finite() ? c * z1.z + d : c;
    if (near_zero(num, std::abs(a) + std::abs(b) + 1.0) ||
        near_zero(den, std::abs(c) + std::abs(d) + 1.0)) {
        throw DegenerateData("from_three_points: points coincide");
    }
    return MobiusMap(a * den, b * den, c * num, d * num);
}

MobiusMap MobiusMap::inverse() const {
    return MobiusMap(d_, -b_, -c_, a_);
}

MobiusMap MobiusMap::compose(const MobiusMap& rhs) const {
    return MobiusMap(a_ * rhs.a_ + b_ * rhs.c_, a_ * rhs.b_ + b_ * rhs.d_,
                     c_ * rhs.a_ + d_ * rhs.c_, c_ * rhs.b_ + d_ * rhs.d_);
}

Complex MobiusMap::derivative(Complex z) const {
    const Complex den = c_ * z + d_;
    return 1.0 / (den * den);  // det == 1
}

ExtComplex mobius_apply(const MobiusMap& m, const ExtComplex& z) {
    if (z.at_infinity) {
        if (std::abs(m.c()) == 0.0) return ExtComplex::infinity();
        return ExtComplex(m.a() / m.c());
    }
    const Complex num = m.a() * z.z + m.b();
    const Complex den = m.c() * z.z + m.d();
    if (std::abs(den) == 0.0) return ExtComplex::infinity();
    return ExtComplex(num / den);
}

ComplexLength complex_length(const MobiusMap& m, std::optional<ComplexLength> hint) {
    Complex t = 0.5 * m.trace();
    // Resolve the +-M ambiguity: use the representative with Re tr >= 0.
    if (t.real() < 0.0 || (t.real() == 0.0 && t.imag() < 0.0)) t = -t;

    const Complex tr2 = 4.0 * t * t;
    if (std::abs(tr2 - 4.0) < kParabolicTol * std::max(4.0, std::abs(tr2))) {
        throw ParabolicOrIdentity("complex_length: trace^2 within tolerance of 4");
    }

    // Eigenvalue of larger modulus: exp(L/2) with Re L >= 0.
    const Complex s = std::sqrt(t * t - 1.0);
    Complex lambda = t + s;
    if (std::abs(lambda) < 1.0) lambda = t - s;

    Complex value = 2.0 * std::log(lambda);
    if (value.real() < 0.0) value = Complex(0.0, value.imag());  // clamp -0 noise

    // Principal log leaves Im value in (-2 pi, 2 pi]; fold into (-pi, pi].
    // branch counts multiples of 2 pi i added relative to this representative.
    int branch = 0;
    double im = value.imag();
    while (im > kTwoPi / 2.0) im -= kTwoPi;
    while (im <= -kTwoPi / 2.0) im += kTwoPi;
    value = Complex(value.real(), im);

    if (hint) {
        const double shift = std::round((hint->value.imag() - value.imag()) / kTwoPi);
        value += Complex(0.0, kTwoPi * shift);
        branch += static_cast<int>(shift);
    }
    return ComplexLength{value, branch};
}

double hyperbolic_norm(Complex z, Complex v) {
    if (!(z.imag() > 0.0)) {
        throw DomainError("hyperbolic_norm: point not in the upper half plane");
    }
    return std::abs(v) / z.imag();
}

}  // namespace annulab
