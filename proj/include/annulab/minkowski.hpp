#pragma once

#include <array>
#include <cmath>

#include "annulab/errors.hpp"

namespace annulab {

/// Vector in R^{3,1} with signature (+, +, +, -).  Hyperboloid points satisfy
/// <x, x> = -1 with x4 > 0; tangent vectors at x satisfy <x, v> = 0.
struct MinkowskiVector {
    double x1 = 0.0, x2 = 0.0, x3 = 0.0, x4 = 0.0;

    MinkowskiVector operator+(const MinkowskiVector& o) const {
        return {x1 + o.x1, x2 + o.x2, x3 + o.x3, x4 + o.x4};
    }
    MinkowskiVector operator-(const MinkowskiVector& o) const {
        return {x1 - o.x1, x2 - o.x2, x3 - o.x3, x4 - o.x4};
    }
    MinkowskiVector operator*(double s) const { return {s * x1, s * x2, s * x3, s * x4}; }

    double operator[](int i) const {
        return i == 0 ? x1 : i == 1 ? x2 : i == 2 ? x3 : x4;
    }
};

inline double minkowski_inner(const MinkowskiVector& u, const MinkowskiVector& v) {
    return u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3 - u.x4 * v.x4;
}

/// Projects v to the tangent space of the hyperboloid at x (<x,x> = -1).
inline MinkowskiVector tangent_project(const MinkowskiVector& x, const MinkowskiVector& v) {
    return v + x * minkowski_inner(v, x);
}

inline MinkowskiVector normalize_spacelike(const MinkowskiVector& v) {
    const double n2 = minkowski_inner(v, v);
    if (!(n2 > 0.0)) throw DegenerateData("normalize_spacelike: vector not spacelike");
    return v * (1.0 / std::sqrt(n2));
}

/// Unit-speed geodesic through x with initial velocity v at time t.
inline MinkowskiVector geodesic_point(const MinkowskiVector& x, const MinkowskiVector& v,
                                      double t) {
    return x * std::cosh(t) + v * std::sinh(t);
}

inline MinkowskiVector geodesic_velocity(const MinkowskiVector& x, const MinkowskiVector& v,
                                         double t) {
    return x * std::sinh(t) + v * std::cosh(t);
}

/// Isometry from the upper half space {(p1, p2, h) : h > 0} onto the
/// hyperboloid.  (0,0,1) goes to (0,0,0,1) and vertical lines to geodesics
/// through it.
inline MinkowskiVector halfspace_to_hyperboloid(double p1, double p2, double h) {
    if (!(h > 0.0)) throw DomainError("halfspace_to_hyperboloid: height must be positive");
    const double q = p1 * p1 + p2 * p2 + h * h;
    return {(q - 1.0) / (2.0 * h), p1 / h, p2 / h, (q + 1.0) / (2.0 * h)};
}

/// 4x4 matrix acting on R^{3,1}; used for isometry equivariance checks.
struct MinkowskiMatrix {
    std::array<std::array<double, 4>, 4> m{};

    static MinkowskiMatrix identity() {
        MinkowskiMatrix r;
        for (int i = 0; i < 4; ++i) r.m[i][i] = 1.0;
        return r;
    }

    /// Rotation by angle in the (i, j) spatial plane, 0 <= i < j <= 2.
    static MinkowskiMatrix rotation(int i, int j, double angle);

    /// Boost with rapidity in the (i, 3) plane, 0 <= i <= 2.
    static MinkowskiMatrix boost(int i, double rapidity);

    MinkowskiVector apply(const MinkowskiVector& v) const {
        MinkowskiVector r;
        double out[4] = {0, 0, 0, 0};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) out[i] += m[i][j] * v[j];
        r.x1 = out[0];
        r.x2 = out[1];
        r.x3 = out[2];
        r.x4 = out[3];
        return r;
    }

    MinkowskiMatrix compose(const MinkowskiMatrix& rhs) const {
        MinkowskiMatrix r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                double s = 0.0;
                for (int k = 0; k < 4; ++k) s += m[i][k] * rhs.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }
};

inline MinkowskiMatrix MinkowskiMatrix::rotation(int i, int j, double angle) {
    MinkowskiMatrix r = identity();
    const double c = std::cos(angle), s = std::sin(angle);
    r.m[i][i] = c;
    r.m[j][j] = c;
    r.m[i][j] = -s;
    r.m[j][i] = s;
    return r;
}

inline MinkowskiMatrix MinkowskiMatrix::boost(int i, double rapidity) {
    MinkowskiMatrix r = identity();
    const double c = std::cosh(rapidity), s = std::sinh(rapidity);
    r.m[i][i] = c;
    r.m[3][3] = c;
    r.m[i][3] = s;
    r.m[3][i] = s;
    return r;
}

}  // namespace annulab
