#pragma once

#include <vector>

#include "pthulthen/core_math.hpp"
#include "pthulthen/liouville.hpp"

namespace pth {

/// A point of the arch sinh r = -i exp(i xi), r = x - i eps, xi = v - i u.
struct ContourPoint {
  double x = 0.0;
  double v = 0.0;
  double u = 0.0;
  Complex xi;
  Complex r;
};

struct ArchCoordinates {
  double v = 0.0;
  double u = 0.0;
};

/// v = arctan(tanh x / tan eps), u = ln(sinh^2 x + sin^2 eps) / 2.
ArchCoordinates xi_of_x(double epsilon, double x);

ContourPoint contour_point(double epsilon, double x);

/// d xi / d x = -i coth(x - i eps), the tangent of the arch.
Complex arch_tangent(double epsilon, double x);

/// Tolerance on |Im r + eps| for points that are meant to lie on the arch.
inline constexpr double kOnArchTolerance = 1e-9;

/// Inverse of sinh r = -i exp(i xi) on the sheet closest to Im r = -eps.
/// Throws InversionBranch when the recovered r misses the line by more than
/// `tolerance`.
Complex arch_inverse(double epsilon, Complex xi,
                     double tolerance = kOnArchTolerance);

/// The arch as a coordinate map: r' = i tanh r, r'' = -tanh r sech^2 r,
/// r''' = i tanh r (2 tanh^2 r sech^2 r - sech^4 r).
///
/// `tolerance` is forwarded to arch_inverse; finite-difference stencils that
/// step off the arch need a looser value than kOnArchTolerance.
CoordinateMap arch_map(double epsilon, double tolerance = kOnArchTolerance);

/// Jet of the arch map at a point already known in r (no inversion).
MapJet arch_jet_from_r(Complex r);

/// count uniformly spaced points on [x_min, x_max].
std::vector<ContourPoint> sample_arch(double epsilon, double x_min,
                                      double x_max, int count);

/// Throws InvalidArgument unless 0 < epsilon < pi/2.
void validate_epsilon(double epsilon);

}  // namespace pth
