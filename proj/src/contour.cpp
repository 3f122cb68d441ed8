#include "pthulthen/contour.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "pthulthen/error.hpp"

namespace pth {

void validate_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5 * std::numbers::pi)) {
    throw Error(ErrorKind::InvalidArgument,
                "epsilon must lie in (0, pi/2), got " + std::to_string(epsilon));
  }
}

ArchCoordinates xi_of_x(double epsilon, double x) {
  validate_epsilon(epsilon);
  const double sh = std::sinh(x);
  const double se = std::sin(epsilon);
  return {std::atan(std::tanh(x) / std::tan(epsilon)),
          0.5 * std::log(sh * sh + se * se)};
}

ContourPoint contour_point(double epsilon, double x) {
  const ArchCoordinates vu = xi_of_x(epsilon, x);
  return {x, vu.v, vu.u, Complex{vu.v, -vu.u}, Complex{x, -epsilon}};
}

Complex arch_tangent(double epsilon, double x) {
  validate_epsilon(epsilon);
  const Complex r{x, -epsilon};
  return -kI * std::cosh(r) / std::sinh(r);
}

Complex arch_inverse(double epsilon, Complex xi, double tolerance) {
  const Complex w = -kI * std::exp(kI * xi);
  const Complex principal = std::asinh(w);
  const Complex two_pi_i{0.0, 2.0 * std::numbers::pi};
  // asinh is multivalued: r0 + 2 pi i k and i pi - r0 + 2 pi i k.
  const std::array<Complex, 6> candidates{
      principal,
      principal + two_pi_i,
      principal - two_pi_i,
      Complex{0.0, std::numbers::pi} - principal,
      Complex{0.0, std::numbers::pi} - principal + two_pi_i,
      Complex{0.0, std::numbers::pi} - principal - two_pi_i,
  };
  Complex best = candidates[0];
  for (const Complex& c : candidates) {
    if (std::abs(c.imag() + epsilon) < std::abs(best.imag() + epsilon)) best = c;
  }
  if (std::abs(best.imag() + epsilon) > tolerance) {
    throw Error(ErrorKind::InversionBranch,
                "arch_inverse: recovered r is off the line Im r = -eps by " +
                    std::to_string(std::abs(best.imag() + epsilon)));
  }
  return best;
}

MapJet arch_jet_from_r(Complex r) {
  const Complex t = std::tanh(r);
  const Complex c = std::cosh(r);
  const Complex sech2 = 1.0 / (c * c);
  const Complex d1 = kI * t;
  const Complex d2 = -t * sech2;
  const Complex d3 = d1 * (2.0 * t * t * sech2 - sech2 * sech2);
  return {r, d1, d2, d3};
}

CoordinateMap arch_map(double epsilon, double tolerance) {
  validate_epsilon(epsilon);
  return CoordinateMap([epsilon, tolerance](Complex xi) {
    return arch_jet_from_r(arch_inverse(epsilon, xi, tolerance));
  });
}

std::vector<ContourPoint> sample_arch(double epsilon, double x_min,
                                      double x_max, int count) {
  validate_epsilon(epsilon);
  if (count < 2) {
    throw Error(ErrorKind::InvalidArgument, "sample_arch: count must be >= 2");
  }
  if (!(x_min < x_max)) {
    throw Error(ErrorKind::InvalidArgument,
                "sample_arch: x_min must be below x_max");
  }
  std::vector<ContourPoint> points;
  points.reserve(static_cast<std::size_t>(count));
  const double step = (x_max - x_min) / (count - 1);
  const double mid = 0.5 * (x_min + x_max);
  const double half = 0.5 * (count - 1);
  for (int i = 0; i < count; ++i) {
    // Offsets from the midpoint keep mirror pairs of symmetric grids exact.
    points.push_back(contour_point(epsilon, mid + (i - half) * step));
  }
  return points;
}

}  // namespace pth
