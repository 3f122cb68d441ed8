#pragma once

#include <complex>
#include <functional>

namespace pth {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Degree and (complex) parameters of a Jacobi polynomial P_n^{(a,b)}.
struct JacobiOrder {
  int n = 0;
  Complex a;
  Complex b;
};

/// P_n^{(a,b)}(z) by the three-term recurrence in the degree.
///
/// Valid for complex a, b and z. Degree one is evaluated from its explicit
/// form, so the a + b = -1 removable singularity of the recurrence never
/// appears. Throws InvalidArgument for n < 0.
Complex jacobi_eval(const JacobiOrder& order, Complex z);

/// k-th derivative in z (k = 1 or 2), from
/// d/dz P_n^{(a,b)} = (n + a + b + 1)/2 * P_{n-1}^{(a+1,b+1)}.
Complex jacobi_deriv(const JacobiOrder& order, Complex z, int k);

struct SecondDerivativeOptions {
  double h = 1e-4;
  Complex direction{1.0, 0.0};
  bool richardson = false;
  // Step is rejected when the estimated rounding noise of the central
  // difference exceeds noise_threshold * max(1, |f(z0)|).
  double noise_threshold = 1e-6;
};

/// Central-difference estimate of f''(z0) along a complex direction.
///
/// For analytic f the estimate is independent of the direction up to O(h^2)
/// (O(h^4) with Richardson refinement). Throws StepTooSmall when
/// cancellation would swamp the estimate.
Complex complex_second_derivative(const std::function<Complex(Complex)>& f,
                                  Complex z0,
                                  const SecondDerivativeOptions& options = {});

/// Complex power w^p on the principal branch of the logarithm.
Complex principal_pow(Complex w, Complex p);

}  // namespace pth
