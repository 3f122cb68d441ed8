#include "pthulthen/core_math.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pthulthen/error.hpp"

namespace pth {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::BranchCut: return "branch cut";
    case ErrorKind::Invertibility: return "non-invertible map";
    case ErrorKind::DegenerateState: return "degenerate state";
    case ErrorKind::InversionBranch: return "inversion branch";
    case ErrorKind::StepTooSmall: return "step too small";
    case ErrorKind::Consistency: return "inconsistent couplings";
    case ErrorKind::EigensolverFailure: return "eigensolver failure";
  }
  return "unknown";
}

namespace {

// Both evaluation paths accumulate in long double: the upward recurrence
// loses several digits to cancellation when a + b sits near a negative
// integer and |z| is of order one.
using WideComplex = std::complex<long double>;

WideComplex widen(Complex z) { return {z.real(), z.imag()}; }
Complex narrow(WideComplex z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// Expansion in powers of (z - 1)/2:
//   P_n = 1/n! sum_m C(n,m) (a+m+1)_{n-m} (a+b+n+1)_m ((z-1)/2)^m.
// Division-free in a and b; only used where the recurrence divides by zero.
WideComplex jacobi_pochhammer_sum(int n, WideComplex a, WideComplex b,
                                  WideComplex z) {
  const WideComplex w = 0.5L * (z - 1.0L);
  WideComplex total = 0.0L;
  long double binom = 1.0L;  // C(n, m)
  WideComplex rising_ab = 1.0L;  // (a+b+n+1)_m
  WideComplex w_pow = 1.0L;
  for (int m = 0; m <= n; ++m) {
    WideComplex rising_a = 1.0L;  // (a+m+1)_{n-m}
    for (int j = m + 1; j <= n; ++j) rising_a *= a + static_cast<long double>(j);
    total += binom * rising_a * rising_ab * w_pow;
    binom = binom * (n - m) / (m + 1);
    rising_ab *= a + b + static_cast<long double>(n + m + 1);
    w_pow *= w;
  }
  long double factorial = 1.0L;
  for (int j = 2; j <= n; ++j) factorial *= j;
  return total / factorial;
}

}  // namespace

Complex jacobi_eval(const JacobiOrder& order, Complex z) {
  const int n = order.n;
  const Complex a = order.a;
  const Complex b = order.b;
  if (n < 0) {
    throw Error(ErrorKind::InvalidArgument,
                "jacobi_eval: negative degree " + std::to_string(n));
  }
  if (n == 0) return 1.0;

  const WideComplex wa = widen(a);
  const WideComplex wb = widen(b);
  const WideComplex wz = widen(z);
  WideComplex p_prev = 1.0L;
  WideComplex p = (wa + 1.0L) + 0.5L * (wa + wb + 2.0L) * (wz - 1.0L);
  for (int m = 2; m <= n; ++m) {
    const long double md = m;
    const WideComplex s = 2.0L * md + wa + wb;
    const WideComplex lead = 2.0L * md * (md + wa + wb) * (s - 2.0L);
    if (std::abs(lead) < 1e-300L) return narrow(jacobi_pochhammer_sum(n, wa, wb, wz));
    const WideComplex next =
        ((s - 1.0L) * (s * (s - 2.0L) * wz + wa * wa - wb * wb) * p -
         2.0L * (md + wa - 1.0L) * (md + wb - 1.0L) * s * p_prev) /
        lead;
    p_prev = p;
    p = next;
  }
  return narrow(p);
}

Complex jacobi_deriv(const JacobiOrder& order, Complex z, int k) {
  if (k != 1 && k != 2) {
    throw Error(ErrorKind::InvalidArgument,
                "jacobi_deriv: derivative order must be 1 or 2, got " +
                    std::to_string(k));
  }
  if (order.n < 0) {
    throw Error(ErrorKind::InvalidArgument,
                "jacobi_deriv: negative degree " + std::to_string(order.n));
  }
  if (order.n < k) return 0.0;

  const Complex sum = static_cast<double>(order.n) + order.a + order.b;
  Complex factor = 0.5 * (sum + 1.0);
  if (k == 2) factor *= 0.5 * (sum + 2.0);
  const double shift = k;
  return factor *
         jacobi_eval({order.n - k, order.a + shift, order.b + shift}, z);
}

namespace {

Complex central_difference(const std::function<Complex(Complex)>& f,
                           Complex z0, double h, Complex direction,
                           double noise_threshold) {
  const Complex step = h * direction;
  const Complex f_plus = f(z0 + step);
  const Complex f_mid = f(z0);
  const Complex f_minus = f(z0 - step);
  const double noise = std::numeric_limits<double>::epsilon() *
                       (std::abs(f_plus) + 2.0 * std::abs(f_mid) +
                        std::abs(f_minus)) /
                       (h * h);
  if (noise > noise_threshold * std::max(1.0, std::abs(f_mid))) {
    throw Error(ErrorKind::StepTooSmall,
                "complex_second_derivative: step h=" + std::to_string(h) +
                    " loses too many digits to cancellation");
  }
  return (f_plus - 2.0 * f_mid + f_minus) / (step * step);
}

}  // namespace

Complex complex_second_derivative(const std::function<Complex(Complex)>& f,
                                  Complex z0,
                                  const SecondDerivativeOptions& options) {
  if (!(options.h > 0.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "complex_second_derivative: step must be positive");
  }
  const double norm = std::abs(options.direction);
  if (norm == 0.0) {
    throw Error(ErrorKind::InvalidArgument,
                "complex_second_derivative: zero direction");
  }
  const Complex direction = options.direction / norm;
  const Complex coarse = central_difference(f, z0, options.h, direction,
                                            options.noise_threshold);
  if (!options.richardson) return coarse;
  const Complex fine = central_difference(f, z0, 0.5 * options.h, direction,
                                          options.noise_threshold);
  return (4.0 * fine - coarse) / 3.0;
}

Complex principal_pow(Complex w, Complex p) {
  if (w == 0.0) return p == 0.0 ? Complex{1.0} : Complex{0.0};
  return std::exp(p * std::log(w));
}

}  // namespace pth
