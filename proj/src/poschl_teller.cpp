#include "pthulthen/poschl_teller.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include "pthulthen/error.hpp"

namespace pth {

namespace {

constexpr double kPoleTolerance = 1e-12;
constexpr double kCutTolerance = 1e-12;

}  // namespace

PTModel::PTModel(double alpha, double beta, double epsilon)
    : alpha_(alpha), beta_(beta), epsilon_(epsilon) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorKind::InvalidArgument,
                "PTModel: alpha must be finite and >= 0");
  }
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw Error(ErrorKind::InvalidArgument,
                "PTModel: beta must be finite and >= 0");
  }
  if (!(epsilon > 0.0 && epsilon < 0.5 * std::numbers::pi)) {
    throw Error(ErrorKind::InvalidArgument,
                "PTModel: epsilon must lie in (0, pi/2)");
  }
}

void validate(const QuantumNumbers& qn) {
  if (qn.n < 0) {
    throw Error(ErrorKind::InvalidArgument,
                "quantum numbers: n must be >= 0, got " + std::to_string(qn.n));
  }
  if ((qn.sigma != 1 && qn.sigma != -1) || (qn.tau != 1 && qn.tau != -1)) {
    throw Error(ErrorKind::InvalidArgument,
                "quantum numbers: sigma and tau must be +1 or -1");
  }
}

Complex potential_W(const PTModel& model, Complex r) {
  const Complex s = std::sinh(r);
  const Complex c = std::cosh(r);
  if (std::abs(s) < kPoleTolerance || std::abs(c) < kPoleTolerance) {
    throw Error(ErrorKind::Pole, "potential_W: r too close to a pole");
  }
  const double beta = model.beta();
  const double alpha = model.alpha();
  return (beta * beta - 0.25) / (s * s) - (alpha * alpha - 0.25) / (c * c);
}

double kappa_of(const PTModel& model, const QuantumNumbers& qn) {
  return -qn.sigma * model.alpha() - qn.tau * model.beta() - 2.0 * qn.n - 1.0;
}

std::vector<SpectrumEntry> enumerate_pt_spectrum(const PTModel& model) {
  std::vector<SpectrumEntry> entries;
  for (int sigma : {-1, 1}) {
    for (int tau : {-1, 1}) {
      for (int n = 0;; ++n) {
        const QuantumNumbers qn{n, sigma, tau};
        const double kappa = kappa_of(model, qn);
        if (!(kappa > 0.0)) break;
        entries.push_back({qn, kappa, -kappa * kappa, model.beta()});
      }
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const SpectrumEntry& lhs, const SpectrumEntry& rhs) {
              return std::tuple(lhs.energy, lhs.qn.sigma, lhs.qn.tau, lhs.qn.n) <
                     std::tuple(rhs.energy, rhs.qn.sigma, rhs.qn.tau, rhs.qn.n);
            });
  return entries;
}

WaveValue chi(const PTModel& model, const QuantumNumbers& qn, Complex r,
              bool derivatives) {
  validate(qn);
  const Complex s = std::sinh(r);
  const Complex c = std::cosh(r);
  if (std::abs(s.imag()) < kCutTolerance && s.real() <= 0.0) {
    throw Error(ErrorKind::BranchCut,
                "chi: sinh r lies on the principal branch cut");
  }
  if (std::abs(c.imag()) < kCutTolerance && c.real() <= 0.0) {
    throw Error(ErrorKind::BranchCut,
                "chi: cosh r lies on the principal branch cut");
  }

  const double jacobi_a = qn.tau * model.beta();
  const double jacobi_b = qn.sigma * model.alpha();
  const Complex power_s = jacobi_a + 0.5;
  const Complex power_c = jacobi_b + 0.5;
  const JacobiOrder order{qn.n, jacobi_a, jacobi_b};
  const Complex z = std::cosh(2.0 * r);

  const Complex envelope = principal_pow(s, power_s) * principal_pow(c, power_c);
  const Complex poly = jacobi_eval(order, z);
  WaveValue out{envelope * poly, 0.0, 0.0};
  if (!derivatives) return out;

  // envelope'/envelope = g, envelope'' = envelope (g^2 + g')
  const Complex g = power_s * c / s + power_c * s / c;
  const Complex g_prime = -power_s / (s * s) + power_c / (c * c);
  const Complex env_d1 = envelope * g;
  const Complex env_d2 = envelope * (g * g + g_prime);

  const Complex z_d1 = 2.0 * std::sinh(2.0 * r);
  const Complex z_d2 = 4.0 * z;
  const Complex poly_z = jacobi_deriv(order, z, 1);
  const Complex poly_zz = jacobi_deriv(order, z, 2);
  const Complex poly_d1 = poly_z * z_d1;
  const Complex poly_d2 = poly_zz * z_d1 * z_d1 + poly_z * z_d2;

  out.d1 = env_d1 * poly + envelope * poly_d1;
  out.d2 = env_d2 * poly + 2.0 * env_d1 * poly_d1 + envelope * poly_d2;
  return out;
}

}  // namespace pth
