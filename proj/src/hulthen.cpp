#include "pthulthen/hulthen.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "pthulthen/contour.hpp"
#include "pthulthen/error.hpp"

namespace pth {

namespace {

constexpr double kPoleTolerance = 1e-12;
constexpr double kDegenerateTolerance = 1e-12;

void validate_sigma(int sigma) {
  if (sigma != 1 && sigma != -1) {
    throw Error(ErrorKind::InvalidArgument, "sigma must be +1 or -1");
  }
}

}  // namespace

HulthenModel::HulthenModel(double A, double B, double epsilon)
    : A_(A), B_(B), epsilon_(epsilon), alpha_(0.0) {
  if (!std::isfinite(A) || !std::isfinite(B)) {
    throw Error(ErrorKind::InvalidArgument, "HulthenModel: A, B must be finite");
  }
  if (A > 1.0) {
    throw Error(ErrorKind::InvalidArgument,
                "HulthenModel: A must be <= 1 (alpha = sqrt(1 - A) real)");
  }
  validate_epsilon(epsilon);
  alpha_ = std::sqrt(1.0 - A);
}

HulthenModel hulthen_from_pt_state(const PTModel& model,
                                   const QuantumNumbers& qn) {
  validate(qn);
  const double kappa = kappa_of(model, qn);
  if (!(kappa > 0.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "hulthen_from_pt_state: state is not bound (kappa <= 0)");
  }
  const double A = 1.0 - model.alpha() * model.alpha();
  const double C = kappa * kappa - model.beta() * model.beta();
  return HulthenModel(A, C - A, model.epsilon());
}

Complex potential_V(const HulthenModel& model, Complex xi) {
  const Complex denom = 1.0 - std::exp(2.0 * kI * xi);
  if (std::abs(denom) < kPoleTolerance) {
    throw Error(ErrorKind::Pole, "potential_V: xi too close to a pole");
  }
  return model.A() / (denom * denom) + model.B() / denom;
}

StateParameters state_parameters(const HulthenModel& model, int sigma, int n) {
  validate_sigma(sigma);
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be >= 0");
  const double t = sigma * model.alpha() + 2.0 * n + 1.0;
  if (std::abs(t) < kDegenerateTolerance) {
    throw Error(ErrorKind::DegenerateState,
                "state_parameters: sigma alpha + 2n + 1 vanishes for n=" +
                    std::to_string(n));
  }
  const double C = model.C();
  return {t, (C - t * t) / (2.0 * t), -(t * t + C) / (2.0 * t)};
}

double energy(const HulthenModel& model, int sigma, int n) {
  validate_sigma(sigma);
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be >= 0");
  const double t = sigma * model.alpha() + 2.0 * n + 1.0;
  if (std::abs(t) < kDegenerateTolerance) {
    throw Error(ErrorKind::DegenerateState,
                "energy: sigma alpha + 2n + 1 vanishes for n=" +
                    std::to_string(n));
  }
  const double C = model.C();
  const double bracket = t - C / t;
  return C + 0.25 * bracket * bracket;
}

std::vector<SpectrumEntry> enumerate_hulthen_spectrum(
    const HulthenModel& model, int n_cap) {
  if (n_cap < 0) {
    throw Error(ErrorKind::InvalidArgument, "n_cap must be >= 0");
  }
  std::vector<SpectrumEntry> entries;
  for (int sigma : {-1, 1}) {
    for (int n = 0; n <= n_cap; ++n) {
      const double t = sigma * model.alpha() + 2.0 * n + 1.0;
      if (std::abs(t) < kDegenerateTolerance) continue;
      const StateParameters p = state_parameters(model, sigma, n);
      if (!(p.kappa > 0.0)) continue;
      entries.push_back(
          {{n, sigma, 1}, p.kappa, p.kappa * p.kappa, p.tau_beta});
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const SpectrumEntry& lhs, const SpectrumEntry& rhs) {
              return std::tuple(lhs.energy, lhs.qn.sigma, lhs.qn.n) <
                     std::tuple(rhs.energy, rhs.qn.sigma, rhs.qn.n);
            });
  return entries;
}

SourceState source_state(const HulthenModel& model, const SpectrumEntry& entry) {
  const double tau_beta = entry.beta_effective;
  const int tau = tau_beta < 0.0 ? -1 : 1;
  return {PTModel(model.alpha(), std::abs(tau_beta), model.epsilon()),
          QuantumNumbers{entry.qn.n, entry.qn.sigma, tau}};
}

Complex psi(const HulthenModel& model, const SpectrumEntry& entry, Complex xi,
            BranchTracker* tracker) {
  const SourceState src = source_state(model, entry);
  const CoordinateMap map = arch_map(model.epsilon(), kNearArchTolerance);
  const Complex chi_value = chi(src.model, src.qn, map.r(xi), false).value;
  return transform_wavefunction(chi_value, map, xi, tracker);
}

Complex psi_at_x(const HulthenModel& model, const SpectrumEntry& entry,
                 double x, BranchTracker* tracker) {
  const SourceState src = source_state(model, entry);
  const ContourPoint point = contour_point(model.epsilon(), x);
  const MapJet jet = arch_jet_from_r(point.r);
  const Complex chi_value = chi(src.model, src.qn, point.r, false).value;
  const CoordinateMap fixed([jet](Complex) { return jet; });
  return transform_wavefunction(chi_value, fixed, point.xi, tracker);
}

std::vector<WaveSample> sample_wavefunction(const HulthenModel& model,
                                            const SpectrumEntry& entry,
                                            double x_min, double x_max,
                                            int count) {
  const std::vector<ContourPoint> points =
      sample_arch(model.epsilon(), x_min, x_max, count);
  std::vector<WaveSample> samples(points.size());
  std::size_t top = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (std::abs(points[i].x) < std::abs(points[top].x)) top = i;
  }
  BranchTracker rightward;
  samples[top] = {points[top].x, points[top].xi,
                  psi_at_x(model, entry, points[top].x, &rightward)};
  BranchTracker leftward = rightward;
  for (std::size_t i = top + 1; i < points.size(); ++i) {
    samples[i] = {points[i].x, points[i].xi,
                  psi_at_x(model, entry, points[i].x, &rightward)};
  }
  for (std::size_t i = top; i-- > 0;) {
    samples[i] = {points[i].x, points[i].xi,
                  psi_at_x(model, entry, points[i].x, &leftward)};
  }
  return samples;
}

}  // namespace pth
