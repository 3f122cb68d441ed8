#pragma once

#include <vector>

#include "pthulthen/core_math.hpp"
#include "pthulthen/liouville.hpp"
#include "pthulthen/poschl_teller.hpp"

namespace pth {

/// Generalized PT-symmetric Hulthen model on the arch,
///   V(xi) = A/(1 - e^{2i xi})^2 + B/(1 - e^{2i xi}),
/// with alpha = sqrt(1 - A) and C = A + B derived at construction.
class HulthenModel {
 public:
  /// Throws InvalidArgument for A > 1 (imaginary alpha) or eps outside
  /// (0, pi/2).
  HulthenModel(double A, double B, double epsilon);

  double A() const noexcept { return A_; }
  double B() const noexcept { return B_; }
  double epsilon() const noexcept { return epsilon_; }
  double alpha() const noexcept { return alpha_; }
  double C() const noexcept { return A_ + B_; }

 private:
  double A_;
  double B_;
  double epsilon_;
  double alpha_;
};

/// Hulthen model generated by one Poschl-Teller bound state:
/// A = 1 - alpha^2, C = kappa^2 - beta^2. Throws InvalidArgument if the
/// state has kappa <= 0.
HulthenModel hulthen_from_pt_state(const PTModel& model,
                                   const QuantumNumbers& qn);

/// Throws Pole when |1 - e^{2i xi}| < 1e-12.
Complex potential_V(const HulthenModel& model, Complex xi);

struct StateParameters {
  double t = 0.0;         // sigma alpha + 2n + 1
  double tau_beta = 0.0;  // (C - t^2) / (2t)
  double kappa = 0.0;     // -(t^2 + C) / (2t)
};

/// Inverts C = t (t + 2 tau beta) for the state-dependent tau beta.
/// Throws DegenerateState when |t| < 1e-12.
StateParameters state_parameters(const HulthenModel& model, int sigma, int n);

/// E = C + (t - C/t)^2 / 4, which equals kappa^2 of state_parameters.
double energy(const HulthenModel& model, int sigma, int n);

inline constexpr int kDefaultNCap = 64;

/// Admissible states (kappa > 0, t != 0) for n in [0, n_cap], reported with
/// canonical tau = +1 and beta_effective = tau beta, sorted by energy.
std::vector<SpectrumEntry> enumerate_hulthen_spectrum(
    const HulthenModel& model, int n_cap = kDefaultNCap);

/// Poschl-Teller model and quantum numbers whose pullback is `entry`:
/// beta = |tau beta|, tau = sign(tau beta) (+1 for zero).
struct SourceState {
  PTModel model;
  QuantumNumbers qn;
};
SourceState source_state(const HulthenModel& model, const SpectrumEntry& entry);

/// Tolerance on |Im r + eps| accepted by psi for points near the arch.
inline constexpr double kNearArchTolerance = 0.25;

/// Wavefunction at xi on (or near) the arch: chi(r(xi)) / sqrt(r'(xi)).
Complex psi(const HulthenModel& model, const SpectrumEntry& entry, Complex xi,
            BranchTracker* tracker = nullptr);

/// Wavefunction at the arch point with parameter x; r = x - i eps exactly.
Complex psi_at_x(const HulthenModel& model, const SpectrumEntry& entry,
                 double x, BranchTracker* tracker = nullptr);

struct WaveSample {
  double x = 0.0;
  Complex xi;
  Complex psi;
};

/// psi at count uniform x in [x_min, x_max] along the arch. The square-root
/// branch is seeded principal at the sample nearest the arch top and tracked
/// outward in both directions.
std::vector<WaveSample> sample_wavefunction(const HulthenModel& model,
                                            const SpectrumEntry& entry,
                                            double x_min, double x_max,
                                            int count);

}  // namespace pth
