#pragma once

#include <vector>

#include "pthulthen/core_math.hpp"

namespace pth {

/// Shifted-line Poschl-Teller model
///   W(r) = (beta^2 - 1/4)/sinh^2 r - (alpha^2 - 1/4)/cosh^2 r,  r = x - i eps.
///
/// alpha and beta are stored nonnegative; their signs live in the parities
/// sigma and tau of QuantumNumbers. Immutable once constructed.
class PTModel {
 public:
  /// Throws InvalidArgument unless alpha, beta >= 0 and 0 < epsilon < pi/2.
  PTModel(double alpha, double beta, double epsilon);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double epsilon() const noexcept { return epsilon_; }

 private:
  double alpha_;
  double beta_;
  double epsilon_;
};

struct QuantumNumbers {
  int n = 0;
  int sigma = -1;
  int tau = -1;

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

/// Throws InvalidArgument for n < 0 or parities outside {-1, +1}.
void validate(const QuantumNumbers& qn);

/// One bound state. On the Poschl-Teller side energy = -kappa^2 and
/// beta_effective is the model beta; on the Hulthen side energy = +kappa^2
/// and beta_effective is the signed, state-dependent tau*beta.
struct SpectrumEntry {
  QuantumNumbers qn;
  double kappa = 0.0;
  double energy = 0.0;
  double beta_effective = 0.0;
};

/// Point r = x - i eps on the shifted line.
inline Complex shifted_line(double epsilon, double x) { return {x, -epsilon}; }

/// Throws Pole when |sinh r| or |cosh r| drops below 1e-12.
Complex potential_W(const PTModel& model, Complex r);

/// kappa = -sigma alpha - tau beta - 2n - 1. Not filtered: may be <= 0.
double kappa_of(const PTModel& model, const QuantumNumbers& qn);

/// All (n, sigma, tau) with kappa > 0, energy ascending, ties broken by
/// (sigma, tau, n).
std::vector<SpectrumEntry> enumerate_pt_spectrum(const PTModel& model);

/// Value with first and second derivatives in the independent variable.
struct WaveValue {
  Complex value;
  Complex d1;
  Complex d2;
};

/// chi(r) = sinh^{tau beta + 1/2} r  cosh^{sigma alpha + 1/2} r
///          P_n^{(tau beta, sigma alpha)}(cosh 2r)
/// on the principal branch. d1 and d2 are left zero when derivatives is
/// false. Throws BranchCut if sinh r sits on the negative real axis.
WaveValue chi(const PTModel& model, const QuantumNumbers& qn, Complex r,
              bool derivatives = true);

}  // namespace pth
