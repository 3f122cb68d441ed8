#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pthulthen/contour.hpp"
#include "pthulthen/core_math.hpp"
#include "pthulthen/hulthen.hpp"
#include "pthulthen/poschl_teller.hpp"

namespace pth {

/// Dirichlet box x in [-L, L] with N interior points, h = 2L / (N + 1).
struct FDGrid {
  double half_width = 12.0;
  int points = 2000;

  double spacing() const noexcept { return 2.0 * half_width / (points + 1); }
};

/// Throws InvalidArgument unless half_width > 0 and points >= 100.
void validate(const FDGrid& grid);

/// Eigenvalues of a complex symmetric tridiagonal matrix (implicit QL with
/// complex orthogonal rotations). `diagonal` has n entries, `off_diagonal`
/// n - 1. Throws EigensolverFailure on non-convergence or breakdown.
std::vector<Complex> complex_symmetric_tridiagonal_eigenvalues(
    std::vector<Complex> diagonal, std::vector<Complex> off_diagonal);

/// The k eigenvalues of smallest real part of -D2 + diag(W(x_i - i eps)),
/// ascending in real part.
std::vector<Complex> fd_pt_eigenvalues(const PTModel& model,
                                       const FDGrid& grid, int k);

struct OracleReport {
  double target = 0.0;
  Complex found;
  double abs_error = 0.0;
  double imag_leak = 0.0;
  bool matched = false;
};

inline constexpr double kMatchRadius = 0.5;

/// Pairs each target with its nearest unused eigenvalue in the complex
/// plane; targets with nothing inside `radius` come back unmatched.
std::vector<OracleReport> match_eigenvalues(std::span<const Complex> found,
                                            std::span<const double> targets,
                                            double radius = kMatchRadius);

struct ResidualResult {
  double max_residual = 0.0;
  int pole_warnings = 0;
};

using StateEvaluator = std::function<WaveValue(Complex)>;
using WaveFn = std::function<Complex(Complex)>;

/// max |-psi'' + V psi - E psi| / max(1, |psi|) with analytic psi''.
/// Points where V hits a pole are skipped and counted.
ResidualResult residual_sweep(const StateEvaluator& state, const PotentialFn& V,
                              double E, std::span<const Complex> points);

/// Same, with psi'' from Richardson-refined central differences along
/// `directions` (one per point; empty means the real axis).
ResidualResult residual_sweep_differenced(
    const WaveFn& psi, const PotentialFn& V, double E,
    std::span<const Complex> points, std::span<const Complex> directions = {},
    double step = 1e-3);

/// max |transform_potential(W, kappa^2, arch, xi) + kappa^2 - V(xi)| with no
/// coupling consistency check.
double liouville_deviation(const PTModel& pt_model, double kappa,
                           const HulthenModel& hulthen,
                           std::span<const ContourPoint> points);

/// liouville_deviation after checking A = 1 - alpha^2, C = kappa^2 - beta^2
/// and matching eps; throws Consistency otherwise.
double check_liouville_identity(const PTModel& pt_model,
                                const QuantumNumbers& qn,
                                const HulthenModel& hulthen,
                                std::span<const ContourPoint> points);

enum class Comparison { AtMost, Above };

/// One line of a verification report. Above marks a negative control,
/// which passes when the error exceeds the tolerance.
struct CheckRecord {
  std::string name;
  double target = 0.0;
  Complex found;
  double error = 0.0;
  double tolerance = 0.0;
  Comparison comparison = Comparison::AtMost;
  bool passed = false;
};

struct VerifyOptions {
  FDGrid grid{12.0, 2000};
  bool convergence_study = true;
  int pt_residual_points = 50;
  double pt_residual_half_width = 6.0;
  int arch_residual_points = 100;
  double arch_residual_half_width = 5.0;
  int identity_points = 200;
  double identity_half_width = 8.0;

  double eigenvalue_tolerance = 1e-2;
  double imag_leak_tolerance = 1e-6;
  double pt_residual_tolerance = 1e-9;
  double hulthen_residual_tolerance = 1e-7;
  double identity_tolerance = 1e-8;
  double negative_control_floor = 1e-2;
  double identity_negative_floor = 1e-3;
};

/// Runs the full oracle suite for every bound state of `model`.
std::vector<CheckRecord> run_verification(const PTModel& model,
                                          const VerifyOptions& options = {});

}  // namespace pth
