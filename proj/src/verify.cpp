#include "pthulthen/verify.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <string>

#include "pthulthen/error.hpp"
#include "pthulthen/liouville.hpp"

namespace pth {

void validate(const FDGrid& grid) {
  if (!(grid.half_width > 0.0) || !std::isfinite(grid.half_width)) {
    throw Error(ErrorKind::InvalidArgument, "FDGrid: half width must be > 0");
  }
  if (grid.points < 100) {
    throw Error(ErrorKind::InvalidArgument,
                "FDGrid: need at least 100 interior points");
  }
}

namespace {

// Norm used for deflation tests; cheaper than abs() and equivalent up to sqrt 2.
double l1(Complex z) { return std::abs(z.real()) + std::abs(z.imag()); }

}  // namespace

std::vector<Complex> complex_symmetric_tridiagonal_eigenvalues(
    std::vector<Complex> d, std::vector<Complex> off) {
  const std::size_t n = d.size();
  if (n == 0) return {};
  if (off.size() + 1 != n) {
    throw Error(ErrorKind::InvalidArgument,
                "tridiagonal eigensolver: off-diagonal must have n - 1 entries");
  }
  constexpr int kMaxIterations = 60;
  constexpr double kEps = std::numeric_limits<double>::epsilon();

  // e[i] couples d[i] and d[i+1]; e[n-1] is a zero sentinel.
  std::vector<Complex> e(std::move(off));
  e.push_back(0.0);

  for (std::size_t l = 0; l < n; ++l) {
    int iterations = 0;
    std::size_t m = l;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = l1(d[m]) + l1(d[m + 1]);
        if (l1(e[m]) <= kEps * dd) break;
      }
      if (m == l) break;
      if (iterations++ == kMaxIterations) {
        throw Error(ErrorKind::EigensolverFailure,
                    fmt::format("tridiagonal QL: no convergence for eigenvalue "
                                "{} after {} sweeps (|e|={:.3e})",
                                l, kMaxIterations, std::abs(e[l])));
      }
      // Wilkinson-type shift from the leading 2x2 block.
      Complex g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      Complex r = std::sqrt(g * g + 1.0);
      const Complex denom = std::abs(g + r) >= std::abs(g - r) ? g + r : g - r;
      g = d[m] - d[l] + e[l] / denom;

      Complex s = 1.0;
      Complex c = 1.0;
      Complex p = 0.0;
      bool deflated = false;
      for (std::size_t i = m; i-- > l;) {
        const Complex f = s * e[i];
        const Complex b = c * e[i];
        r = std::sqrt(f * f + g * g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        if (std::abs(r) < 1e-10 * (std::abs(f) + std::abs(g))) {
          // f^2 + g^2 ~ 0 with f, g != 0: the complex rotation is undefined.
          throw Error(ErrorKind::EigensolverFailure,
                      fmt::format("tridiagonal QL: isotropic rotation breakdown "
                                  "at row {}",
                                  i));
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
  return d;
}

std::vector<Complex> fd_pt_eigenvalues(const PTModel& model,
                                       const FDGrid& grid, int k) {
  validate(grid);
  if (k < 1 || k > grid.points) {
    throw Error(ErrorKind::InvalidArgument,
                fmt::format("fd_pt_eigenvalues: k must lie in [1, {}]",
                            grid.points));
  }
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);
  const auto n = static_cast<std::size_t>(grid.points);
  std::vector<Complex> diagonal(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = -grid.half_width + static_cast<double>(i + 1) * h;
    diagonal[i] = 2.0 * inv_h2 + potential_W(model, shifted_line(model.epsilon(), x));
  }
  std::vector<Complex> off(n - 1, Complex{-inv_h2, 0.0});

  std::vector<Complex> values =
      complex_symmetric_tridiagonal_eigenvalues(std::move(diagonal), std::move(off));
  std::sort(values.begin(), values.end(), [](Complex lhs, Complex rhs) {
    if (lhs.real() != rhs.real()) return lhs.real() < rhs.real();
    return lhs.imag() < rhs.imag();
  });
  values.resize(static_cast<std::size_t>(k));
  return values;
}

std::vector<OracleReport> match_eigenvalues(std::span<const Complex> found,
                                            std::span<const double> targets,
                                            double radius) {
  std::vector<OracleReport> reports(targets.size());
  std::vector<bool> used(found.size(), false);

  // Greedy over all (target, eigenvalue) pairs by increasing distance.
  struct Pair {
    double distance;
    std::size_t target;
    std::size_t value;
  };
  std::vector<Pair> pairs;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    reports[t].target = targets[t];
    for (std::size_t v = 0; v < found.size(); ++v) {
      const double dist = std::abs(found[v] - targets[t]);
      if (dist <= radius) pairs.push_back({dist, t, v});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    return a.distance < b.distance;
  });
  for (const Pair& pair : pairs) {
    OracleReport& report = reports[pair.target];
    if (report.matched || used[pair.value]) continue;
    used[pair.value] = true;
    report.matched = true;
    report.found = found[pair.value];
    report.abs_error = pair.distance;
    report.imag_leak = std::abs(found[pair.value].imag());
  }
  for (OracleReport& report : reports) {
    if (!report.matched) {
      report.found = Complex{std::numeric_limits<double>::quiet_NaN(), 0.0};
      report.abs_error = std::numeric_limits<double>::infinity();
      report.imag_leak = std::numeric_limits<double>::infinity();
    }
  }
  return reports;
}

namespace {

// Evaluates V, counting pole hits instead of propagating them.
bool try_potential(const PotentialFn& V, Complex z, Complex& out) {
  try {
    out = V(z);
    return std::isfinite(out.real()) && std::isfinite(out.imag());
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::Pole) throw;
    return false;
  }
}

double relative_residual(Complex value, Complex second, Complex potential,
                         double E) {
  return std::abs(-second + (potential - E) * value) /
         std::max(1.0, std::abs(value));
}

}  // namespace

ResidualResult residual_sweep(const StateEvaluator& state, const PotentialFn& V,
                              double E, std::span<const Complex> points) {
  ResidualResult result;
  for (Complex z : points) {
    Complex potential;
    if (!try_potential(V, z, potential)) {
      ++result.pole_warnings;
      continue;
    }
    const WaveValue w = state(z);
    result.max_residual = std::max(result.max_residual,
                                   relative_residual(w.value, w.d2, potential, E));
  }
  return result;
}

ResidualResult residual_sweep_differenced(const WaveFn& psi,
                                          const PotentialFn& V, double E,
                                          std::span<const Complex> points,
                                          std::span<const Complex> directions,
                                          double step) {
  if (!directions.empty() && directions.size() != points.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "residual_sweep_differenced: one direction per point required");
  }
  ResidualResult result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Complex z = points[i];
    Complex potential;
    if (!try_potential(V, z, potential)) {
      ++result.pole_warnings;
      continue;
    }
    SecondDerivativeOptions options;
    options.h = step;
    options.richardson = true;
    if (!directions.empty()) options.direction = directions[i];
    const Complex second = complex_second_derivative(psi, z, options);
    result.max_residual = std::max(
        result.max_residual, relative_residual(psi(z), second, potential, E));
  }
  return result;
}

double liouville_deviation(const PTModel& pt_model, double kappa,
                           const HulthenModel& hulthen,
                           std::span<const ContourPoint> points) {
  const CoordinateMap map = arch_map(pt_model.epsilon());
  const PotentialFn W = [&pt_model](Complex r) { return potential_W(pt_model, r); };
  const double kappa_sq = kappa * kappa;
  double worst = 0.0;
  for (const ContourPoint& point : points) {
    const Complex transformed = transform_potential(W, kappa_sq, map, point.xi);
    const Complex target = potential_V(hulthen, point.xi);
    worst = std::max(worst, std::abs(transformed + kappa_sq - target));
  }
  return worst;
}

double check_liouville_identity(const PTModel& pt_model,
                                const QuantumNumbers& qn,
                                const HulthenModel& hulthen,
                                std::span<const ContourPoint> points) {
  validate(qn);
  constexpr double kTolerance = 1e-10;
  const double kappa = kappa_of(pt_model, qn);
  const double alpha = pt_model.alpha();
  const double beta = pt_model.beta();
  const double expected_A = 1.0 - alpha * alpha;
  const double expected_C = kappa * kappa - beta * beta;
  const auto off = [](double got, double want) {
    return std::abs(got - want) > kTolerance * std::max(1.0, std::abs(want));
  };
  if (!(kappa > 0.0)) {
    throw Error(ErrorKind::Consistency,
                "check_liouville_identity: state is not bound (kappa <= 0)");
  }
  if (off(hulthen.A(), expected_A) || off(hulthen.C(), expected_C) ||
      off(hulthen.epsilon(), pt_model.epsilon())) {
    throw Error(ErrorKind::Consistency,
                fmt::format("check_liouville_identity: Hulthen couplings "
                            "(A={}, C={}) do not match the source state "
                            "(A={}, C={})",
                            hulthen.A(), hulthen.C(), expected_A, expected_C));
  }
  return liouville_deviation(pt_model, kappa, hulthen, points);
}

namespace {

std::string label(const QuantumNumbers& qn) {
  return fmt::format("[n={},sigma={:+d},tau={:+d}]", qn.n, qn.sigma, qn.tau);
}

CheckRecord upper_bound(std::string name, double target, Complex found,
                        double error, double tolerance) {
  return {std::move(name), target, found, error, tolerance,
          Comparison::AtMost, error <= tolerance};
}

CheckRecord lower_bound(std::string name, double target, Complex found,
                        double error, double floor) {
  return {std::move(name), target, found, error, floor, Comparison::Above,
          error > floor};
}

std::vector<Complex> xs_on_line(double epsilon, double half_width, int count) {
  std::vector<Complex> points;
  for (const ContourPoint& p : sample_arch(epsilon, -half_width, half_width, count)) {
    points.push_back(p.r);
  }
  return points;
}

}  // namespace

std::vector<CheckRecord> run_verification(const PTModel& model,
                                          const VerifyOptions& options) {
  validate(options.grid);
  std::vector<CheckRecord> records;
  const double eps = model.epsilon();
  const std::vector<SpectrumEntry> spectrum = enumerate_pt_spectrum(model);

  // Finite-difference oracle on the shifted line.
  std::vector<Complex> all_values =
      fd_pt_eigenvalues(model, options.grid, options.grid.points);
  std::vector<double> targets;
  for (const SpectrumEntry& entry : spectrum) targets.push_back(entry.energy);
  const std::vector<OracleReport> reports = match_eigenvalues(all_values, targets);

  std::vector<OracleReport> refined_reports;
  if (options.convergence_study) {
    // 2N + 1 interior points halve the spacing exactly.
    const FDGrid fine{options.grid.half_width, 2 * options.grid.points + 1};
    refined_reports = match_eigenvalues(
        fd_pt_eigenvalues(model, fine, fine.points), targets);
  }

  const auto negatives = std::count_if(all_values.begin(), all_values.end(),
                                       [](Complex z) { return z.real() < 0.0; });
  records.push_back(upper_bound(
      "fd_bound_state_count", static_cast<double>(spectrum.size()),
      static_cast<double>(negatives),
      std::abs(static_cast<double>(negatives) - static_cast<double>(spectrum.size())),
      0.0));

  const std::vector<ContourPoint> identity_points = sample_arch(
      eps, -options.identity_half_width, options.identity_half_width,
      options.identity_points);
  const std::vector<ContourPoint> arch_points = sample_arch(
      eps, -options.arch_residual_half_width, options.arch_residual_half_width,
      options.arch_residual_points);
  std::vector<Complex> arch_xi;
  std::vector<Complex> arch_dir;
  for (const ContourPoint& p : arch_points) {
    arch_xi.push_back(p.xi);
    arch_dir.push_back(arch_tangent(eps, p.x));
  }
  const std::vector<Complex> line_points =
      xs_on_line(eps, options.pt_residual_half_width, options.pt_residual_points);
  const PotentialFn W = [&model](Complex r) { return potential_W(model, r); };

  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    const SpectrumEntry& entry = spectrum[i];
    const QuantumNumbers& qn = entry.qn;
    const std::string tag = label(qn);
    const OracleReport& report = reports[i];

    records.push_back(upper_bound("fd_eigenvalue" + tag, report.target,
                                  report.found, report.abs_error,
                                  options.eigenvalue_tolerance));
    records.push_back(upper_bound("fd_imag_leak" + tag, 0.0, report.found,
                                  report.imag_leak, options.imag_leak_tolerance));
    if (options.convergence_study) {
      const OracleReport& fine = refined_reports[i];
      const double ratio = report.abs_error / fine.abs_error;
      records.push_back(upper_bound("fd_convergence_ratio" + tag, 4.0, ratio,
                                    std::abs(ratio - 4.0), 1.0));
    }

    // Source equation on the shifted line, analytic derivatives.
    const StateEvaluator state = [&model, qn](Complex r) {
      return chi(model, qn, r, true);
    };
    const ResidualResult pt_residual =
        residual_sweep(state, W, entry.energy, line_points);
    records.push_back(upper_bound("pt_residual" + tag, 0.0,
                                  pt_residual.max_residual,
                                  pt_residual.max_residual,
                                  options.pt_residual_tolerance));
    const ResidualResult pt_control =
        residual_sweep(state, W, entry.energy + 1.0, line_points);
    records.push_back(lower_bound("pt_residual_wrong_energy" + tag, 0.0,
                                  pt_control.max_residual,
                                  pt_control.max_residual,
                                  options.negative_control_floor));

    // Transformed model generated by this state.
    const HulthenModel hulthen = hulthen_from_pt_state(model, qn);
    const double kappa_sq = entry.kappa * entry.kappa;
    const double identity =
        check_liouville_identity(model, qn, hulthen, identity_points);
    records.push_back(upper_bound("liouville_identity" + tag, 0.0, identity,
                                  identity, options.identity_tolerance));
    const HulthenModel perturbed(hulthen.A(), hulthen.B() + 0.1, eps);
    const double perturbed_dev =
        liouville_deviation(model, entry.kappa, perturbed, identity_points);
    records.push_back(lower_bound("liouville_perturbed_B" + tag, 0.0,
                                  perturbed_dev, perturbed_dev,
                                  options.identity_negative_floor));

    // Closed form: the enumeration must contain (sigma, n) with E = kappa^2
    // and tau beta recovered, unless t = sigma alpha + 2n + 1 vanishes, where
    // the inversion is undefined and the state must be excluded instead.
    const double tau_beta = qn.tau * model.beta();
    const std::vector<SpectrumEntry> h_spectrum =
        enumerate_hulthen_spectrum(hulthen);
    const auto match = std::find_if(
        h_spectrum.begin(), h_spectrum.end(), [&qn](const SpectrumEntry& e) {
          return e.qn.sigma == qn.sigma && e.qn.n == qn.n;
        });
    const double t = qn.sigma * model.alpha() + 2.0 * qn.n + 1.0;
    if (std::abs(t) < 1e-12) {
      bool raised = false;
      try {
        state_parameters(hulthen, qn.sigma, qn.n);
      } catch (const Error& err) {
        raised = err.kind() == ErrorKind::DegenerateState;
      }
      const bool excluded = match == h_spectrum.end();
      records.push_back({"hulthen_degenerate_excluded" + tag, 0.0, t,
                         excluded && raised ? 0.0 : 1.0, 0.0,
                         Comparison::AtMost, excluded && raised});
    } else if (match == h_spectrum.end()) {
      records.push_back(upper_bound("hulthen_energy" + tag, kappa_sq,
                                    std::numeric_limits<double>::quiet_NaN(),
                                    std::numeric_limits<double>::infinity(),
                                    1e-12));
    } else {
      const double energy_error =
          std::max(std::abs(match->energy - kappa_sq) / std::max(1.0, kappa_sq),
                   std::abs(match->beta_effective - tau_beta) /
                       std::max(1.0, std::abs(tau_beta)));
      records.push_back(upper_bound("hulthen_energy" + tag, kappa_sq,
                                    match->energy, energy_error, 1e-12));
    }

    // Pulled-back state, built from the source state directly so that
    // t = 0 states are covered as well.
    const SpectrumEntry pulled{{qn.n, qn.sigma, 1}, entry.kappa, kappa_sq,
                               tau_beta};
    const WaveFn wave = [&hulthen, pulled](Complex xi) {
      return psi(hulthen, pulled, xi);
    };
    const PotentialFn V = [&hulthen](Complex xi) {
      return potential_V(hulthen, xi);
    };
    const ResidualResult h_residual =
        residual_sweep_differenced(wave, V, kappa_sq, arch_xi, arch_dir);
    records.push_back(upper_bound("hulthen_residual" + tag, 0.0,
                                  h_residual.max_residual,
                                  h_residual.max_residual,
                                  options.hulthen_residual_tolerance));
    const ResidualResult h_control =
        residual_sweep_differenced(wave, V, kappa_sq + 1.0, arch_xi, arch_dir);
    records.push_back(lower_bound("hulthen_residual_wrong_energy" + tag, 0.0,
                                  h_control.max_residual, h_control.max_residual,
                                  options.negative_control_floor));
  }
  return records;
}

}  // namespace pth
