// Acceptance run: one PASS/FAIL line per criterion, each with its own
// tolerance and wall-clock budget. Exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "oracles.hpp"
#include "pthulthen/contour.hpp"
#include "pthulthen/core_math.hpp"
#include "pthulthen/error.hpp"
#include "pthulthen/hulthen.hpp"
#include "pthulthen/poschl_teller.hpp"
#include "pthulthen/verify.hpp"

using pth::Complex;

namespace {

constexpr double kEps = 0.3;

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> body;
};

std::vector<Complex> line_points(double eps, double half, int count) {
  std::vector<Complex> points;
  for (int i = 0; i < count; ++i) {
    points.push_back(pth::shifted_line(eps, -half + 2.0 * half * i / (count - 1)));
  }
  return points;
}

// Closed-form energy vs kappa^2 from the beta inversion.
Outcome closed_form() {
  oracle::Sampler rng;
  double worst = 0.0;
  int done = 0;
  while (done < 1000) {
    const double alpha = rng.uniform(0.0, 5.0);
    const double C = rng.uniform(-20.0, 20.0);
    const int sigma = rng.integer(0, 1) == 0 ? -1 : 1;
    const int n = rng.integer(0, 10);
    if (std::abs(sigma * alpha + 2 * n + 1) <= 1e-6) continue;
    const double A = 1.0 - alpha * alpha;
    const pth::HulthenModel model(A, C - A, kEps);
    const auto p = pth::state_parameters(model, sigma, n);
    const double kappa_sq = p.kappa * p.kappa;
    worst = std::max(worst, std::abs(pth::energy(model, sigma, n) - kappa_sq) /
                                std::max(1.0, std::abs(kappa_sq)));
    ++done;
  }
  return {worst <= 1e-12, fmt::format("1000 sets, max rel err {:.2e} (tol 1e-12)", worst)};
}

Outcome liouville_identity() {
  const pth::PTModel pt(3.0, 3.0, kEps);
  const auto points = pth::sample_arch(kEps, -8.0, 8.0, 200);
  double worst = 0.0;
  double control = INFINITY;
  int states = 0;
  for (const auto& entry : pth::enumerate_pt_spectrum(pt)) {
    const auto h = pth::hulthen_from_pt_state(pt, entry.qn);
    worst = std::max(worst, pth::check_liouville_identity(pt, entry.qn, h, points));
    const pth::HulthenModel perturbed(h.A(), h.B() + 0.1, kEps);
    control = std::min(control, pth::liouville_deviation(pt, entry.kappa, perturbed, points));
    ++states;
  }
  return {states == 3 && worst < 1e-8 && control > 1e-3,
          fmt::format("{} states, max dev {:.2e} (tol 1e-8), perturbed-B control min {:.2e} (> 1e-3)",
                      states, worst, control)};
}

Outcome residuals() {
  double pt_worst = 0.0;
  double pt_control = INFINITY;
  double h_worst = 0.0;
  double h_control = INFINITY;
  int pt_states = 0;
  int h_states = 0;

  std::vector<Complex> arch;
  std::vector<Complex> tangents;
  for (const auto& p : pth::sample_arch(kEps, -5.0, 5.0, 100)) {
    arch.push_back(p.xi);
    tangents.push_back(pth::arch_tangent(kEps, p.x));
  }
  const auto hulthen_check = [&](const pth::HulthenModel& model, const pth::SpectrumEntry& entry) {
    pth::BranchTracker tracker;
    const auto wave = [&](Complex xi) { return pth::psi(model, entry, xi, &tracker); };
    const auto V = [&](Complex xi) { return pth::potential_V(model, xi); };
    h_worst = std::max(h_worst,
                       pth::residual_sweep_differenced(wave, V, entry.energy, arch, tangents).max_residual);
    tracker.reset();
    h_control = std::min(h_control, pth::residual_sweep_differenced(wave, V, entry.energy + 1.0, arch,
                                                                    tangents).max_residual);
    ++h_states;
  };

  for (const pth::PTModel& pt : {pth::PTModel(3.0, 3.0, kEps), pth::PTModel(5.0, 2.0, kEps)}) {
    const auto W = [&](Complex r) { return pth::potential_W(pt, r); };
    const auto points = line_points(kEps, 6.0, 50);
    for (const auto& entry : pth::enumerate_pt_spectrum(pt)) {
      const auto state = [&](Complex r) { return pth::chi(pt, entry.qn, r); };
      pt_worst = std::max(pt_worst, pth::residual_sweep(state, W, entry.energy, points).max_residual);
      pt_control = std::min(pt_control,
                            pth::residual_sweep(state, W, entry.energy + 1.0, points).max_residual);
      ++pt_states;

      // Pullback of this state, E = kappa^2 (also covers levels the closed
      // form excludes).
      const auto h = pth::hulthen_from_pt_state(pt, entry.qn);
      const double tau_beta = entry.qn.tau * pt.beta();
      hulthen_check(h, {{entry.qn.n, entry.qn.sigma, 1}, entry.kappa, entry.kappa * entry.kappa, tau_beta});
    }
  }
  const pth::HulthenModel direct(-11.25, 27.25, kEps);
  for (const auto& entry : pth::enumerate_hulthen_spectrum(direct)) hulthen_check(direct, entry);

  const bool ok = pt_worst < 1e-9 && h_worst < 1e-7 && pt_control > 1e-2 && h_control > 1e-2;
  return {ok, fmt::format("PT {} states max {:.2e} (tol 1e-9); Hulthen {} states max {:.2e} "
                          "(tol 1e-7); E+1 controls min {:.2e}, {:.2e} (> 1e-2)",
                          pt_states, pt_worst, h_states, h_worst, pt_control, h_control)};
}

Outcome fd_oracle() {
  const pth::PTModel model(3.0, 3.0, kEps);
  const auto spectrum = pth::enumerate_pt_spectrum(model);
  std::vector<double> targets;
  for (const auto& entry : spectrum) targets.push_back(entry.energy);
  const int k = static_cast<int>(targets.size()) + 2;

  const pth::FDGrid grid{12.0, 2000};
  const pth::FDGrid fine{12.0, 2 * grid.points + 1};  // exactly half the spacing
  const auto values = pth::fd_pt_eigenvalues(model, grid, k);
  const auto fine_values = pth::fd_pt_eigenvalues(model, fine, k);
  const auto reports = pth::match_eigenvalues(values, targets);
  const auto fine_reports = pth::match_eigenvalues(fine_values, targets);

  bool ok = !targets.empty();
  double worst = 0.0;
  double leak = 0.0;
  double ratio_lo = INFINITY;
  double ratio_hi = 0.0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    ok = ok && reports[i].matched && fine_reports[i].matched;
    worst = std::max(worst, reports[i].abs_error);
    leak = std::max(leak, reports[i].imag_leak);
    const double ratio = reports[i].abs_error / fine_reports[i].abs_error;
    ratio_lo = std::min(ratio_lo, ratio);
    ratio_hi = std::max(ratio_hi, ratio);
  }
  // no spurious bound states
  const auto bound = std::count_if(values.begin(), values.end(), [](Complex z) { return z.real() < 0.0; });
  ok = ok && bound == static_cast<long>(targets.size()) && worst < 1e-2 && leak < 1e-6 &&
       ratio_lo > 3.5 && ratio_hi < 4.5;
  return {ok, fmt::format("{} targets, max |err| {:.2e} (tol 1e-2), max |Im| {:.2e} (tol 1e-6), "
                          "halved-h ratios [{:.3f}, {:.3f}]",
                          targets.size(), worst, leak, ratio_lo, ratio_hi)};
}

Outcome contour_geometry() {
  const double epsilons[] = {0.1, 0.3, 0.7, 1.2};
  const int per_eps = 2500;
  double worst = 0.0;
  bool confined = true;
  bool antisymmetric = true;
  for (double eps : epsilons) {
    for (int i = 0; i < per_eps; ++i) {
      const double x = -10.0 + 20.0 * i / (per_eps - 1);
      const auto p = pth::contour_point(eps, x);
      const Complex lhs = std::sinh(Complex{x, -eps});
      const Complex rhs = Complex{0.0, -1.0} * std::exp(Complex{0.0, 1.0} * p.xi);
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
      confined = confined && std::abs(p.v) < M_PI / 2;
      const auto mirror = pth::contour_point(eps, -x);
      antisymmetric = antisymmetric && mirror.xi == -std::conj(p.xi);
    }
  }
  return {worst <= 1e-12 && confined && antisymmetric,
          fmt::format("{} points, max rel err {:.2e} (tol 1e-12), |v| < pi/2: {}, "
                      "xi(-x) = -conj xi(x): {}",
                      4 * per_eps, worst, confined, antisymmetric)};
}

Outcome positivity_and_decay() {
  oracle::Sampler rng;
  int energies = 0;
  bool positive = true;
  for (int trial = 0; trial < 300; ++trial) {
    const pth::HulthenModel model(rng.uniform(-30.0, 1.0), rng.uniform(-40.0, 40.0), kEps);
    for (const auto& entry : pth::enumerate_hulthen_spectrum(model)) {
      positive = positive && entry.energy > 0.0;
      ++energies;
    }
  }

  // Tail factor of V at xi = -iu is 1/(e^{2u} - 1); thresholds are on |V| / (|A| + |B|).
  const double us[] = {5.0, 10.0, 20.0};
  const double limits[] = {1e-3, 1e-7, 1e-15};
  bool tail = true;
  std::string tail_text;
  for (const pth::HulthenModel& model :
       {pth::HulthenModel(-8.0, 24.0, kEps), pth::HulthenModel(-11.25, 27.25, kEps),
        pth::HulthenModel(0.75, -10.75, kEps)}) {
    const double scale = std::abs(model.A()) + std::abs(model.B());
    for (int i = 0; i < 3; ++i) {
      const double scaled = std::abs(pth::potential_V(model, {0.0, -us[i]})) / scale;
      tail = tail && scaled < limits[i];
      if (model.A() == -8.0) tail_text += fmt::format(" {:.1e}", scaled);
    }
  }

  // Moduli of pulled-back eigenfunctions beyond |x| = 5.
  bool monotone = true;
  int waves = 0;
  const auto check_wave = [&](const pth::HulthenModel& model, const pth::SpectrumEntry& entry) {
    const auto samples = pth::sample_wavefunction(model, entry, -12.0, 12.0, 241);
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
      const double a = std::abs(samples[i].psi);
      const double b = std::abs(samples[i + 1].psi);
      if (samples[i].x >= 5.0 - 1e-12) monotone = monotone && b < a;
      if (samples[i + 1].x <= -5.0 + 1e-12) monotone = monotone && a < b;
    }
    ++waves;
  };
  const pth::PTModel pt(3.0, 3.0, kEps);
  for (const auto& entry : pth::enumerate_pt_spectrum(pt)) {
    check_wave(pth::hulthen_from_pt_state(pt, entry.qn),
               {{entry.qn.n, entry.qn.sigma, 1}, entry.kappa, entry.kappa * entry.kappa, -pt.beta()});
  }
  for (const pth::HulthenModel& model :
       {pth::HulthenModel(-11.25, 27.25, kEps), pth::HulthenModel(0.75, -10.75, kEps)}) {
    for (const auto& entry : pth::enumerate_hulthen_spectrum(model)) check_wave(model, entry);
  }
  return {positive && energies > 0 && tail && monotone,
          fmt::format("{} energies all > 0: {}; |V(-iu)|/(|A|+|B|) at u=5,10,20:{} (tol 1e-3, 1e-7, "
                      "1e-15); {} wavefunctions monotone beyond |x|=5: {}",
                      energies, positive, tail_text, waves, monotone)};
}

Outcome special_functions() {
  oracle::Sampler rng;
  double recurrence = 0.0;
  double symmetry = 0.0;
  double endpoint = 0.0;
  double derivative = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = rng.integer(0, 10);
    const Complex a = rng.complex_in_box(5.0);
    const Complex b = rng.complex_in_box(5.0);
    const Complex z = rng.complex_in_box(2.0);
    const pth::JacobiOrder order{n, a, b};
    recurrence = std::max(recurrence, oracle::relative_error(pth::jacobi_eval(order, z),
                                                             oracle::jacobi_finite_sum(n, a, b, z)));
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    symmetry = std::max(symmetry, oracle::relative_error(pth::jacobi_eval(order, -z),
                                                         sign * pth::jacobi_eval({n, b, a}, z)));
    endpoint = std::max(endpoint, oracle::relative_error(pth::jacobi_eval(order, 1.0),
                                                         oracle::generalized_binomial(double(n) + a, n)));
    const auto p = [&](Complex w) { return pth::jacobi_eval(order, w); };
    derivative = std::max(derivative, oracle::relative_error(pth::jacobi_deriv(order, z, 1),
                                                             oracle::central_first_derivative(p, z, 1e-5)));
  }
  return {recurrence < 1e-10 && symmetry < 1e-12 && endpoint < 1e-12 && derivative < 1e-7,
          fmt::format("recurrence {:.2e} (1e-10), symmetry {:.2e} (1e-12), endpoint {:.2e} (1e-12), "
                      "derivative {:.2e} (1e-7)",
                      recurrence, symmetry, endpoint, derivative)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "closed-form consistency", 1.0, closed_form},
      {"AC2", "Liouville identity", 5.0, liouville_identity},
      {"AC3", "ODE residuals", 10.0, residuals},
      {"AC4", "finite-difference oracle", 60.0, fd_oracle},
      {"AC5", "contour geometry", 1.0, contour_geometry},
      {"AC6", "positivity and decay", 5.0, positivity_and_decay},
      {"AC7", "special-function suite", 1.0, special_functions},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& err) {
      outcome = {false, std::string("exception: ") + err.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool passed = outcome.passed && seconds < c.budget_seconds;
    failures += passed ? 0 : 1;
    std::printf("%s %-26s %s  [%.3f s / %.0f s] %s\n", c.id.c_str(), c.title.c_str(),
                passed ? "PASS" : "FAIL", seconds, c.budget_seconds, outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
