#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "pthulthen/error.hpp"
#include "pthulthen/poschl_teller.hpp"

using pth::Complex;
using pth::PTModel;
using pth::QuantumNumbers;

namespace {

constexpr double kEps = 0.3;

std::vector<double> grid(double lo, double hi, int count) {
  std::vector<double> xs;
  for (int i = 0; i < count; ++i) xs.push_back(lo + (hi - lo) * i / (count - 1));
  return xs;
}

double residual(const PTModel& model, const QuantumNumbers& qn, Complex r,
                double energy) {
  const pth::WaveValue w = pth::chi(model, qn, r);
  return std::abs(-w.d2 + (pth::potential_W(model, r) - energy) * w.value) /
         std::max(1.0, std::abs(w.value));
}

}  // namespace

TEST_CASE("PTModel validates its parameters") {
  CHECK_NOTHROW(PTModel(3.0, 3.0, kEps));
  CHECK_THROWS_AS(PTModel(-1.0, 3.0, kEps), pth::Error);
  CHECK_THROWS_AS(PTModel(1.0, -3.0, kEps), pth::Error);
  CHECK_THROWS_AS(PTModel(1.0, 1.0, 0.0), pth::Error);
  CHECK_THROWS_AS(PTModel(1.0, 1.0, 0.5 * std::numbers::pi), pth::Error);
  CHECK_THROWS_AS(pth::validate(QuantumNumbers{0, 2, 1}), pth::Error);
  CHECK_THROWS_AS(pth::validate(QuantumNumbers{-1, 1, 1}), pth::Error);
}

TEST_CASE("potential_W: hand values") {
  const PTModel free_model(0.5, 0.5, kEps);
  CHECK(std::abs(pth::potential_W(free_model, {0.7, -kEps})) == 0.0);

  const PTModel model(3.0, 3.0, kEps);
  const Complex w = pth::potential_W(model, {0.0, -std::numbers::pi / 4});
  CHECK(std::abs(w - Complex{-35.0}) < 1e-12);
}

TEST_CASE("potential_W: PT symmetry on the shifted line") {
  const PTModel model(2.3, 1.7, kEps);
  for (double x : grid(-6.0, 6.0, 41)) {
    const Complex left = pth::potential_W(model, pth::shifted_line(kEps, -x));
    const Complex right = pth::potential_W(model, pth::shifted_line(kEps, x));
    CHECK(std::abs(left - std::conj(right)) <= 1e-12 * std::max(1.0, std::abs(right)));
  }
}

TEST_CASE("potential_W: pole error") {
  const PTModel model(3.0, 3.0, kEps);
  try {
    pth::potential_W(model, 0.0);
    FAIL("expected a pole error");
  } catch (const pth::Error& err) {
    CHECK(err.kind() == pth::ErrorKind::Pole);
  }
}

TEST_CASE("kappa_of: hand values") {
  const PTModel model(3.0, 3.0, kEps);
  CHECK(pth::kappa_of(model, {0, -1, -1}) == 5.0);
  CHECK(pth::kappa_of(model, {2, -1, -1}) == 1.0);
  CHECK(pth::kappa_of(model, {3, -1, -1}) == -1.0);
  CHECK(pth::kappa_of(model, {0, 1, 1}) == -7.0);
}

TEST_CASE("kappa_of: drops by two per level") {
  const PTModel model(4.2, 1.3, kEps);
  for (int sigma : {-1, 1}) {
    for (int tau : {-1, 1}) {
      for (int n = 0; n < 6; ++n) {
        CHECK(pth::kappa_of(model, {n, sigma, tau}) - pth::kappa_of(model, {n + 1, sigma, tau}) ==
              doctest::Approx(2.0));
      }
    }
  }
}

TEST_CASE("enumerate_pt_spectrum: alpha = beta = 3") {
  // Only (sigma, tau) = (-1, -1) binds: the mixed sectors give kappa = -2n - 1.
  const auto spectrum = pth::enumerate_pt_spectrum(PTModel(3.0, 3.0, kEps));
  REQUIRE(spectrum.size() == 3);
  const double kappas[] = {5.0, 3.0, 1.0};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(spectrum[i].qn == QuantumNumbers{static_cast<int>(i), -1, -1});
    CHECK(spectrum[i].kappa == kappas[i]);
    CHECK(spectrum[i].energy == -kappas[i] * kappas[i]);
    CHECK(spectrum[i].beta_effective == 3.0);
  }
}

TEST_CASE("enumerate_pt_spectrum: weak couplings bind nothing") {
  CHECK(pth::enumerate_pt_spectrum(PTModel(0.4, 0.4, kEps)).empty());
}

TEST_CASE("enumerate_pt_spectrum: several sectors, sorted with tie-break") {
  // alpha = 5, beta = 2: (-1,-1) kappa 6,4,2; (-1,+1) kappa 2.
  const auto spectrum = pth::enumerate_pt_spectrum(PTModel(5.0, 2.0, kEps));
  REQUIRE(spectrum.size() == 4);
  CHECK(spectrum[0].energy == -36.0);
  CHECK(spectrum[1].energy == -16.0);
  CHECK(spectrum[2].qn == QuantumNumbers{2, -1, -1});
  CHECK(spectrum[3].qn == QuantumNumbers{0, -1, 1});
  CHECK(spectrum[2].energy == spectrum[3].energy);
  for (const auto& entry : spectrum) CHECK(entry.kappa > 0.0);
}

TEST_CASE("chi: degree zero is the bare envelope") {
  const PTModel model(1.7, 2.2, kEps);
  const QuantumNumbers qn{0, 1, -1};
  const Complex r{0.4, -kEps};
  const Complex expected = std::exp((-2.2 + 0.5) * std::log(std::sinh(r))) *
                           std::exp((1.7 + 0.5) * std::log(std::cosh(r)));
  CHECK(std::abs(pth::chi(model, qn, r, false).value - expected) < 1e-14 * std::abs(expected));
}

TEST_CASE("chi: regression value at r = -i pi/6") {
  const PTModel model(3.0, 3.0, kEps);
  const Complex r{0.0, -std::numbers::pi / 6};
  const Complex got = pth::chi(model, {0, -1, -1}, r).value;
  // Second route: polar-form powers.
  const Complex second = oracle::polar_pow(std::sinh(r), -2.5) * oracle::polar_pow(std::cosh(r), -2.5);
  CHECK(std::abs(got - second) < 1e-13);
  // mpmath, principal branch
  CHECK(std::abs(got - Complex{-5.731039636392224, -5.731039636392224}) < 1e-12);
}

TEST_CASE("chi: branch-cut error") {
  const PTModel model(3.0, 3.0, kEps);
  // sinh(-1) is real negative.
  try {
    pth::chi(model, {0, -1, -1}, -1.0);
    FAIL("expected a branch-cut error");
  } catch (const pth::Error& err) {
    CHECK(err.kind() == pth::ErrorKind::BranchCut);
  }
}

TEST_CASE("chi: shifted line never touches the branch cut") {
  for (double eps : {0.05, 0.3, 0.9, 1.5}) {
    for (double x : grid(-20.0, 20.0, 81)) {
      CHECK(std::sinh(pth::shifted_line(eps, x)).imag() < 0.0);
    }
  }
}

TEST_CASE("chi: analytic derivatives vs differencing") {
  const PTModel model(3.0, 3.0, kEps);
  const QuantumNumbers qn{2, -1, -1};
  const auto value = [&](Complex r) { return pth::chi(model, qn, r, false).value; };
  for (double x : grid(-3.0, 3.0, 13)) {
    const Complex r = pth::shifted_line(kEps, x);
    const pth::WaveValue w = pth::chi(model, qn, r);
    const Complex fd1 = oracle::central_first_derivative(value, r, 1e-6);
    CHECK(oracle::relative_error(w.d1, fd1) < 1e-6 * std::max(1.0, std::abs(w.value)));
  }
}

TEST_CASE("chi: bound states solve the source equation") {
  for (const PTModel& model : {PTModel(3.0, 3.0, kEps), PTModel(5.0, 2.0, 0.7),
                               PTModel(4.5, 0.75, 1.1)}) {
    for (const auto& entry : pth::enumerate_pt_spectrum(model)) {
      double worst = 0.0;
      for (double x : grid(-6.0, 6.0, 50)) {
        worst = std::max(worst, residual(model, entry.qn,
                                         pth::shifted_line(model.epsilon(), x), entry.energy));
      }
      INFO("n=" << entry.qn.n << " sigma=" << entry.qn.sigma << " tau=" << entry.qn.tau);
      CHECK(worst < 1e-9);
      // Wrong energy fails.
      CHECK(residual(model, entry.qn, pth::shifted_line(model.epsilon(), 0.1), entry.energy + 1.0) >
            1e-2);
    }
  }
}

TEST_CASE("chi: modulus is PT symmetric") {
  const PTModel model(3.0, 3.0, kEps);
  for (const auto& entry : pth::enumerate_pt_spectrum(model)) {
    for (double x : grid(0.1, 6.0, 30)) {
      const double left = std::abs(pth::chi(model, entry.qn, pth::shifted_line(kEps, -x), false).value);
      const double right = std::abs(pth::chi(model, entry.qn, pth::shifted_line(kEps, x), false).value);
      CHECK(std::abs(left - right) <= 1e-12 * std::max(left, right));
    }
  }
}
