#include "pthulthen/liouville.hpp"

#include <cmath>
#include <numbers>

#include "pthulthen/error.hpp"

namespace pth {

namespace {

constexpr double kInvertibilityTolerance = 1e-12;

void require_invertible(Complex d1) {
  if (std::abs(d1) < kInvertibilityTolerance) {
    throw Error(ErrorKind::Invertibility,
                "coordinate map has vanishing first derivative");
  }
}

}  // namespace

CoordinateMap identity_map() {
  return CoordinateMap([](Complex xi) { return MapJet{xi, 1.0, 0.0, 0.0}; });
}

CoordinateMap affine_map(Complex scale, Complex shift) {
  return CoordinateMap([scale, shift](Complex xi) {
    return MapJet{scale * xi + shift, scale, 0.0, 0.0};
  });
}

CoordinateMap exponential_map() {
  return CoordinateMap([](Complex xi) {
    const Complex e = std::exp(xi);
    return MapJet{e, e, e, e};
  });
}

Complex schwarzian_terms(const CoordinateMap& map, Complex xi) {
  const MapJet jet = map.jet(xi);
  require_invertible(jet.d1);
  const Complex ratio2 = jet.d2 / jet.d1;
  const Complex ratio3 = jet.d3 / jet.d1;
  return 0.75 * ratio2 * ratio2 - 0.5 * ratio3;
}

Complex transform_potential(const PotentialFn& W, double kappa_sq,
                            const CoordinateMap& map, Complex xi) {
  const MapJet jet = map.jet(xi);
  require_invertible(jet.d1);
  const Complex ratio2 = jet.d2 / jet.d1;
  const Complex ratio3 = jet.d3 / jet.d1;
  return jet.d1 * jet.d1 * (W(jet.r) + kappa_sq) + 0.75 * ratio2 * ratio2 -
         0.5 * ratio3;
}

Complex BranchTracker::continuous_sqrt(Complex w) {
  Complex root = std::sqrt(w);
  if (!seeded_) {
    seeded_ = true;
    previous_ = root;
    return root;
  }
  if (std::abs(root - previous_) > std::abs(root + previous_)) root = -root;
  // Phase of w moves twice as fast as that of its root.
  if (previous_ != 0.0 && root != 0.0 &&
      std::abs(std::arg(root / previous_)) > 0.25 * std::numbers::pi) {
    ++discontinuities_;
  }
  previous_ = root;
  return root;
}

void BranchTracker::reset() noexcept {
  previous_ = {};
  seeded_ = false;
  discontinuities_ = 0;
}

Complex transform_wavefunction(Complex chi_value, const CoordinateMap& map,
                               Complex xi, BranchTracker* tracker) {
  const Complex d1 = map.d1(xi);
  require_invertible(d1);
  const Complex root = tracker ? tracker->continuous_sqrt(d1) : std::sqrt(d1);
  return chi_value / root;
}

}  // namespace pth
