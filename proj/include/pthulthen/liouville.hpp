#pragma once

#include <functional>

#include "pthulthen/core_math.hpp"

namespace pth {

/// r(xi) together with r', r'' and r''' at one point.
struct MapJet {
  Complex r;
  Complex d1;
  Complex d2;
  Complex d3;
};

/// Analytic change of variables r = r(xi) carrying its own derivatives.
class CoordinateMap {
 public:
  using Evaluator = std::function<MapJet(Complex)>;

  explicit CoordinateMap(Evaluator evaluator)
      : evaluator_(std::move(evaluator)) {}

  MapJet jet(Complex xi) const { return evaluator_(xi); }
  Complex r(Complex xi) const { return jet(xi).r; }
  Complex d1(Complex xi) const { return jet(xi).d1; }
  Complex d2(Complex xi) const { return jet(xi).d2; }
  Complex d3(Complex xi) const { return jet(xi).d3; }

 private:
  Evaluator evaluator_;
};

CoordinateMap identity_map();
/// r = scale * xi + shift
CoordinateMap affine_map(Complex scale, Complex shift = 0.0);
/// r = exp(xi)
CoordinateMap exponential_map();

using PotentialFn = std::function<Complex(Complex)>;

/// (3/4)(r''/r')^2 - (1/2)(r'''/r'). Throws Invertibility when |r'| < 1e-12.
Complex schwarzian_terms(const CoordinateMap& map, Complex xi);

/// V(xi) - E = r'^2 (W(r(xi)) + kappa^2) + schwarzian_terms.
Complex transform_potential(const PotentialFn& W, double kappa_sq,
                            const CoordinateMap& map, Complex xi);

/// Phase-tracking token for the square root in the wavefunction pullback.
///
/// The first root is principal; every later root takes the sign closest to
/// its predecessor, so the branch stays continuous along a sweep. One token
/// per sweep; not shared between threads.
class BranchTracker {
 public:
  Complex continuous_sqrt(Complex w);

  /// Samples whose phase jumped by more than pi/2 from the previous one.
  int discontinuities() const noexcept { return discontinuities_; }
  bool seeded() const noexcept { return seeded_; }
  void reset() noexcept;

 private:
  Complex previous_{};
  bool seeded_ = false;
  int discontinuities_ = 0;
};

/// Psi(xi) = chi(r(xi)) / sqrt(r'(xi)). With a null tracker the principal
/// square root is used.
Complex transform_wavefunction(Complex chi_value, const CoordinateMap& map,
                               Complex xi, BranchTracker* tracker = nullptr);

}  // namespace pth
