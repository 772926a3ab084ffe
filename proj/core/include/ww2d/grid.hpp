#pragma once

#include <cmath>
#include <cstddef>

#include "ww2d/errors.hpp"

namespace ww {

// Uniform periodic grid of period L. Collocation points alpha_j = j*L/n,
// frequencies xi_k = 2*pi*k/L with k in [-n/2, n/2), stored in FFT order.
struct GridSpec {
  int n = 0;
  double length = 0.0;
  double dealias_fraction = 2.0 / 3.0;

  static GridSpec make(int n, double length, double dealias_fraction = 2.0 / 3.0) {
    if (n <= 0 || (n & (n - 1)) != 0)
      throw ConfigRefused("n_points must be a positive power of two");
    if (!(length > 0.0)) throw ConfigRefused("length must be positive");
    if (!(dealias_fraction > 0.0) || dealias_fraction > 1.0)
      throw ConfigRefused("dealias_fraction must lie in (0, 1]");
    return GridSpec{n, length, dealias_fraction};
  }

  double dx() const { return length / n; }
  double nyquist() const { return M_PI * n / length; }
  double dealias_cutoff() const { return dealias_fraction * nyquist(); }

  int mode(std::size_t i) const {
    return static_cast<int>(i) < n / 2 ? static_cast<int>(i)
                                       : static_cast<int>(i) - n;
  }
  double xi(std::size_t i) const { return 2.0 * M_PI * mode(i) / length; }
  double alpha(std::size_t i) const { return dx() * static_cast<double>(i); }
  // torus coordinate centered at the data, in [-L/2, L/2)
  double alpha_centered(std::size_t i) const {
    double a = alpha(i);
    return a < 0.5 * length ? a : a - length;
  }

  // phase-resolution bound for the exact linear propagator
  double dt_max_linear() const { return 0.5 / std::sqrt(nyquist()); }

  bool operator==(const GridSpec&) const = default;
};

}  // namespace ww
