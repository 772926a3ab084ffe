#pragma once

#include <vector>

#include "ww2d/grid.hpp"
#include "ww2d/types.hpp"

namespace ww {

// Complex periodic function held as collocation samples plus Fourier
// coefficients, kept mutually consistent. holomorphic() marks fields whose
// spectrum is supported on xi <= 0.
class SpectralField {
 public:
  SpectralField() = default;

  static SpectralField zero(const GridSpec& g);
  static SpectralField from_values(const GridSpec& g, std::vector<cplx> vals,
                                   bool holomorphic = false);
  static SpectralField from_coeffs(const GridSpec& g, std::vector<cplx> coefs,
                                   bool holomorphic = false);
  // trusted constructor for callers that already hold both representations
  static SpectralField from_both(const GridSpec& g, std::vector<cplx> vals,
                                 std::vector<cplx> coefs, bool holomorphic);

  const GridSpec& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<cplx>& values() const { return values_; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  bool holomorphic() const { return holomorphic_; }
  void set_holomorphic(bool h) { holomorphic_ = h; }

  cplx coeff_at_mode(int k) const;  // k in [-n/2, n/2)
  cplx eval_at(double alpha) const;  // trigonometric interpolation

  double norm_l2() const;
  double norm_linf() const;
  double norm_hdot(double s) const;  // homogeneous H^s, |xi|^s weight
  double max_abs_coeff() const;
  // largest |coeff| over strictly positive frequencies (holomorphy residual)
  double positive_residual() const;
  bool finite() const;

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);
  SpectralField& operator*=(cplx a);

 private:
  GridSpec grid_;
  std::vector<cplx> values_;
  std::vector<cplx> coeffs_;
  bool holomorphic_ = false;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(cplx a, SpectralField f);

}  // namespace ww
