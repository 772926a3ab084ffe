#include "ww2d/field.hpp"

#include <algorithm>
#include <cmath>

#include "ww2d/fft.hpp"

namespace ww {

SpectralField SpectralField::zero(const GridSpec& g) {
  SpectralField f;
  f.grid_ = g;
  f.values_.assign(g.n, cplx{});
  f.coeffs_.assign(g.n, cplx{});
  f.holomorphic_ = true;
  return f;
}

SpectralField SpectralField::from_values(const GridSpec& g,
                                         std::vector<cplx> vals,
                                         bool holomorphic) {
  SpectralField f;
  f.grid_ = g;
  f.coeffs_.resize(vals.size());
  fft::forward(vals, f.coeffs_);
  f.values_ = std::move(vals);
  f.holomorphic_ = holomorphic;
  return f;
}

SpectralField SpectralField::from_coeffs(const GridSpec& g,
                                         std::vector<cplx> coefs,
                                         bool holomorphic) {
  SpectralField f;
  f.grid_ = g;
  f.values_.resize(coefs.size());
  fft::inverse(coefs, f.values_);
  f.coeffs_ = std::move(coefs);
  f.holomorphic_ = holomorphic;
  return f;
}

SpectralField SpectralField::from_both(const GridSpec& g,
                                       std::vector<cplx> vals,
                                       std::vector<cplx> coefs,
                                       bool holomorphic) {
  SpectralField f;
  f.grid_ = g;
  f.values_ = std::move(vals);
  f.coeffs_ = std::move(coefs);
  f.holomorphic_ = holomorphic;
  return f;
}

cplx SpectralField::coeff_at_mode(int k) const {
  const int n = grid_.n;
  int i = k >= 0 ? k : k + n;
  return coeffs_[static_cast<std::size_t>(i)];
}

cplx SpectralField::eval_at(double alpha) const {
  cplx acc{};
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == cplx{}) continue;
    acc += coeffs_[i] * std::polar(1.0, grid_.xi(i) * alpha);
  }
  return acc;
}

double SpectralField::norm_l2() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return std::sqrt(grid_.length * s);
}

double SpectralField::norm_linf() const {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

double SpectralField::norm_hdot(double s) const {
  if (s == 0.0) return norm_l2();
  double acc = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const double axi = std::abs(grid_.xi(i));
    if (axi == 0.0) continue;
    acc += std::pow(axi, 2.0 * s) * std::norm(coeffs_[i]);
  }
  return std::sqrt(grid_.length * acc);
}

double SpectralField::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double SpectralField::positive_residual() const {
  double m = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (grid_.mode(i) > 0) m = std::max(m, std::abs(coeffs_[i]));
  }
  return m;
}

bool SpectralField::finite() const {
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i] += o.values_[i];
    coeffs_[i] += o.coeffs_[i];
  }
  holomorphic_ = holomorphic_ && o.holomorphic_;
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i] -= o.values_[i];
    coeffs_[i] -= o.coeffs_[i];
  }
  holomorphic_ = holomorphic_ && o.holomorphic_;
  return *this;
}

SpectralField& SpectralField::operator*=(cplx a) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i] *= a;
    coeffs_[i] *= a;
  }
  return *this;
}

SpectralField operator+(SpectralField a, const SpectralField& b) {
  a += b;
  return a;
}
SpectralField operator-(SpectralField a, const SpectralField& b) {
  a -= b;
  return a;
}
SpectralField operator*(cplx a, SpectralField f) {
  f *= a;
  return f;
}

}  // namespace ww
