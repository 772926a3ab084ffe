#pragma once

#include <complex>
#include <vector>

namespace ww {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};

}  // namespace ww
