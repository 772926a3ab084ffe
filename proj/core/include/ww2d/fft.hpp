#pragma once

#include <span>

#include "ww2d/types.hpp"

namespace ww::fft {

// Forward transform carries the 1/N factor, so Parseval reads
// ||f||_L2^2 = L * sum_k |fhat_k|^2.
void forward(std::span<const cplx> values, std::span<cplx> coeffs);
void inverse(std::span<const cplx> coeffs, std::span<cplx> values);

}  // namespace ww::fft
