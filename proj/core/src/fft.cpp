#include "ww2d/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <memory>
#include <mutex>

namespace ww::fft {
namespace {

// fftw planning is not thread-safe; execution on thread-local plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct Plans {
  int n = 0;
  fftw_complex* in = nullptr;
  fftw_complex* out = nullptr;
  fftw_plan fwd{};
  fftw_plan bwd{};

  explicit Plans(int n_) : n(n_) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    in = fftw_alloc_complex(n);
    out = fftw_alloc_complex(n);
    fwd = fftw_plan_dft_1d(n, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_1d(n, in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~Plans() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(in);
    fftw_free(out);
  }
  Plans(const Plans&) = delete;
  Plans& operator=(const Plans&) = delete;
};

Plans& plans_for(int n) {
  thread_local std::map<int, std::unique_ptr<Plans>> cache;
  auto& p = cache[n];
  if (!p) p = std::make_unique<Plans>(n);
  return *p;
}

}  // namespace

void forward(std::span<const cplx> values, std::span<cplx> coeffs) {
  const int n = static_cast<int>(values.size());
  auto& p = plans_for(n);
  std::memcpy(p.in, values.data(), sizeof(cplx) * n);
  fftw_execute(p.fwd);
  const double inv = 1.0 / n;
  const auto* out = reinterpret_cast<const cplx*>(p.out);
  for (int i = 0; i < n; ++i) coeffs[i] = out[i] * inv;
}

void inverse(std::span<const cplx> coeffs, std::span<cplx> values) {
  const int n = static_cast<int>(coeffs.size());
  auto& p = plans_for(n);
  std::memcpy(p.in, coeffs.data(), sizeof(cplx) * n);
  fftw_execute(p.bwd);
  std::memcpy(values.data(), p.out, sizeof(cplx) * n);
}

}  // namespace ww::fft
