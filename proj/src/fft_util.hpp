// Internal FFTW wrappers: real one-sided transforms of power-of-two length
// plus FFT-based full convolution. Plans are created with FFTW_ESTIMATE so
// planning is deterministic; execution on distinct buffers is thread-safe.
#pragma once

#include <complex>
#include <vector>

#include "fiva/common.hpp"

namespace fiva::fft {

// One-sided real FFT pair of fixed size n (power of two).
class RealFftPlan {
 public:
  explicit RealFftPlan(int n);
  ~RealFftPlan();
  RealFftPlan(const RealFftPlan&) = delete;
  RealFftPlan& operator=(const RealFftPlan&) = delete;

  int size() const { return n_; }
  int bins() const { return n_ / 2 + 1; }

  // Unnormalized forward transform; `in` has n samples, `out` n/2+1 bins.
  void forward(const double* in, cplx* out) const;
  // Inverse with 1/n normalization; `in` has n/2+1 bins, `out` n samples.
  void inverse(const cplx* in, double* out) const;

 private:
  int n_;
  void* fwd_ = nullptr;  // fftw_plan
  void* inv_ = nullptr;
  // scratch used only during planning
};

// Full linear convolution, length a.size() + b.size() - 1.
std::vector<double> convolve(const std::vector<double>& a,
                             const std::vector<double>& b);

int next_pow2(std::size_t n);

}  // namespace fiva::fft
