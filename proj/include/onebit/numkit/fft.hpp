#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "onebit/numkit/complex_vec.hpp"

namespace onebit {

/// Unitary discrete Fourier transform of a fixed length,
///   X_k = n^{-1/2} sum_j x_j exp(-2 pi i j k / n).
/// Power-of-two lengths use an iterative radix-2 transform; other lengths go
/// through Bluestein's chirp-z reduction to a power-of-two convolution.
class FftPlan {
 public:
  explicit FftPlan(std::size_t n);
  ~FftPlan();
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  std::size_t size() const { return n_; }

  void forward(std::span<Complex> data) const;
  void inverse(std::span<Complex> data) const;

 private:
  void radix2(std::span<Complex> data, bool inverse) const;
  void bluestein(std::span<Complex> data) const;

  std::size_t n_;
  bool pow2_;
  double scale_;
  std::vector<std::size_t> bitrev_;
  std::vector<Complex> twiddles_;
  // Bluestein state.
  std::unique_ptr<FftPlan> conv_plan_;
  std::vector<Complex> chirp_;
  std::vector<Complex> chirp_spectrum_;
};

/// Cached plan for length n, one cache per thread.
const FftPlan& fft_plan(std::size_t n);

ComplexVec dft(const ComplexVec& x);
ComplexVec idft(const ComplexVec& y);

}  // namespace onebit
