#include "onebit/numkit/fft.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "onebit/errors.hpp"

namespace onebit {
namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

FftPlan::FftPlan(std::size_t n)
    : n_(n), pow2_(is_pow2(n)), scale_(n ? 1.0 / std::sqrt(static_cast<double>(n)) : 0.0) {
  if (n == 0) throw DimensionError("FftPlan: length must be positive");
  if (pow2_) {
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    bitrev_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = 0;
      for (std::size_t b = 0; b < bits; ++b) r |= ((i >> b) & 1U) << (bits - 1 - b);
      bitrev_[i] = r;
    }
    twiddles_.resize(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
      twiddles_[k] = {std::cos(angle), std::sin(angle)};
    }
    return;
  }

  const std::size_t m = next_pow2(2 * n - 1);
  conv_plan_ = std::make_unique<FftPlan>(m);
  chirp_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    // j^2 mod 2n keeps the angle argument small and exact.
    const std::size_t jj = (j * j) % (2 * n);
    const double angle = std::numbers::pi * static_cast<double>(jj) / static_cast<double>(n);
    chirp_[j] = {std::cos(angle), std::sin(angle)};
  }
  chirp_spectrum_.assign(m, Complex{});
  chirp_spectrum_[0] = chirp_[0];
  for (std::size_t j = 1; j < n; ++j) {
    chirp_spectrum_[j] = chirp_[j];
    chirp_spectrum_[m - j] = chirp_[j];
  }
  conv_plan_->radix2(chirp_spectrum_, false);
}

FftPlan::~FftPlan() = default;

void FftPlan::radix2(std::span<Complex> data, bool inverse) const {
  const std::size_t n = n_;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < bitrev_[i]) std::swap(data[i], data[bitrev_[i]]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        Complex w = twiddles_[k * stride];
        if (inverse) w = std::conj(w);
        const Complex a = data[start + k];
        const Complex b = data[start + k + half];
        const Complex wb{w.real() * b.real() - w.imag() * b.imag(),
                         w.real() * b.imag() + w.imag() * b.real()};
        data[start + k] = a + wb;
        data[start + k + half] = a - wb;
      }
    }
  }
}

void FftPlan::bluestein(std::span<Complex> data) const {
  const std::size_t m = conv_plan_->size();
  std::vector<Complex> work(m, Complex{});
  for (std::size_t j = 0; j < n_; ++j) work[j] = data[j] * std::conj(chirp_[j]);
  conv_plan_->radix2(work, false);
  for (std::size_t k = 0; k < m; ++k) work[k] *= chirp_spectrum_[k];
  conv_plan_->radix2(work, true);
  const double inv_m = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n_; ++k) data[k] = work[k] * inv_m * std::conj(chirp_[k]);
}

void FftPlan::forward(std::span<Complex> data) const {
  if (data.size() != n_) throw DimensionError("FftPlan::forward: length mismatch");
  if (pow2_) {
    radix2(data, false);
  } else {
    bluestein(data);
  }
  for (auto& v : data) v *= scale_;
}

void FftPlan::inverse(std::span<Complex> data) const {
  if (data.size() != n_) throw DimensionError("FftPlan::inverse: length mismatch");
  if (pow2_) {
    radix2(data, true);
    for (auto& v : data) v *= scale_;
    return;
  }
  // idft(y) = conj(dft(conj(y))) for the unitary transform.
  for (auto& v : data) v = std::conj(v);
  forward(data);
  for (auto& v : data) v = std::conj(v);
}

const FftPlan& fft_plan(std::size_t n) {
  thread_local std::map<std::size_t, std::unique_ptr<FftPlan>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<FftPlan>(n);
  return *slot;
}

ComplexVec dft(const ComplexVec& x) {
  ComplexVec out = x;
  fft_plan(x.size()).forward(out.span());
  return out;
}

ComplexVec idft(const ComplexVec& y) {
  ComplexVec out = y;
  fft_plan(y.size()).inverse(out.span());
  return out;
}

}  // namespace onebit
