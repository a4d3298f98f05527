#include "onebit/sensing/cdp.hpp"

#include <memory>

#include "onebit/errors.hpp"
#include "onebit/numkit/fft.hpp"
#include "onebit/sensing/samplers.hpp"

namespace onebit::sensing {

CdpOperator::CdpOperator(std::size_t n, std::vector<ComplexVec> masks, std::uint64_t seed)
    : n_(n), masks_(std::move(masks)), seed_(seed) {
  if (n == 0) throw DimensionError("CdpOperator: dimension must be positive");
  if (masks_.empty()) throw DimensionError("CdpOperator: at least one mask is required");
  for (const auto& w : masks_) {
    if (w.size() != n) throw DimensionError("CdpOperator: mask length must equal n");
  }
}

void CdpOperator::apply_into(std::span<const Complex> x, std::span<Complex> out) const {
  if (x.size() != n_ || out.size() != rows()) throw DimensionError("CdpOperator::apply");
  const FftPlan& plan = fft_plan(n_);
  for (std::size_t i = 0; i < masks_.size(); ++i) {
    auto block = out.subspan(i * n_, n_);
    const auto& w = masks_[i];
    for (std::size_t k = 0; k < n_; ++k) block[k] = w[k] * x[k];
    plan.forward(block);
  }
}

void CdpOperator::adjoint_into(std::span<const Complex> y, std::span<Complex> out) const {
  if (y.size() != rows() || out.size() != n_) throw DimensionError("CdpOperator::adjoint");
  const FftPlan& plan = fft_plan(n_);
  std::fill(out.begin(), out.end(), Complex{});
  std::vector<Complex> work(n_);
  for (std::size_t i = 0; i < masks_.size(); ++i) {
    const auto block = y.subspan(i * n_, n_);
    std::copy(block.begin(), block.end(), work.begin());
    plan.inverse(work);
    const auto& w = masks_[i];
    for (std::size_t k = 0; k < n_; ++k) out[k] += std::conj(w[k]) * work[k];
  }
}

double CdpOperator::frobenius_norm_sq() const {
  // The DFT is unitary, so ||F Diag(w)||_F^2 = ||w||^2.
  double s = 0.0;
  for (const auto& w : masks_) s += norm_sq(w.span());
  return s;
}

CdpOperator build_cdp_operator(std::size_t n, std::size_t r, std::uint64_t seed, Purpose purpose) {
  if (n == 0 || r == 0) throw ConfigError("build_cdp_operator: n and r must be >= 1");
  std::vector<ComplexVec> masks;
  masks.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    Stream stream(seed, purpose, i);
    masks.push_back(sample_complex_gaussian(n, stream));
  }
  return {n, std::move(masks), seed};
}

PairedArms build_cdp_pair(std::size_t n, std::size_t r, std::uint64_t seed) {
  return {std::make_shared<const CdpOperator>(build_cdp_operator(n, r, seed, Purpose::kMasks1)),
          std::make_shared<const CdpOperator>(build_cdp_operator(n, r, seed, Purpose::kMasks2))};
}

ComplexVec cdp_apply(const CdpOperator& op, const ComplexVec& x) { return op.forward(x); }

ComplexVec cdp_adjoint(const CdpOperator& op, const ComplexVec& y) { return op.adjoint(y); }

std::vector<double> cdp_intensities(const CdpOperator& op, const ComplexVec& x) {
  return intensities(op, x);
}

}  // namespace onebit::sensing
