#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "onebit/numkit/linear_operator.hpp"
#include "onebit/rng.hpp"
#include "onebit/sensing/ensemble.hpp"

namespace onebit::sensing {

/// Coded-diffraction sensing: r stacked blocks x -> DFT(w_i (.) x), where DFT
/// is the unitary transform and w_i are complex masks.
class CdpOperator final : public LinearOperator {
 public:
  CdpOperator(std::size_t n, std::vector<ComplexVec> masks, std::uint64_t seed = 0);

  std::size_t rows() const override { return masks_.size() * n_; }
  std::size_t cols() const override { return n_; }
  void apply_into(std::span<const Complex> x, std::span<Complex> out) const override;
  void adjoint_into(std::span<const Complex> y, std::span<Complex> out) const override;
  double frobenius_norm_sq() const override;

  std::size_t mask_count() const { return masks_.size(); }
  const std::vector<ComplexVec>& masks() const { return masks_; }
  std::uint64_t seed() const { return seed_; }

 private:
  std::size_t n_;
  std::vector<ComplexVec> masks_;
  std::uint64_t seed_;
};

/// r complex Gaussian masks; mask i comes from the stream (seed, purpose, i).
CdpOperator build_cdp_operator(std::size_t n, std::size_t r, std::uint64_t seed,
                               Purpose purpose = Purpose::kMasks);

/// One-bit CDP pairing: pair index (i, k) compares coordinate k of
/// DFT(w1_i (.) x) with coordinate k of DFT(w2_i (.) x); the two mask families
/// are independent. Yields r * n pairs.
PairedArms build_cdp_pair(std::size_t n, std::size_t r, std::uint64_t seed);

ComplexVec cdp_apply(const CdpOperator& op, const ComplexVec& x);
ComplexVec cdp_adjoint(const CdpOperator& op, const ComplexVec& y);
std::vector<double> cdp_intensities(const CdpOperator& op, const ComplexVec& x);

}  // namespace onebit::sensing
