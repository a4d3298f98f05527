#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "onebit/numkit/linear_operator.hpp"

namespace onebit::sensing {

/// m sensing vectors a_1..a_m of dimension n, stored row-major.
/// As an operator: (A x)_i = inner(a_i, x) and A* z = sum_i a_i z_i.
class DenseRows final : public LinearOperator {
 public:
  DenseRows(std::size_t m, std::size_t n, std::vector<Complex> entries);

  std::size_t rows() const override { return m_; }
  std::size_t cols() const override { return n_; }
  void apply_into(std::span<const Complex> x, std::span<Complex> out) const override;
  void adjoint_into(std::span<const Complex> y, std::span<Complex> out) const override;
  double frobenius_norm_sq() const override;

  std::span<const Complex> row(std::size_t i) const { return {entries_.data() + i * n_, n_}; }
  /// Rows [begin, begin + count) as a new operator.
  DenseRows block(std::size_t begin, std::size_t count) const;

  friend bool operator==(const DenseRows& a, const DenseRows& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<Complex> entries_;
};

/// |inner(a, x)|^2.
double intensity(std::span<const Complex> a, std::span<const Complex> x);
double intensity(const ComplexVec& a, const ComplexVec& x);

/// |inner(a_i, x)|^2 for every row.
std::vector<double> intensities(const LinearOperator& op, const ComplexVec& x);

}  // namespace onebit::sensing
