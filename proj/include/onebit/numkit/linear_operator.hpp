#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "onebit/numkit/complex_vec.hpp"

namespace onebit {

/// A linear map C^cols -> C^rows together with its adjoint.
class LinearOperator {
 public:
  virtual ~LinearOperator() = default;

  virtual std::size_t rows() const = 0;
  virtual std::size_t cols() const = 0;

  /// out = A x; out.size() == rows().
  virtual void apply_into(std::span<const Complex> x, std::span<Complex> out) const = 0;
  /// out = A* y; out.size() == cols().
  virtual void adjoint_into(std::span<const Complex> y, std::span<Complex> out) const = 0;

  /// ||A||_F^2, i.e. the sum of squared row norms.
  virtual double frobenius_norm_sq() const = 0;

  ComplexVec forward(const ComplexVec& x) const;
  ComplexVec adjoint(const ComplexVec& y) const;
};

using OperatorPtr = std::shared_ptr<const LinearOperator>;

/// Rows of several operators stacked vertically; all parts share cols().
class StackedOperator final : public LinearOperator {
 public:
  explicit StackedOperator(std::vector<OperatorPtr> parts);

  std::size_t rows() const override { return rows_; }
  std::size_t cols() const override { return cols_; }
  void apply_into(std::span<const Complex> x, std::span<Complex> out) const override;
  void adjoint_into(std::span<const Complex> y, std::span<Complex> out) const override;
  double frobenius_norm_sq() const override;

 private:
  std::vector<OperatorPtr> parts_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
};

/// Function-object form used by the iterative solvers.
using VecMap = std::function<ComplexVec(const ComplexVec&)>;

}  // namespace onebit
