#include "onebit/numkit/linear_operator.hpp"

#include "onebit/errors.hpp"

namespace onebit {

ComplexVec LinearOperator::forward(const ComplexVec& x) const {
  if (x.size() != cols()) throw DimensionError("LinearOperator::forward: dimension mismatch");
  ComplexVec out = ComplexVec::zeros(rows());
  apply_into(x.span(), out.span());
  return out;
}

ComplexVec LinearOperator::adjoint(const ComplexVec& y) const {
  if (y.size() != rows()) throw DimensionError("LinearOperator::adjoint: dimension mismatch");
  ComplexVec out = ComplexVec::zeros(cols());
  adjoint_into(y.span(), out.span());
  return out;
}

StackedOperator::StackedOperator(std::vector<OperatorPtr> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DimensionError("StackedOperator: no parts");
  cols_ = parts_.front()->cols();
  for (const auto& p : parts_) {
    if (p->cols() != cols_) throw DimensionError("StackedOperator: column mismatch");
    rows_ += p->rows();
  }
}

void StackedOperator::apply_into(std::span<const Complex> x, std::span<Complex> out) const {
  if (x.size() != cols_ || out.size() != rows_) throw DimensionError("StackedOperator::apply");
  std::size_t offset = 0;
  for (const auto& p : parts_) {
    p->apply_into(x, out.subspan(offset, p->rows()));
    offset += p->rows();
  }
}

void StackedOperator::adjoint_into(std::span<const Complex> y, std::span<Complex> out) const {
  if (y.size() != rows_ || out.size() != cols_) throw DimensionError("StackedOperator::adjoint");
  std::fill(out.begin(), out.end(), Complex{});
  std::vector<Complex> part(cols_);
  std::size_t offset = 0;
  for (const auto& p : parts_) {
    p->adjoint_into(y.subspan(offset, p->rows()), part);
    for (std::size_t k = 0; k < cols_; ++k) out[k] += part[k];
    offset += p->rows();
  }
}

double StackedOperator::frobenius_norm_sq() const {
  double s = 0.0;
  for (const auto& p : parts_) s += p->frobenius_norm_sq();
  return s;
}

}  // namespace onebit
