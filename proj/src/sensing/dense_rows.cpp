#include "onebit/sensing/dense_rows.hpp"

#include <algorithm>
#include <cmath>

#include "onebit/errors.hpp"

namespace onebit::sensing {

DenseRows::DenseRows(std::size_t m, std::size_t n, std::vector<Complex> entries)
    : m_(m), n_(n), entries_(std::move(entries)) {
  if (m == 0 || n == 0) throw DimensionError("DenseRows: empty shape");
  if (entries_.size() != m * n) throw DimensionError("DenseRows: expected m*n entries");
}

void DenseRows::apply_into(std::span<const Complex> x, std::span<Complex> out) const {
  if (x.size() != n_ || out.size() != m_) throw DimensionError("DenseRows::apply");
  for (std::size_t i = 0; i < m_; ++i) out[i] = inner(row(i), x);
}

void DenseRows::adjoint_into(std::span<const Complex> y, std::span<Complex> out) const {
  if (y.size() != m_ || out.size() != n_) throw DimensionError("DenseRows::adjoint");
  std::fill(out.begin(), out.end(), Complex{});
  for (std::size_t i = 0; i < m_; ++i) axpy(y[i], row(i), out);
}

double DenseRows::frobenius_norm_sq() const { return norm_sq(entries_); }

DenseRows DenseRows::block(std::size_t begin, std::size_t count) const {
  if (count == 0 || begin + count > m_) throw DimensionError("DenseRows::block: range out of bounds");
  const auto first = entries_.begin() + static_cast<std::ptrdiff_t>(begin * n_);
  return DenseRows(count, n_, {first, first + static_cast<std::ptrdiff_t>(count * n_)});
}

double intensity(std::span<const Complex> a, std::span<const Complex> x) {
  return std::norm(inner(a, x));
}

double intensity(const ComplexVec& a, const ComplexVec& x) { return intensity(a.span(), x.span()); }

std::vector<double> intensities(const LinearOperator& op, const ComplexVec& x) {
  const ComplexVec z = op.forward(x);
  std::vector<double> b(z.size());
  std::transform(z.begin(), z.end(), b.begin(), [](const Complex& c) { return std::norm(c); });
  return b;
}

}  // namespace onebit::sensing
