#include "onebit/numkit/dense.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "onebit/errors.hpp"

namespace onebit {

HermitianDense::HermitianDense(std::size_t n, std::vector<Complex> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n == 0) throw DimensionError("HermitianDense: dimension must be positive");
  if (entries_.size() != n * n) throw DimensionError("HermitianDense: expected n*n entries");
  if (!all_finite(entries_)) throw NumericalError("HermitianDense: non-finite entry");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (std::abs(entries_[i * n + j] - std::conj(entries_[j * n + i])) > 1e-12) {
        throw NumericalError("HermitianDense: matrix is not Hermitian");
      }
    }
  }
}

HermitianDense HermitianDense::zeros(std::size_t n) {
  if (n == 0) throw DimensionError("HermitianDense: dimension must be positive");
  return HermitianDense(n);
}

void HermitianDense::add_rank_one(double weight, std::span<const Complex> v) {
  if (v.size() != n_) throw DimensionError("HermitianDense::add_rank_one");
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) entries_[i * n_ + j] += weight * v[i] * std::conj(v[j]);
  }
}

void HermitianDense::add_identity(double weight) {
  for (std::size_t i = 0; i < n_; ++i) entries_[i * n_ + i] += weight;
}

void HermitianDense::scale(double factor) {
  for (auto& e : entries_) e *= factor;
}

ComplexVec HermitianDense::apply(const ComplexVec& x) const {
  if (x.size() != n_) throw DimensionError("HermitianDense::apply");
  ComplexVec out = ComplexVec::zeros(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Complex s{};
    for (std::size_t j = 0; j < n_; ++j) s += entries_[i * n_ + j] * x[j];
    out[i] = s;
  }
  return out;
}

double HermitianDense::quadratic_form(const ComplexVec& x) const {
  return inner(x, apply(x)).real();
}

DenseEigenpair dense_top_eigenvector(const HermitianDense& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  if (n > 512) throw DimensionError("dense_top_eigenvector: oracle limited to n <= 512");
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      a(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a);
  if (solver.info() != Eigen::Success) throw NumericalError("dense_top_eigenvector: no convergence");
  // Eigenvalues come back in increasing order.
  std::vector<Complex> v(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = solver.eigenvectors()(i, n - 1);
  return {solver.eigenvalues()(n - 1), normalized(ComplexVec(std::move(v)))};
}

}  // namespace onebit
