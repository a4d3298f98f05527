#pragma once

#include <cstddef>
#include <vector>

#include "onebit/numkit/complex_vec.hpp"

namespace onebit {

/// Small dense Hermitian matrix (row-major). Used to assemble explicit
/// oracles for the matrix-free routines; not a general linear-algebra type.
class HermitianDense {
 public:
  /// Validates conj-symmetry to 1e-12 absolute.
  HermitianDense(std::size_t n, std::vector<Complex> entries);

  static HermitianDense zeros(std::size_t n);

  std::size_t size() const { return n_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  /// this += weight * v v*
  void add_rank_one(double weight, std::span<const Complex> v);
  void add_identity(double weight);
  void scale(double factor);

  ComplexVec apply(const ComplexVec& x) const;
  /// Real part of x* M x.
  double quadratic_form(const ComplexVec& x) const;

 private:
  HermitianDense(std::size_t n) : n_(n), entries_(n * n) {}

  std::size_t n_;
  std::vector<Complex> entries_;
};

struct DenseEigenpair {
  double eigval;
  ComplexVec eigvec;
};

/// Algebraically largest eigenpair; n <= 512.
DenseEigenpair dense_top_eigenvector(const HermitianDense& m);

}  // namespace onebit
