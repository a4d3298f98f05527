#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace onebit {

using Complex = std::complex<double>;

/// Dense complex vector of positive dimension with finite entries.
///
/// Constructors validate; mutable element access is provided for numerical
/// kernels, which are expected to keep entries finite.
class ComplexVec {
 public:
  explicit ComplexVec(std::vector<Complex> entries);
  ComplexVec(std::initializer_list<Complex> entries);

  static ComplexVec zeros(std::size_t n);
  /// Standard basis vector e_k (zero-based k).
  static ComplexVec basis(std::size_t n, std::size_t k);

  std::size_t size() const { return entries_.size(); }

  Complex& operator[](std::size_t i) { return entries_[i]; }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }

  std::span<Complex> span() { return entries_; }
  std::span<const Complex> span() const { return entries_; }
  const std::vector<Complex>& entries() const { return entries_; }

  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  ComplexVec& operator+=(const ComplexVec& other);
  ComplexVec& operator-=(const ComplexVec& other);
  ComplexVec& operator*=(Complex c);

  friend bool operator==(const ComplexVec&, const ComplexVec&) = default;

 private:
  struct Unchecked {};
  ComplexVec(Unchecked, std::size_t n) : entries_(n) {}

  std::vector<Complex> entries_;
};

ComplexVec operator+(ComplexVec a, const ComplexVec& b);
ComplexVec operator-(ComplexVec a, const ComplexVec& b);
ComplexVec operator*(Complex c, ComplexVec v);

/// Sum_k conj(a_k) x_k. Conjugate-linear in the first argument, so the
/// rank-one action (a a*) r equals a * inner(a, r).
Complex inner(std::span<const Complex> a, std::span<const Complex> x);
Complex inner(const ComplexVec& a, const ComplexVec& x);

double norm_sq(std::span<const Complex> v);
double norm(std::span<const Complex> v);
double norm(const ComplexVec& v);

/// y += alpha * x
void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y);

/// v / ||v||; throws NumericalError on a zero vector.
ComplexVec normalized(const ComplexVec& v);

/// Entrywise z_k / |z_k|. Entries with modulus below 1e-300 map to 1.
ComplexVec phase_op(const ComplexVec& z);
void phase_op_into(std::span<const Complex> z, std::span<Complex> out);

/// 1 - |<x/||x||, x0/||x0||>|^2, clamped to [0, 1].
double dist_sq(const ComplexVec& x, const ComplexVec& x0);

/// x * exp(-i phi) with phi = arg inner(x0, x): the global phase that brings
/// x closest to x0.
ComplexVec align_phase(const ComplexVec& x, const ComplexVec& x0);

/// min over phi of || x/||x|| - exp(i phi) x0/||x0|| ||.
double min_phase_distance(const ComplexVec& x, const ComplexVec& x0);

bool all_finite(std::span<const Complex> v);

}  // namespace onebit
