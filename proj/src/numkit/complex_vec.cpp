#include "onebit/numkit/complex_vec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "onebit/errors.hpp"

namespace onebit {
namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

void validate(const std::vector<Complex>& entries) {
  if (entries.empty()) throw DimensionError("ComplexVec: dimension must be positive");
  if (!all_finite(entries)) throw NumericalError("ComplexVec: non-finite entry");
}

}  // namespace

ComplexVec::ComplexVec(std::vector<Complex> entries) : entries_(std::move(entries)) {
  validate(entries_);
}

ComplexVec::ComplexVec(std::initializer_list<Complex> entries) : entries_(entries) {
  validate(entries_);
}

ComplexVec ComplexVec::zeros(std::size_t n) {
  if (n == 0) throw DimensionError("ComplexVec: dimension must be positive");
  return ComplexVec(Unchecked{}, n);
}

ComplexVec ComplexVec::basis(std::size_t n, std::size_t k) {
  if (k >= n) throw DimensionError("ComplexVec::basis: index out of range");
  ComplexVec v = zeros(n);
  v[k] = 1.0;
  return v;
}

ComplexVec& ComplexVec::operator+=(const ComplexVec& other) {
  require_same_size(size(), other.size(), "operator+=");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexVec& ComplexVec::operator-=(const ComplexVec& other) {
  require_same_size(size(), other.size(), "operator-=");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexVec& ComplexVec::operator*=(Complex c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

ComplexVec operator+(ComplexVec a, const ComplexVec& b) { return a += b; }
ComplexVec operator-(ComplexVec a, const ComplexVec& b) { return a -= b; }
ComplexVec operator*(Complex c, ComplexVec v) { return v *= c; }

Complex inner(std::span<const Complex> a, std::span<const Complex> x) {
  require_same_size(a.size(), x.size(), "inner");
  // Split real arithmetic: avoids the NaN-recovery path of std::complex
  // multiplication in the hot loop.
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double ar = a[k].real(), ai = a[k].imag();
    const double xr = x[k].real(), xi = x[k].imag();
    re += ar * xr + ai * xi;
    im += ar * xi - ai * xr;
  }
  return {re, im};
}

Complex inner(const ComplexVec& a, const ComplexVec& x) { return inner(a.span(), x.span()); }

double norm_sq(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& e : v) s += e.real() * e.real() + e.imag() * e.imag();
  return s;
}

double norm(std::span<const Complex> v) { return std::sqrt(norm_sq(v)); }
double norm(const ComplexVec& v) { return norm(v.span()); }

void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  require_same_size(x.size(), y.size(), "axpy");
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double xr = x[k].real(), xi = x[k].imag();
    y[k] = {y[k].real() + ar * xr - ai * xi, y[k].imag() + ar * xi + ai * xr};
  }
}

ComplexVec normalized(const ComplexVec& v) {
  const double nv = norm(v);
  if (!(nv > 0.0)) throw NumericalError("normalized: zero vector");
  ComplexVec out = v;
  out *= 1.0 / nv;
  return out;
}

void phase_op_into(std::span<const Complex> z, std::span<Complex> out) {
  require_same_size(z.size(), out.size(), "phase_op");
  for (std::size_t k = 0; k < z.size(); ++k) {
    const double mod = std::abs(z[k]);
    out[k] = mod < 1e-300 ? Complex(1.0, 0.0) : z[k] / mod;
  }
}

ComplexVec phase_op(const ComplexVec& z) {
  ComplexVec out = ComplexVec::zeros(z.size());
  phase_op_into(z.span(), out.span());
  return out;
}

double dist_sq(const ComplexVec& x, const ComplexVec& x0) {
  require_same_size(x.size(), x0.size(), "dist_sq");
  const double nx = norm(x);
  const double n0 = norm(x0);
  if (!(nx > 0.0) || !(n0 > 0.0)) throw NumericalError("dist_sq: zero vector");
  const double overlap = std::abs(inner(x, x0)) / (nx * n0);
  return std::clamp(1.0 - overlap * overlap, 0.0, 1.0);
}

ComplexVec align_phase(const ComplexVec& x, const ComplexVec& x0) {
  const Complex c = inner(x0, x);
  if (std::abs(c) <= 1e-300) throw NumericalError("align_phase: inputs are orthogonal");
  return (std::conj(c) / std::abs(c)) * x;
}

double min_phase_distance(const ComplexVec& x, const ComplexVec& x0) {
  require_same_size(x.size(), x0.size(), "min_phase_distance");
  const double nx = norm(x);
  const double n0 = norm(x0);
  if (!(nx > 0.0) || !(n0 > 0.0)) throw NumericalError("min_phase_distance: zero vector");
  // ||u - e^{i phi} v||^2 = 2 - 2|<u, v>| at the optimal phase for unit u, v.
  const double overlap = std::min(1.0, std::abs(inner(x, x0)) / (nx * n0));
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * overlap));
}

bool all_finite(std::span<const Complex> v) {
  return std::all_of(v.begin(), v.end(), [](const Complex& e) {
    return std::isfinite(e.real()) && std::isfinite(e.imag());
  });
}

}  // namespace onebit
