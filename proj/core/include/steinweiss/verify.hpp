#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "steinweiss/kernels.hpp"

namespace steinweiss::verify {

// Radial test function in dimension m,
//   f(r) = sum_j c_j L_j^{(m/2-1)}(2 pi r^2) exp(-pi r^2),
// a Fourier eigenfamily: the m-dimensional radial transform multiplies the
// j-th coefficient by (-1)^j.
class RadialTestFunction {
 public:
  RadialTestFunction(int m, std::vector<double> laguerre_coeffs);

  static RadialTestFunction basis(int m, int j);

  int dimension() const { return m_; }
  const std::vector<double>& coefficients() const { return coeffs_; }
  // Polynomial part in q = r^2: f(r) = poly(q) exp(-pi q).
  const std::vector<double>& poly() const { return poly_; }
  double operator()(double r) const;
  double derivative(double r) const;

 private:
  int m_;
  std::vector<double> coeffs_;
  std::vector<double> poly_;
};

struct VerificationReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double constant = 0.0;
  double ratio = 0.0;  // lhs / rhs
  double tolerance = 0.0;
  bool pass = false;
};

// The transform: c_j -> (-1)^j c_j.
RadialTestFunction fourier_eigen(const RadialTestFunction& f);

// Self-check of those eigenvalues from first principles: starting from the
// self-dual Gaussian and using only F(Delta f) = -4 pi^2 |y|^2 F(f), the
// transforms of q^j exp(-pi q) follow recursively by polynomial algebra.
// Returns the largest coefficient residual of F(phi_j) - (-1)^j phi_j over
// j <= j_max.
double fourier_eigen_max_residual(int m, int j_max);

// omega_{m-1} int_0^inf |f(r)|^2 r^{m-1+power} dr, adaptive quadrature on
// ln r; requires m - 1 + power > -1.
double weighted_norm(const RadialTestFunction& f, double power);

// omega_{m-1} int_0^inf ln(r) |f(r)|^2 r^{m-1+power} dr.
double log_weighted_norm(const RadialTestFunction& f, double power = 0.0);

// Same two weighted integrals for |f'(r)|^2 (the derivative is taken
// analytically from the Laguerre representation).
double gradient_weighted_norm(const RadialTestFunction& f, double power);
double log_gradient_weighted_norm(const RadialTestFunction& f);

// omega_{m-1} int_0^inf |Delta f|^2 r^{m-1} dr with the radial Laplacian
// f'' + (m-1) f'/r.
double laplacian_norm(const RadialTestFunction& f);

// int |x|^-alpha |f|^2 <= pitt_C(m, alpha) int |y|^alpha |fhat|^2.
VerificationReport pitt_ratio(const RadialTestFunction& f, double alpha);

// Radial-stratum gradient bound:
// int |f'|^2 |x|^-alpha <= 4 pi^{2+alpha} [k=0 term] int |fhat|^2 |y|^{alpha+2}.
VerificationReport pitt_gradient_radial_ratio(const RadialTestFunction& f, double alpha);

// Relative residual between the direct expansion of
// int_{R^3} |grad(f(r) x_1)|^2 |x|^-alpha dx via the angular moment
// <xi_1^2> = 1/3 and its reduction to dimension-5 integrals
// int |grad f|^2 |x|^-alpha + alpha int |f|^2 |x|^-alpha-2.
double gradient_decomposition_identity(const RadialTestFunction& f, double alpha);

// int |grad f|^2 |x|^-2 <= (4/m^2) int |Delta f|^2,  m > 4.
VerificationReport hardy_rellich_ratio(const RadialTestFunction& f);

// m = 8 integration by parts:
// int |grad f|^2 |x|^-2 = -int f (Delta f) |x|^-2 - 8 int |f|^2 |x|^-4.
// Returns the relative residual.
double n8_identity_residual(const RadialTestFunction& f);

// int ln|x| |f|^2 + int ln|y| |fhat|^2 >= D(m) int |f|^2.
VerificationReport log_uncertainty_gap(const RadialTestFunction& f);

// int ln|x| |grad f|^2 + 4 pi^2 int ln|y| |y|^2 |fhat|^2 >= E(m) int |grad f|^2.
VerificationReport log_gradient_gap(const RadialTestFunction& f);

// Rayleigh probe of g -> |x|^{-alpha/2}(|x|^{-(n-alpha/2)} * g) on radial
// functions encoded as h(t) = t^{n/2} g(t) on the log grid: multiplicative
// convolution with the psi_{alpha/2,n,0} kernel times t^{-alpha/4}, scaled
// by 2 pi^{n/2}/Gamma(n/2).  Ratio must stay below the sharp operator norm.
VerificationReport stein_weiss_operator_ratio(int n, double alpha, std::span<const double> h,
                                              const kernels::LogGrid& grid);

// Deterministic generator for randomized suites: the seed fully determines
// the sequence.
class TestFunctionRng {
 public:
  explicit TestFunctionRng(std::uint64_t seed) : state_(seed) {}
  double uniform();                              // [0, 1)
  double uniform(double lo, double hi);
  RadialTestFunction next_function(int m, int j_max);

 private:
  std::uint64_t state_;
};

}  // namespace steinweiss::verify
