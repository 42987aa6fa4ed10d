#pragma once

#include <functional>
#include <span>
#include <vector>

#include "steinweiss/quadrature.hpp"

namespace steinweiss::kernels {

using quadrature::Result;
using QuadratureResult = quadrature::Result;

// Descriptor of the sphere-reduced kernel
//   psi_{alpha,n,ell}(t) = int_{S^{n-1}} (xi_1)^ell [t + 1/t - 2 xi_1]^{-(n-alpha)/2} dxi
// with dxi the normalized surface measure.
struct KernelSpec {
  int n = 0;
  double alpha = 0.0;
  int ell = 0;

  void validate() const;
};

// Uniform grid in u = ln t on the multiplicative group R_+.  Odd point
// count keeps a node exactly at u = 0.
struct LogGrid {
  double half_width = 60.0;
  int points = 8193;

  void validate() const;
  double spacing() const { return 2.0 * half_width / (points - 1); }
  int center() const { return (points - 1) / 2; }
  double node(int i) const { return -half_width + spacing() * i; }
};

// Normalized sphere average c_n int_{-1}^{1} g(s) (1-s^2)^{(n-3)/2} ds with
// c_n = Gamma(n/2) / (sqrt(pi) Gamma((n-1)/2)), by Gauss-Jacobi quadrature
// with the (n-3)/2 endpoint exponents.  Throws quadrature_error when the
// nested rules do not converge (non-integrable g).
QuadratureResult sphere_average(int n, const std::function<double(double)>& g,
                                double rel_tol = 1e-10);

// Pointwise psi_{alpha,n,ell}(t), t > 0.  At t = 1 the value is finite only
// for alpha > 1; otherwise a domain error is thrown.  Satisfies
// psi(t) = psi(1/t).
double psi_eval(const KernelSpec& spec, double t, double rel_tol = 1e-11);

// ||psi_{alpha,n,ell}||_{L1(R_+, dt/t)} as a 2-D (u = ln t, s) quadrature,
// folded onto u >= 0 by the inversion symmetry.
QuadratureResult psi_L1_numeric(const KernelSpec& spec, double rel_tol = 1e-8);

// psi_{alpha,n,ell+2}(t) - psi_{alpha,n,ell}(t) + ((n-1)/n) psi_{alpha+2,n+2,ell}(t);
// vanishes identically (weight-measure identity behind the constant recursion).
double kernel_recursion_residual(int n, double alpha, int ell, double t);

// ||kappa||_{L1} for kappa(t) = t^{-rho/2+sigma/4} psi_{sigma/2,n,0}(t).
// Requires n + rho - sigma > 0 (else the integral diverges and a
// quadrature_error is thrown).
QuadratureResult kappa_L1_numeric(int n, double rho, double sigma, double rel_tol = 1e-8);

// Constant of the Riesz composition  |x|^{-beta} * |x|^{-delta}
//   = const * |x|^{-(beta+delta-n)},
// valid for 0 < beta, delta < n and n < beta + delta < 2n.
double riesz_convolution_constant(int n, double beta, double delta);

// int_{R^n} |x-y|^{-beta} |y|^{-delta} dy at |x| = 1 by (r, s) quadrature;
// equals the constant above.
QuadratureResult riesz_convolution_numeric(int n, double beta, double delta,
                                           double rel_tol = 1e-8);

// Trapezoidal discrete convolution on the grid (u = ln t); linear in h,
// discretization error O(h^2).  Fixed-order pairwise summation keeps the
// result independent of evaluation order.
std::vector<double> multiplicative_convolve(std::span<const double> kernel,
                                            std::span<const double> h, const LogGrid& grid);

// Samples of t^{power} psi(t) on the grid as per-cell averages (cell mass
// divided by spacing).  Mass-preserving, so the trapezoid mass of the
// samples never exceeds the continuous L1 norm; this also gives the center
// cell a finite value when the pointwise kernel blows up at t = 1.
std::vector<double> sample_kernel_mass(const KernelSpec& spec, double power,
                                       const LogGrid& grid, double rel_tol = 1e-9);

// ||psi (*) h_sigma||_2 / ||h_sigma||_2 for the Gaussian bump
// h_sigma(u) = exp(-u^2 / (2 sigma_u^2)); approaches ||psi||_1 from below
// as sigma_u grows.  Throws quadrature_error when kernel mass leaks past
// the grid boundary.
double young_sharpness_ratio(const KernelSpec& spec, double sigma_u, const LogGrid& grid);

// l2 norm on the grid, sqrt(h * sum v^2), pairwise summation.
double grid_l2_norm(std::span<const double> v, const LogGrid& grid);

}  // namespace steinweiss::kernels
