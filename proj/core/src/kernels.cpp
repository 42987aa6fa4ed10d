#include "steinweiss/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "steinweiss/errors.hpp"
#include "steinweiss/special.hpp"

namespace steinweiss::kernels {

namespace {

constexpr double kPi = std::numbers::pi;

double sphere_density_norm(int n) {
  // c_n = Gamma(n/2) / (sqrt(pi) Gamma((n-1)/2)) normalizes the projected
  // measure c_n (1-s^2)^{(n-3)/2} ds.
  using special::log_gamma;
  return std::exp(log_gamma(n / 2.0) - log_gamma((n - 1.0) / 2.0)) / std::sqrt(kPi);
}

double int_pow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// int_0^1 f(w) w^lam dw where f may vary on a short scale `scale` near 0:
// dyadic Gauss-Legendre panels down to the scale, then one Gauss-Jacobi
// panel across the remaining endpoint piece.
Result left_integral_scaled(const std::function<double(double)>& f, double lam, double scale,
                            double rel_tol) {
  if (scale >= 1.0) return quadrature::integrate_left_algebraic(f, lam, 1.0, rel_tol);
  Result total;
  const double cut = std::max(scale / 8.0, 1e-290);
  total += quadrature::integrate_left_algebraic(f, lam, cut, rel_tol);
  double lo = cut;
  while (lo < 1.0) {
    const double hi = std::min(2.0 * lo, 1.0);
    const auto g = [&](double w) { return f(w) * std::pow(w, lam); };
    total += quadrature::integrate(g, lo, hi, 0.5 * rel_tol,
                                   0.25 * rel_tol * std::abs(total.value));
    lo = hi;
  }
  return total;
}

// eps = t + 1/t - 2 >= 0 carries the full information about t (the kernel
// is inversion-symmetric); u-space callers compute it as 4 sinh^2(u/2) so
// it stays exact when exp(u) would round to 1.
Result psi_eval_eps(const KernelSpec& spec, double eps, double rel_tol) {
  spec.validate();
  const double p = (spec.n - spec.alpha) / 2.0;
  const double lam = (spec.n - 3.0) / 2.0;
  if (eps == 0.0 && !(spec.alpha > 1.0)) {
    throw std::domain_error("psi_eval: pointwise value at t = 1 is finite only for alpha > 1");
  }
  const int ell = spec.ell;

  // s in [-1, 0], substituted w = 1 + s: the kernel factor stays >= eps + 2.
  const auto f_minus = [&](double w) {
    return int_pow(w - 1.0, ell) * std::pow(eps + 4.0 - 2.0 * w, -p) * std::pow(2.0 - w, lam);
  };
  // s in [0, 1], substituted w = 1 - s: the kernel factor is eps + 2w.
  const auto f_plus = [&](double w) {
    return int_pow(1.0 - w, ell) * std::pow(eps + 2.0 * w, -p) * std::pow(2.0 - w, lam);
  };

  Result res = quadrature::integrate_left_algebraic(f_minus, lam, 1.0, rel_tol);
  res += left_integral_scaled(f_plus, lam, eps, rel_tol);
  const double c_n = sphere_density_norm(spec.n);
  res.value *= c_n;
  res.est_error *= c_n;
  return res;
}

Result psi_eval_impl(const KernelSpec& spec, double t, double rel_tol) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::domain_error("psi_eval: requires t > 0");
  }
  return psi_eval_eps(spec, (t - 1.0) * (t - 1.0) / t, rel_tol);
}

double eps_of_u(double u) {
  const double s = std::sinh(0.5 * u);
  return 4.0 * s * s;
}

// Smallest u for which the w-machinery above stays inside double range:
// intermediates scale like (u^2)^{(alpha-3)/2}.
double safe_u_floor(double alpha) { return std::exp(-650.0 / (3.0 - std::min(alpha, 2.5))); }

// int_0^b f(u) du where f ~ K u^{s-1} (s > 0) at the origin, possibly with a
// logarithmic factor when s = 1.  Dyadic panels toward 0 with an empirical
// geometric tail bound; if the panels would leave double range before the
// bound is met, the remaining piece is added from the K u^{s-1} model.
Result descend_to_zero(const std::function<double(double)>& f, double b, double s,
                       double rel_tol, double u_floor) {
  Result total;
  double hi = b;
  double prev_c = 0.0;
  int small_count = 0;
  for (int j = 0; j < 4000; ++j) {
    const double lo = 0.5 * hi;
    const Result panel = quadrature::integrate(f, lo, hi, 0.25 * rel_tol,
                                               0.125 * rel_tol * std::abs(total.value));
    total += panel;
    const double c = std::abs(panel.value);
    if (j > 2 && prev_c > 0.0 && c > 0.0) {
      const double r = c / prev_c;
      if (r < 0.95) {
        const double tail = c * r / (1.0 - r);
        if (tail <= 0.25 * rel_tol * std::abs(total.value)) {
          total.est_error += tail;
          return total;
        }
      }
    }
    if (c <= 1e-3 * rel_tol * std::abs(total.value)) {
      if (++small_count >= 2) return total;
    } else {
      small_count = 0;
    }
    prev_c = c;
    hi = lo;
    if (hi < u_floor) {
      if (s > 0.0 && s < 1.0) {
        const double u_star = 0.75 * hi;
        const double k_est = f(u_star) * std::pow(u_star, 1.0 - s);
        const double tail = k_est * std::pow(hi, s) / s;
        total.value += tail;
        total.est_error += 0.02 * std::abs(tail) + 1e-300;
        return total;
      }
      throw quadrature_error("descend_to_zero: singular endpoint out of double range");
    }
  }
  throw quadrature_error("descend_to_zero: no convergence");
}

// int_0^inf 2 cosh(q u) psi_{alpha,n,ell}(e^u) du: the shared reduction
// behind the psi / kappa / Riesz norms.  The integrand behaves like
// u^{alpha-1} at u = 0 and decays like exp(-((n-alpha)/2 - |q|) u).
Result weighted_psi_halfline(const KernelSpec& spec, double q, double rel_tol) {
  spec.validate();
  if (!((spec.n - spec.alpha) / 2.0 > std::abs(q))) {
    throw quadrature_error(
        "weighted kernel integral diverges: exponential weight exceeds kernel decay");
  }
  const double inner_tol = std::max(rel_tol / 32.0, 1e-14);
  std::int64_t inner_evals = 0;
  const auto f = [&](double u) {
    const Result point = psi_eval_eps(spec, eps_of_u(u), inner_tol);
    inner_evals += point.evaluations;
    return 2.0 * std::cosh(q * u) * std::abs(point.value);
  };
  Result total =
      descend_to_zero(f, 1.0, spec.alpha, rel_tol, safe_u_floor(spec.alpha));
  int small_panels = 0;
  for (int k = 1; k < 20000; ++k) {
    const Result panel =
        quadrature::integrate(f, static_cast<double>(k), static_cast<double>(k + 1),
                              0.25 * rel_tol, 0.125 * rel_tol * std::abs(total.value));
    total += panel;
    if (std::abs(panel.value) <= 0.125 * rel_tol * std::abs(total.value)) {
      if (++small_panels >= 2) {
        total.evaluations += inner_evals;
        return total;
      }
    } else {
      small_panels = 0;
    }
  }
  throw quadrature_error("weighted kernel integral: tail did not decay");
}

void check_kappa_domain(int n, double rho, double sigma, const char* who) {
  if (n < 2 || !(rho > 0.0 && rho < n && sigma > 0.0 && sigma < 2.0 * n)) {
    throw std::domain_error(std::string(who) +
                            ": requires n >= 2, 0 < rho < n and 0 < sigma < 2n");
  }
  if (!(n + rho - sigma > 0.0)) {
    throw quadrature_error(std::string(who) + ": integral diverges for n + rho - sigma <= 0");
  }
}

double pairwise_sum(const double* v, std::size_t len) {
  if (len <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < len; ++i) s += v[i];
    return s;
  }
  const std::size_t half = len / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, len - half);
}

}  // namespace

void KernelSpec::validate() const {
  if (n < 2) throw std::domain_error("KernelSpec: requires n >= 2");
  if (!(alpha > 0.0 && alpha < n)) {
    throw std::domain_error("KernelSpec: requires 0 < alpha < n");
  }
  if (ell < 0) throw std::domain_error("KernelSpec: requires ell >= 0");
}

void LogGrid::validate() const {
  if (!(half_width > 0.0)) throw std::domain_error("LogGrid: requires half_width > 0");
  if (points < 3 || points % 2 == 0) {
    throw std::domain_error("LogGrid: requires an odd point count >= 3");
  }
}

QuadratureResult sphere_average(int n, const std::function<double(double)>& g,
                                double rel_tol) {
  if (n < 2) throw std::domain_error("sphere_average: requires n >= 2");
  const double lam = (n - 3.0) / 2.0;
  const double c_n = sphere_density_norm(n);
  Result res;
  double prev = 0.0;
  bool have_prev = false;
  for (int order = 16; order <= 2048; order *= 2) {
    const auto& rule = quadrature::gauss_jacobi(lam, lam, order);
    double sum = 0.0;
    double sum_abs = 0.0;
    for (int i = 0; i < order; ++i) {
      const double term = rule.weights[i] * g(rule.nodes[i]);
      sum += term;
      sum_abs += std::abs(term);
    }
    sum *= c_n;
    sum_abs *= c_n;
    res.evaluations += order;
    if (have_prev) {
      res.value = sum;
      res.est_error = std::abs(sum - prev);
      // The absolute floor covers integrals that vanish by symmetry.
      if (res.est_error <= rel_tol * std::abs(sum) + 1e-14 * sum_abs) return res;
    }
    prev = sum;
    have_prev = true;
  }
  throw quadrature_error("sphere_average: nested rules did not converge (integrand singular?)");
}

double psi_eval(const KernelSpec& spec, double t, double rel_tol) {
  return psi_eval_impl(spec, t, rel_tol).value;
}

QuadratureResult psi_L1_numeric(const KernelSpec& spec, double rel_tol) {
  return weighted_psi_halfline(spec, 0.0, rel_tol);
}

double kernel_recursion_residual(int n, double alpha, int ell, double t) {
  const double plus_two = psi_eval({n, alpha, ell + 2}, t);
  const double base = psi_eval({n, alpha, ell}, t);
  const double shifted = psi_eval({n + 2, alpha + 2.0, ell}, t);
  return plus_two - base + (n - 1.0) / n * shifted;
}

QuadratureResult kappa_L1_numeric(int n, double rho, double sigma, double rel_tol) {
  check_kappa_domain(n, rho, sigma, "kappa_L1_numeric");
  return weighted_psi_halfline({n, sigma / 2.0, 0}, sigma / 4.0 - rho / 2.0, rel_tol);
}

double riesz_convolution_constant(int n, double beta, double delta) {
  if (n < 2 || !(beta > 0.0 && beta < n && delta > 0.0 && delta < n) ||
      !(beta + delta > n && beta + delta < 2.0 * n)) {
    throw std::range_error(
        "riesz_convolution_constant: requires 0 < beta, delta < n and n < beta + delta < 2n");
  }
  using special::log_gamma;
  const double nd = n;
  return std::exp(0.5 * nd * std::log(kPi) + log_gamma((nd - beta) / 2.0) +
                  log_gamma((nd - delta) / 2.0) + log_gamma((beta + delta - nd) / 2.0) -
                  log_gamma(beta / 2.0) - log_gamma(delta / 2.0) -
                  log_gamma((2.0 * nd - beta - delta) / 2.0));
}

QuadratureResult riesz_convolution_numeric(int n, double beta, double delta, double rel_tol) {
  riesz_convolution_constant(n, beta, delta);  // reuse the range validation
  // Peel the angular integral at |x| = 1: |x - y|^{-beta} reduces to the psi
  // kernel of exponent beta/2, i.e. kernel parameter alpha = n - beta, with
  // radial weight r^{n - delta - beta/2} against dr/r.
  const KernelSpec spec{n, n - beta, 0};
  const double q = n - delta - beta / 2.0;
  Result res = weighted_psi_halfline(spec, q, rel_tol);
  const double omega = 2.0 * std::exp(0.5 * n * std::log(kPi) - special::log_gamma(n / 2.0));
  res.value *= omega;
  res.est_error *= omega;
  return res;
}

std::vector<double> multiplicative_convolve(std::span<const double> kernel,
                                            std::span<const double> h, const LogGrid& grid) {
  grid.validate();
  const int m = grid.points;
  if (kernel.size() != static_cast<std::size_t>(m) || h.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("multiplicative_convolve: samples do not match the grid");
  }
  const int c = grid.center();
  const double step = grid.spacing();
  std::vector<double> out(m, 0.0);
  std::vector<double> terms;
  terms.reserve(m);
  for (int i = 0; i < m; ++i) {
    // (k (*) h)(u_i) = step * sum_j w_j k_j h(u_{i-j+c}); trapezoid
    // half-weights sit at the ends of the kernel samples.
    const int j_lo = std::max(0, i + c - (m - 1));
    const int j_hi = std::min(m - 1, i + c);
    terms.clear();
    for (int j = j_lo; j <= j_hi; ++j) {
      const double w = (j == 0 || j == m - 1) ? 0.5 : 1.0;
      terms.push_back(w * kernel[j] * h[i - j + c]);
    }
    out[i] = step * pairwise_sum(terms.data(), terms.size());
  }
  return out;
}

std::vector<double> sample_kernel_mass(const KernelSpec& spec, double power,
                                       const LogGrid& grid, double rel_tol) {
  spec.validate();
  grid.validate();
  const int m = grid.points;
  const int c = grid.center();
  const double step = grid.spacing();
  const double inner_tol = std::max(rel_tol / 16.0, 1e-13);
  const double u_floor = safe_u_floor(spec.alpha);

  const auto point = [&](double u) {
    return std::exp(power * u) * psi_eval_eps(spec, eps_of_u(u), inner_tol).value;
  };
  const auto cell_mass = [&](double a, double b) {
    if (a < 0.0 && 0.0 < b) {
      const auto left = [&](double u) { return point(-u); };
      const auto right = [&](double u) { return point(u); };
      return descend_to_zero(left, -a, spec.alpha, rel_tol, u_floor).value +
             descend_to_zero(right, b, spec.alpha, rel_tol, u_floor).value;
    }
    return quadrature::integrate(point, a, b, rel_tol, 0.0).value;
  };

  std::vector<double> samples(m, 0.0);
  // Center outward, so the negligibility cutoff has a running scale.
  double max_mass = 0.0;
  for (int offset = 0; offset <= c; ++offset) {
    for (const int i : {c - offset, c + offset}) {
      if (i < 0 || i >= m || (offset > 0 && i == c)) continue;
      const double u = grid.node(i);
      if (offset > 0 && std::abs(u) > 4.0) {
        const double pv = point(u);
        if (std::abs(pv) * step < 1e-17 * max_mass) {
          samples[i] = pv;  // negligible tail; the point value suffices
          continue;
        }
      }
      const double mass = cell_mass(u - 0.5 * step, u + 0.5 * step);
      max_mass = std::max(max_mass, std::abs(mass));
      samples[i] = mass / step;
    }
  }
  return samples;
}

double grid_l2_norm(std::span<const double> v, const LogGrid& grid) {
  std::vector<double> sq(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) sq[i] = v[i] * v[i];
  return std::sqrt(grid.spacing() * pairwise_sum(sq.data(), sq.size()));
}

double young_sharpness_ratio(const KernelSpec& spec, double sigma_u, const LogGrid& grid) {
  grid.validate();
  if (!(sigma_u > 0.0)) throw std::domain_error("young_sharpness_ratio: requires sigma_u > 0");
  const std::vector<double> kernel = sample_kernel_mass(spec, 0.0, grid);
  double kmax = 0.0;
  for (const double k : kernel) kmax = std::max(kmax, std::abs(k));
  if (std::abs(kernel.front()) > 1e-14 * kmax || std::abs(kernel.back()) > 1e-14 * kmax) {
    throw quadrature_error(
        "young_sharpness_ratio: kernel mass leaks past the grid boundary; enlarge half_width");
  }
  const int m = grid.points;
  std::vector<double> h(m);
  for (int i = 0; i < m; ++i) {
    const double u = grid.node(i);
    h[i] = std::exp(-u * u / (2.0 * sigma_u * sigma_u));
  }
  if (h.front() > 0.5 || h.back() > 0.5) {
    throw quadrature_error(
        "young_sharpness_ratio: test bump is not localized on the grid; enlarge half_width");
  }
  const std::vector<double> conv = multiplicative_convolve(kernel, h, grid);
  return grid_l2_norm(conv, grid) / grid_l2_norm(h, grid);
}

}  // namespace steinweiss::kernels
