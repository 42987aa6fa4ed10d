#include "steinweiss/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "steinweiss/errors.hpp"
#include "steinweiss/special.hpp"

namespace steinweiss::quadrature {

namespace {

std::unique_ptr<Rule> build_jacobi(double a, double b, int n) {
  if (!(a > -1.0) || !(b > -1.0) || n < 1) {
    throw std::domain_error("gauss_jacobi: need a, b > -1 and n >= 1");
  }
  using special::log_gamma;
  const double mu0 = std::exp((a + b + 1.0) * std::log(2.0) + log_gamma(a + 1.0) +
                              log_gamma(b + 1.0) - log_gamma(a + b + 2.0));

  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  const double ab = a + b;
  for (int k = 0; k < n; ++k) {
    double alpha_k;
    if (k == 0) {
      alpha_k = (b - a) / (ab + 2.0);
    } else {
      const double d = 2.0 * k + ab;
      alpha_k = (b * b - a * a) / (d * (d + 2.0));
    }
    J(k, k) = alpha_k;
  }
  for (int k = 1; k < n; ++k) {
    double beta_k;
    if (k == 1) {
      beta_k = 4.0 * (a + 1.0) * (b + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
    } else {
      const double d = 2.0 * k + ab;
      beta_k = 4.0 * k * (k + a) * (k + b) * (k + ab) / (d * d * (d * d - 1.0));
    }
    const double off = std::sqrt(beta_k);
    J(k, k - 1) = off;
    J(k - 1, k) = off;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(J);
  if (solver.info() != Eigen::Success) {
    throw quadrature_error("gauss_jacobi: eigensolver failed");
  }
  auto rule = std::make_unique<Rule>();
  rule->nodes.resize(n);
  rule->weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule->nodes[i] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule->weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

std::map<std::tuple<double, double, int>, std::unique_ptr<Rule>>& rule_cache() {
  static auto* cache = new std::map<std::tuple<double, double, int>, std::unique_ptr<Rule>>;
  return *cache;
}
std::mutex cache_mutex;

}  // namespace

const Rule& gauss_jacobi(double a, double b, int n) {
  const auto key = std::make_tuple(a, b, n);
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto& cache = rule_cache();
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_jacobi(a, b, n)).first;
  return *it->second;
}

const Rule& gauss_legendre(int n) { return gauss_jacobi(0.0, 0.0, n); }

Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_floor) {
  Result res;
  if (a == b) return res;
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double prev = 0.0;
  bool have_prev = false;
  for (int n = 8; n <= 1024; n *= 2) {
    const Rule& rule = gauss_legendre(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    sum *= half;
    res.evaluations += n;
    if (have_prev) {
      const double diff = std::abs(sum - prev);
      res.value = sum;
      res.est_error = diff;
      if (diff <= std::max(rel_tol * std::abs(sum), abs_floor)) return res;
    }
    prev = sum;
    have_prev = true;
  }
  res.value = prev;
  return res;
}

Result integrate_left_algebraic(const std::function<double(double)>& f, double lam,
                                double b, double rel_tol) {
  // int_0^b f(w) w^lam dw = (b/2)^{lam+1} int_{-1}^{1} f(b(1+x)/2) (1+x)^lam dx
  Result res;
  const double scale = std::pow(0.5 * b, lam + 1.0);
  double prev = 0.0;
  bool have_prev = false;
  for (int n = 12; n <= 768; n *= 2) {
    const Rule& rule = gauss_jacobi(0.0, lam, n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      sum += rule.weights[i] * f(b * 0.5 * (1.0 + rule.nodes[i]));
    }
    sum *= scale;
    res.evaluations += n;
    if (have_prev) {
      const double diff = std::abs(sum - prev);
      res.value = sum;
      res.est_error = diff;
      if (diff <= rel_tol * std::abs(sum) + 1e-300) return res;
    }
    prev = sum;
    have_prev = true;
  }
  res.value = prev;
  return res;
}

Result integrate_to_zero(const std::function<double(double)>& f, double b,
                         double rel_tol) {
  Result total;
  double hi = b;
  double prev_c = 0.0;
  int consecutive_small = 0;
  for (int j = 0; j < 2000; ++j) {
    const double lo = 0.5 * hi;
    const Result panel = integrate(f, lo, hi, 0.25 * rel_tol,
                                   0.125 * rel_tol * std::abs(total.value));
    total += panel;
    const double c = std::abs(panel.value);
    // Empirical geometric tail bound: panels of u^{s-1}-type integrands
    // shrink by a fixed ratio 2^{-s} per halving.
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
      if (++consecutive_small >= 2) return total;
    } else {
      consecutive_small = 0;
    }
    prev_c = c;
    hi = lo;
    if (hi < 1e-140) {
      throw quadrature_error("integrate_to_zero: endpoint singularity too strong");
    }
  }
  throw quadrature_error("integrate_to_zero: no convergence");
}

Result integrate_halfline(const std::function<double(double)>& f, double rel_tol) {
  Result total = integrate_to_zero(f, 1.0, rel_tol);
  int small_panels = 0;
  for (int k = 1; k < 20000; ++k) {
    const Result panel = integrate(f, static_cast<double>(k), static_cast<double>(k + 1),
                                   0.25 * rel_tol, 0.125 * rel_tol * std::abs(total.value));
    total += panel;
    if (std::abs(panel.value) <= 0.125 * rel_tol * std::abs(total.value)) {
      if (++small_panels >= 2) return total;
    } else {
      small_panels = 0;
    }
  }
  throw quadrature_error("integrate_halfline: tail did not decay (divergent integral?)");
}

}  // namespace steinweiss::quadrature
