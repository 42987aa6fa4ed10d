#include "steinweiss/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "steinweiss/special.hpp"

namespace steinweiss::constants {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogPi = 1.1447298858494001741;

using special::digamma;
using special::log_gamma;

// [Gamma(a)/Gamma(b)]^2 in the log domain.
double gamma_ratio_sq(double a, double b) {
  return std::exp(2.0 * (log_gamma(a) - log_gamma(b)));
}

void require_dimension(int n, int min_n, const char* who) {
  if (n < min_n) {
    throw std::range_error(std::string(who) + ": requires n >= " + std::to_string(min_n));
  }
}

void require_alpha_open(const PittParams& p, const char* who) {
  require_dimension(p.n, 2, who);
  if (!(p.alpha > 0.0 && p.alpha < p.n)) {
    throw std::range_error(std::string(who) + ": requires 0 < alpha < n");
  }
}

double positive_gamma_arg(double a, const char* who) {
  if (!(a > 0.0)) {
    throw std::domain_error(std::string(who) +
                            ": Gamma argument nonpositive (outside admissible region)");
  }
  return a;
}

}  // namespace

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::A: return "A";
    case Regime::B: return "B";
    default: return "transition";
  }
}

double pitt_C(const PittParams& p) {
  require_dimension(p.n, 2, "pitt_C");
  if (!(p.alpha >= 0.0 && p.alpha < p.n)) {
    throw std::range_error("pitt_C: requires 0 <= alpha < n");
  }
  const double n = p.n;
  return std::exp(p.alpha * kLogPi) * gamma_ratio_sq((n - p.alpha) / 4.0, (n + p.alpha) / 4.0);
}

double log_uncertainty_D(int n) {
  require_dimension(n, 1, "log_uncertainty_D");
  return digamma(n / 4.0) - kLogPi;
}

double stein_weiss_B(const PittParams& p) {
  require_alpha_open(p, "stein_weiss_B");
  const double n = p.n;
  const double a = p.alpha;
  return std::exp(0.5 * n * kLogPi + log_gamma(a / 2.0) - log_gamma((n - a) / 2.0)) *
         gamma_ratio_sq((n - a) / 4.0, (n + a) / 4.0);
}

double gradient_term(const GradientTermParams& g) {
  require_alpha_open({g.n, g.alpha}, "gradient_term");
  if (g.k < 0) throw std::range_error("gradient_term: requires k >= 0");
  const double n = g.n;
  const double a = g.alpha;
  const double k2 = 2.0 * g.k;
  const double ratio = gamma_ratio_sq((n + k2 - a + 2.0) / 4.0, (n + k2 + a + 2.0) / 4.0);
  if (g.k == 0) return ratio;  // parenthesis is one by convention
  const double d = n + k2 - a - 2.0;
  return ratio * (1.0 + 4.0 * g.k * a / (d * d));
}

RegimeReport pitt_gradient_D(const PittParams& p, int k_max) {
  require_alpha_open(p, "pitt_gradient_D");
  if (k_max < 1) throw std::range_error("pitt_gradient_D: requires k_max >= 1");
  RegimeReport report;
  report.per_k_terms.reserve(k_max + 1);
  double best = -1.0;
  for (int k = 0; k <= k_max; ++k) {
    const double term = gradient_term({p.n, p.alpha, k});
    report.per_k_terms.emplace_back(k, term);
    if (term > best) {
      best = term;
      report.argmax_k = k;
    }
  }
  report.d_alpha = std::exp(p.alpha * kLogPi) * best;
  if (p.alpha >= p.n - 2.0) {
    report.label = Regime::A;
  } else if (p.n >= 4 && p.alpha <= p.n - 3.0) {
    report.label = Regime::B;
  } else {
    report.label = Regime::Transition;
  }
  return report;
}

double n2_gradient_D(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw std::range_error("n2_gradient_D: requires 0 < alpha < 2");
  }
  const double ratio = gamma_ratio_sq(1.5 - alpha / 4.0, 1.5 + alpha / 4.0);
  return std::exp(alpha * kLogPi) * ratio * (4.0 + alpha * alpha) /
         ((2.0 - alpha) * (2.0 - alpha));
}

double trace_constant(int n) {
  require_dimension(n, 2, "trace_constant");
  if (n == 2) return 2.5 * gamma_ratio_sq(1.25, 1.75);
  if (n == 3) return kPi / 4.0;
  return 0.5 * gamma_ratio_sq((n + 1.0) / 4.0, (n + 3.0) / 4.0);
}

RegimeReport regime_classify(const PittParams& p, int k_max) {
  return pitt_gradient_D(p, k_max);
}

double asymptotic_D(const PittParams& p) {
  require_dimension(p.n, 2, "asymptotic_D");
  if (!(p.alpha >= 0.0 && p.alpha < p.n)) {
    throw std::range_error("asymptotic_D: requires 0 <= alpha < n");
  }
  return std::pow(4.0 * kPi / p.n, p.alpha);
}

double log_gradient_E(int n) {
  require_dimension(n, 2, "log_gradient_E");
  if (n == 2) return digamma(1.5) - kLogPi - 1.0;
  return digamma(n / 4.0 + 0.5) - kLogPi;
}

double kappa_L1_closed(int n, double rho, double sigma) {
  require_dimension(n, 2, "kappa_L1_closed");
  // Positivity of every Gamma argument is the admissible region; sigma may
  // exceed n as long as the kernel exponent keeps n - sigma/2 > 0 and the
  // weight obeys n + rho - sigma > 0.
  if (!(rho > 0.0 && rho < n && sigma > 0.0 && sigma < 2.0 * n)) {
    throw std::domain_error("kappa_L1_closed: requires 0 < rho < n and 0 < sigma < 2n");
  }
  const double nd = n;
  // The (n +- rho)/4 arguments follow from the Riesz convolution identity
  // applied to the defining integral; they are what the numeric L1 norm
  // reproduces.
  const double num = log_gamma(nd / 2.0) + log_gamma(sigma / 4.0) +
                     log_gamma(positive_gamma_arg((nd - rho) / 4.0, "kappa_L1_closed")) +
                     log_gamma(positive_gamma_arg((nd + rho - sigma) / 4.0, "kappa_L1_closed"));
  const double den = std::log(2.0) +
                     log_gamma(positive_gamma_arg(nd / 2.0 - sigma / 4.0, "kappa_L1_closed")) +
                     log_gamma((nd + rho) / 4.0) +
                     log_gamma(positive_gamma_arg((nd + sigma - rho) / 4.0, "kappa_L1_closed"));
  return std::exp(num - den);
}

namespace {

void validate_iterated(const IteratedParams& ip, const char* who) {
  require_dimension(ip.n, 2, who);
  const double n = ip.n;
  if (!(ip.alpha > 0.0 && ip.alpha < n && ip.rho > 0.0 && ip.rho < n && ip.sigma > 0.0 &&
        ip.sigma < n)) {
    throw std::domain_error(std::string(who) + ": requires 0 < alpha, rho, sigma < n");
  }
  const double beta = ip.beta();
  if (!(beta > 0.0 && beta < n)) {
    throw std::domain_error(std::string(who) +
                            ": derived beta = alpha + sigma - rho must lie in (0, n)");
  }
  positive_gamma_arg(n + ip.rho - ip.sigma, who);
  positive_gamma_arg(n + ip.sigma - ip.rho, who);
}

}  // namespace

double iterated_B(const IteratedParams& ip) {
  validate_iterated(ip, "iterated_B");
  const double n = ip.n;
  const double log_r1 = log_gamma((n - ip.alpha) / 4.0) - log_gamma((n + ip.alpha) / 4.0);
  const double log_r2 = log_gamma(ip.sigma / 4.0) - log_gamma(n / 2.0 - ip.sigma / 4.0);
  const double log_r3 = log_gamma((n - ip.rho) / 4.0) - log_gamma((n + ip.rho) / 4.0);
  const double log_r4 =
      log_gamma((n + ip.rho - ip.sigma) / 4.0) - log_gamma((n + ip.sigma - ip.rho) / 4.0);
  return std::exp(1.5 * n * kLogPi + log_gamma(ip.alpha / 2.0) -
                  log_gamma((n - ip.alpha) / 2.0) +
                  2.0 * (log_r1 + log_r2 + log_r3 + log_r4));
}

double iterated_C(const IteratedParams& ip) {
  validate_iterated(ip, "iterated_C");
  const double n = ip.n;
  const double log_r1 = log_gamma((n - ip.alpha) / 4.0) - log_gamma((n + ip.alpha) / 4.0);
  const double log_r3 = log_gamma((n - ip.rho) / 4.0) - log_gamma((n + ip.rho) / 4.0);
  const double log_r4 =
      log_gamma((n + ip.rho - ip.sigma) / 4.0) - log_gamma((n + ip.sigma - ip.rho) / 4.0);
  return std::exp(-0.5 * (ip.alpha + ip.sigma) * std::log(2.0) + log_r1 + log_r3 + log_r4);
}

double psi_L1_closed(int n, double alpha, int ell) {
  require_alpha_open({n, alpha}, "psi_L1_closed");
  const double nd = n;
  const double prefactor =
      std::exp(log_gamma(nd / 2.0) + log_gamma(alpha / 2.0) - std::log(2.0) -
               log_gamma((nd - alpha) / 2.0));
  switch (ell) {
    case 0:
      return prefactor * gamma_ratio_sq((nd - alpha) / 4.0, (nd + alpha) / 4.0);
    case 1:
      return prefactor * gamma_ratio_sq((nd - alpha + 2.0) / 4.0, (nd + alpha + 2.0) / 4.0);
    case 2:
      return prefactor * gamma_ratio_sq((nd - alpha) / 4.0, (nd + alpha) / 4.0) *
             ((nd - alpha) * (nd - alpha) + 4.0 * alpha) / ((nd + alpha) * (nd + alpha));
    default:
      throw std::invalid_argument(
          "psi_L1_closed: no closed form for ell = " + std::to_string(ell) +
          "; even orders follow from iterated_gradient_D's recursion, and "
          "psi_L1_numeric handles any ell");
  }
}

double iterated_gradient_D(const IterGradParams& g) {
  require_dimension(g.n, 2, "iterated_gradient_D");
  if (g.ell < 0 || g.ell % 2 != 0) {
    throw std::invalid_argument(
        "iterated_gradient_D: radial recursion covers even ell only (ell = " +
        std::to_string(g.ell) + ")");
  }
  if (!(g.alpha > 0.0 && g.alpha + g.ell < g.n)) {
    throw std::domain_error(
        "iterated_gradient_D: requires 0 < alpha and alpha + ell < n so every "
        "recursion step stays in the validity range of the base closed form");
  }
  if (g.ell == 0) return pitt_C({g.n, g.alpha});
  const double lower = iterated_gradient_D({g.n, g.alpha, g.ell - 2});
  const double shifted = iterated_gradient_D({g.n + 2, g.alpha + 2.0, g.ell - 2});
  return lower - g.alpha * (g.n - 1.0) / (4.0 * kPi * kPi) * shifted;
}

double lambda_diagnostics(LambdaKind kind, double x) {
  switch (kind) {
    case LambdaKind::TraceW: {
      if (!(x >= 1.0)) throw std::domain_error("lambda_diagnostics(trace_w): requires w >= 1");
      const double d = 4.0 * x - 1.0;
      // The 1/16 normalizes this to the form the proof tabulates
      // (ln[117/25 * Gamma(3/4)^4 / Gamma(1/4)^4] at w = 1).
      return 4.0 * log_gamma(x + 0.75) - 2.0 * log_gamma(x + 0.25) -
             2.0 * log_gamma(x + 1.25) + std::log1p(4.0 / (d * d)) - std::log(16.0);
    }
    case LambdaKind::N3Alpha: {
      if (!(x > 0.0 && x < 3.0)) {
        throw std::domain_error("lambda_diagnostics(n3_alpha): requires 0 < alpha < 3");
      }
      const double d = 3.0 - x;
      return 2.0 * (log_gamma((7.0 - x) / 4.0) + log_gamma((5.0 + x) / 4.0) -
                    log_gamma((7.0 + x) / 4.0) - log_gamma((5.0 - x) / 4.0)) +
             std::log((x * x - 2.0 * x + 9.0) / (d * d));
    }
    case LambdaKind::ABoundary: {
      if (!(x >= 2.0)) throw std::domain_error("lambda_diagnostics(a_boundary): requires x >= 2");
      return 2.0 * (log_gamma(1.5) + log_gamma(x / 2.0) - log_gamma((x + 1.0) / 2.0)) +
             std::log(x - 1.0);
    }
  }
  throw std::invalid_argument("lambda_diagnostics: unknown kind");
}

double lambda_n3_deriv_at_zero() { return digamma(1.25) - digamma(1.75) + 4.0 / 9.0; }

double stein_weiss_operator_C(int n, double alpha) {
  require_alpha_open({n, alpha}, "stein_weiss_operator_C");
  const double nd = n;
  return std::exp(0.5 * nd * kLogPi + log_gamma(alpha / 4.0) + log_gamma((nd - alpha) / 4.0) -
                  log_gamma(nd / 2.0 - alpha / 4.0) - log_gamma((nd + alpha) / 4.0));
}

double weighted_sobolev_C(int n, double alpha) {
  require_alpha_open({n, alpha}, "weighted_sobolev_C");
  const double nd = n;
  return std::exp(-0.5 * alpha * std::log(2.0) + log_gamma((nd - alpha) / 4.0) -
                  log_gamma((nd + alpha) / 4.0));
}

double weighted_sobolev_iterated_C(int n, double alpha) {
  const double c = weighted_sobolev_C(n, alpha);
  return c * c;
}

}  // namespace steinweiss::constants
