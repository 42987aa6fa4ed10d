#pragma once

#include <utility>
#include <vector>

namespace steinweiss::constants {

// Dimension and weight exponent of the spectral-weight inequality
//   int |x|^-alpha |f|^2 dx <= C_alpha int |y|^alpha |fhat|^2 dy.
struct PittParams {
  int n = 0;
  double alpha = 0.0;
};

// Adds the spherical-harmonic degree k of one stratum of the gradient bound.
struct GradientTermParams {
  int n = 0;
  double alpha = 0.0;
  int k = 0;
};

// Parameters of the iterated (four-fold) potential; beta is determined by
// the dilation balance alpha + sigma = beta + rho.
struct IteratedParams {
  int n = 0;
  double alpha = 0.0;
  double rho = 0.0;
  double sigma = 0.0;

  double beta() const { return alpha + sigma - rho; }
};

// Gradient iteration order ell for the radial-constant recursion.
struct IterGradParams {
  int n = 0;
  double alpha = 0.0;
  int ell = 0;
};

enum class Regime { A, B, Transition };

struct RegimeReport {
  int argmax_k = 0;
  double d_alpha = 0.0;                               // pi^alpha * max term
  std::vector<std::pair<int, double>> per_k_terms;    // bracketed terms, no pi^alpha
  Regime label = Regime::Transition;
};

const char* regime_name(Regime r);

// C_alpha = pi^alpha [Gamma((n-alpha)/4) / Gamma((n+alpha)/4)]^2,
// 0 <= alpha < n.
double pitt_C(const PittParams& p);

// D = psi(n/4) - ln pi; may be negative.
double log_uncertainty_D(int n);

// B_alpha = pi^{n/2} [Gamma(alpha/2)/Gamma((n-alpha)/2)]
//           [Gamma((n-alpha)/4)/Gamma((n+alpha)/4)]^2,  0 < alpha < n.
double stein_weiss_B(const PittParams& p);

// One stratum of the gradient constant:
//   [Gamma((n+2k-alpha+2)/4)/Gamma((n+2k+alpha+2)/4)]^2
//     * (1 + 4 k alpha / (n+2k-alpha-2)^2),
// with the parenthesis defined as exactly 1 for k = 0.
double gradient_term(const GradientTermParams& g);

// pi^alpha * max_k of gradient_term over k = 0..k_max, with the argmax and
// the per-k table.  For n >= 3 the max is attained at k in {0, 1}.
RegimeReport pitt_gradient_D(const PittParams& p, int k_max = 50);

// n = 2 closed form: pi^alpha [Gamma(3/2-alpha/4)/Gamma(3/2+alpha/4)]^2
//                    (4+alpha^2)/(2-alpha)^2.
double n2_gradient_D(double alpha);

// D_1 / (2 pi): the trace-inequality constant; equals pi/4 at n = 3.
double trace_constant(int n);

// Label which stratum attains the max: A (k=1) for n-2 <= alpha < n,
// B (k=0) for n >= 4 and alpha <= n-3, transition otherwise.  The argmax
// itself always comes from the exhaustive search.
RegimeReport regime_classify(const PittParams& p, int k_max = 50);

// Large-n form (4 pi / n)^alpha; exact for alpha = 2, n >= 5.
double asymptotic_D(const PittParams& p);

// E = psi(3/2) - ln pi - 1 for n = 2;  psi(n/4 + 1/2) - ln pi for n >= 3.
double log_gradient_E(int n);

// L1 norm of kappa(t) = t^{-rho/2+sigma/4} psi_{sigma/2}(t) on (R_+, dt/t):
//   Gamma(n/2) Gamma(sigma/4) Gamma((n-rho)/4) Gamma((n+rho-sigma)/4)
//   / (2 Gamma(n/2-sigma/4) Gamma((n+rho)/4) Gamma((n+sigma-rho)/4)).
double kappa_L1_closed(int n, double rho, double sigma);

// Sharp constant of the four-fold potential,
//   pi^{3n/2} Gamma(alpha/2)/Gamma((n-alpha)/2) [R1 R2 R3 R4]^2,
// equal to (2 pi^{n/2}/Gamma(n/2))^3 ||kappa||_1^2 ||psi_alpha||_1.
double iterated_B(const IteratedParams& ip);

// Sharp constant of the weighted-Sobolev form of the same inequality,
//   2^{-(alpha+sigma)/2} R1(alpha) R1(rho) R4.
double iterated_C(const IteratedParams& ip);

// Closed-form L1 norms of psi_{alpha,n,ell} for ell = 0, 1, 2.
double psi_L1_closed(int n, double alpha, int ell);

// Radial iterated-gradient constant D_{alpha,n,ell} for even ell via
//   D_{alpha,n,ell+2} = D_{alpha,n,ell}
//                       - alpha (n-1) / (4 pi^2) * D_{alpha+2,n+2,ell},
// base ell = 0 given by pitt_C.  The 1/pi^2 factor in the coefficient is
// required for consistency with the ell = 2 closed form; without it the
// subtracted term is too large by exactly pi^2.
double iterated_gradient_D(const IterGradParams& g);

enum class LambdaKind { TraceW, N3Alpha, ABoundary };

// Log-ratio diagnostics of the k=1 versus k=0 strata used to locate the
// regime boundaries, under three parameterizations:
//   TraceW:    w = n/4 at alpha = 1, w >= 1       (-2.796 at w = 1)
//   N3Alpha:   n = 3 as a function of alpha in (0,3)
//   ABoundary: alpha = n-2 with n = x >= 2 continuous (zero at x = 2)
double lambda_diagnostics(LambdaKind kind, double x);

// d/dalpha of the N3Alpha diagnostic at alpha = 0:
// psi(5/4) - psi(7/4) + 4/9.
double lambda_n3_deriv_at_zero();

// Operator norm of g -> |x|^{-alpha/2} (|x|^{-(n-alpha/2)} * g) on L2:
//   pi^{n/2} Gamma(alpha/4) Gamma((n-alpha)/4)
//   / (Gamma(n/2-alpha/4) Gamma((n+alpha)/4)).
double stein_weiss_operator_C(int n, double alpha);

// ||h||_2 <= weighted_sobolev_C * ||(-Delta)^{alpha/4}(|x|^{alpha/2} h)||_2:
//   2^{-alpha/2} Gamma((n-alpha)/4)/Gamma((n+alpha)/4).
double weighted_sobolev_C(int n, double alpha);

// The ||T*T|| = ||T||^2 iterate of the above: weighted_sobolev_C squared.
double weighted_sobolev_iterated_C(int n, double alpha);

}  // namespace steinweiss::constants
