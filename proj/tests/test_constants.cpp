#include "steinweiss/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "steinweiss/special.hpp"

using namespace steinweiss;
using namespace steinweiss::constants;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kEuler = 0.57721566490153286061;
constexpr double kLn2 = 0.69314718055994530942;
const double kLogPi = std::log(kPi);

double eq30_closed(int n, double alpha) {
  // pi^alpha [G((n-a)/4)/G((n+a)/4)]^2 ((n-a)^2+4a)/(n+a)^2, written against
  // the independent Stirling oracle.
  const double lg =
      static_cast<double>(oracles::log_gamma_stirling((n - alpha) / 4.0) -
                          oracles::log_gamma_stirling((n + alpha) / 4.0));
  return std::pow(kPi, alpha) * std::exp(2.0 * lg) *
         ((n - alpha) * (n - alpha) + 4.0 * alpha) / ((n + alpha) * (n + alpha));
}
}  // namespace

TEST_CASE("pitt_C closed values") {
  CHECK(pitt_C({5, 0.0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pitt_C({4, 2.0}) == doctest::Approx(4.0 * kPi * kPi).epsilon(1e-14));
  CHECK(pitt_C({3, 1.0}) == doctest::Approx(kPi * kPi).epsilon(1e-14));
  CHECK_THROWS_AS(pitt_C({4, -0.1}), std::range_error);
  CHECK_THROWS_AS(pitt_C({4, 4.0}), std::range_error);
}

TEST_CASE("log_uncertainty_D closed values and differentiation oracle") {
  CHECK(log_uncertainty_D(4) == doctest::Approx(-kEuler - kLogPi).epsilon(1e-14));
  CHECK(log_uncertainty_D(2) ==
        doctest::Approx(-kEuler - 2.0 * kLn2 - kLogPi).epsilon(1e-14));
  // D = -(d/dalpha) ln C_alpha at 0, via the raw formula at +-h.
  const int n = 8;
  const auto lnC = [&](double a) {
    return a * kLogPi + 2.0 * (special::log_gamma((n - a) / 4.0) -
                               special::log_gamma((n + a) / 4.0));
  };
  const double fd = -oracles::central_difference(lnC, 0.0, 1e-4);
  CHECK(std::abs(log_uncertainty_D(n) - fd) < 1e-6);
}

TEST_CASE("stein_weiss_B values and consistency with pitt_C") {
  CHECK(stein_weiss_B({4, 2.0}) == doctest::Approx(4.0 * kPi * kPi).epsilon(1e-14));
  CHECK(stein_weiss_B({3, 1.0}) == doctest::Approx(kPi * kPi * kPi).epsilon(1e-14));
  const int n = 5;
  const double a = 2.5;
  const double via_C = pitt_C({n, a}) * std::pow(kPi, n / 2.0 - a) *
                       std::exp(special::log_gamma(a / 2.0) - special::log_gamma((n - a) / 2.0));
  CHECK(stein_weiss_B({n, a}) == doctest::Approx(via_C).epsilon(1e-12));
}

TEST_CASE("gradient_term strata") {
  CHECK(gradient_term({3, 2.0, 1}) == doctest::Approx(144.0 / 25.0).epsilon(1e-13));
  CHECK(gradient_term({6, 2.0, 0}) == doctest::Approx(4.0 / 9.0).epsilon(1e-13));
  CHECK(gradient_term({5, 1e-9, 0}) == doctest::Approx(1.0).epsilon(1e-7));
  // k = 0 parenthesis convention holds even where the denominator vanishes.
  CHECK(std::isfinite(gradient_term({4, 2.0, 0})));
  CHECK_THROWS_AS(gradient_term({4, 2.0, -1}), std::range_error);
}

TEST_CASE("pitt_gradient_D golden values") {
  const auto r3 = pitt_gradient_D({3, 2.0});
  CHECK(r3.d_alpha / (kPi * kPi) == doctest::Approx(144.0 / 25.0).epsilon(1e-13));
  CHECK(r3.argmax_k == 1);
  const auto r4 = pitt_gradient_D({4, 2.0});
  CHECK(r4.d_alpha / (kPi * kPi) == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
  CHECK(r4.argmax_k == 1);
  const auto r7 = pitt_gradient_D({7, 2.0});
  CHECK(r7.d_alpha == doctest::Approx(std::pow(4.0 * kPi / 7.0, 2)).epsilon(1e-13));
  CHECK(r7.argmax_k == 0);
  CHECK(r7.per_k_terms.size() == 51);
  // The report's invariants: the stored terms realize the max at argmax_k.
  double best = 0.0;
  for (const auto& [kk, term] : r7.per_k_terms) best = std::max(best, term);
  CHECK(r7.d_alpha == doctest::Approx(std::pow(kPi, 2.0) * best).epsilon(1e-15));
  CHECK(r7.per_k_terms[r7.argmax_k].second == best);
}

TEST_CASE("argmax lies in {0,1} for n >= 3") {
  for (int n = 3; n <= 12; ++n) {
    for (double a = 0.1; a < n; a += 0.23) {
      CHECK(pitt_gradient_D({n, a}).argmax_k <= 1);
    }
  }
}

TEST_CASE("n = 2: terms decrease in k and the closed form is the max") {
  for (double a : {0.25, 0.5, 1.0, 1.5, 1.9}) {
    const auto rep = pitt_gradient_D({2, a});
    CHECK(rep.argmax_k == 1);
    for (std::size_t k = 2; k < rep.per_k_terms.size(); ++k) {
      CHECK(rep.per_k_terms[k].second < rep.per_k_terms[k - 1].second);
    }
    CHECK(n2_gradient_D(a) == doctest::Approx(rep.d_alpha).epsilon(1e-12));
  }
  CHECK_THROWS_AS(n2_gradient_D(0.0), std::range_error);
  CHECK_THROWS_AS(n2_gradient_D(2.0), std::range_error);
  // alpha = 1: 5 pi [Gamma(5/4)/Gamma(7/4)]^2, the trace value times 2 pi.
  const double g54 = std::tgamma(1.25), g74 = std::tgamma(1.75);
  CHECK(n2_gradient_D(1.0) ==
        doctest::Approx(5.0 * kPi * (g54 / g74) * (g54 / g74)).epsilon(1e-13));
}

TEST_CASE("k = 0 stratum is below the unconstrained constant") {
  for (int n = 2; n <= 10; ++n) {
    for (double a = 0.1; a < n; a += 0.37) {
      CHECK(gradient_term({n, a, 0}) < pitt_C({n, a}) / std::pow(kPi, a));
    }
  }
}

TEST_CASE("trace_constant") {
  CHECK(trace_constant(3) == doctest::Approx(kPi / 4.0).epsilon(1e-15));
  CHECK(trace_constant(5) == doctest::Approx(kPi / 8.0).epsilon(1e-13));
  // n = 2 value from std::tgamma, an independent evaluation path.
  const double g54 = std::tgamma(1.25), g74 = std::tgamma(1.75);
  CHECK(trace_constant(2) == doctest::Approx(2.5 * (g54 / g74) * (g54 / g74)).epsilon(1e-13));
  for (int n = 2; n <= 10; ++n) {
    CHECK(trace_constant(n) ==
          doctest::Approx(pitt_gradient_D({n, 1.0}).d_alpha / (2.0 * kPi)).epsilon(1e-12));
  }
}

TEST_CASE("regime classification against the exhaustive argmax") {
  const auto a_reg = regime_classify({6, 5.0});
  CHECK(a_reg.label == Regime::A);
  CHECK(a_reg.argmax_k == 1);
  const auto b_reg = regime_classify({6, 2.0});
  CHECK(b_reg.label == Regime::B);
  CHECK(b_reg.argmax_k == 0);
  CHECK(regime_classify({3, 0.1}).argmax_k == 0);
  CHECK(regime_classify({3, 0.2}).argmax_k == 1);
  CHECK(regime_classify({3, 0.1}).label == Regime::Transition);
}

TEST_CASE("asymptotic_D") {
  CHECK(asymptotic_D({5, 2.0}) == doctest::Approx(pitt_gradient_D({5, 2.0}).d_alpha).epsilon(1e-13));
  CHECK(std::abs(pitt_gradient_D({1000, 1.0}).d_alpha / asymptotic_D({1000, 1.0}) - 1.0) < 0.01);
  CHECK(asymptotic_D({10, 1e-12}) == doctest::Approx(1.0));
}

TEST_CASE("log_gradient_E closed values and differentiation oracle") {
  CHECK(log_gradient_E(2) ==
        doctest::Approx(2.0 - kEuler - 2.0 * kLn2 - kLogPi - 1.0).epsilon(1e-13));
  CHECK(log_gradient_E(6) == doctest::Approx(1.0 - kEuler - kLogPi).epsilon(1e-13));
  // The k = 0 stratum of the gradient constant differentiated at alpha = 0
  // reproduces E + ln pi.
  const int n = 4;
  const auto ln_term = [&](double a) {
    return 2.0 * (special::log_gamma((n - a + 2.0) / 4.0) -
                  special::log_gamma((n + a + 2.0) / 4.0));
  };
  const double fd = -oracles::central_difference(ln_term, 0.0, 1e-4);
  CHECK(std::abs(log_gradient_E(n) + kLogPi - fd) < 1e-6);
}

TEST_CASE("kappa_L1_closed admissibility") {
  CHECK(kappa_L1_closed(4, 1.0, 1.0) > 0.0);
  CHECK(kappa_L1_closed(3, 0.2, 2.9) > 0.0);  // n + rho - sigma = 0.3, still fine
  CHECK_THROWS_AS(kappa_L1_closed(4, 1.0, 5.0), std::domain_error);  // n + rho - sigma = 0
  CHECK_THROWS_AS(kappa_L1_closed(4, 1.0, 9.0), std::domain_error);  // sigma past 2n
  // rho = sigma kills the fourth ratio; the remaining product at n = 4,
  // rho = sigma = 2 is Gamma(2)Gamma(1/2)^2 / (2 Gamma(3/2)^2) = 2.
  CHECK(kappa_L1_closed(4, 2.0, 2.0) == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("iterated_B equals its kernel-norm assembly") {
  const auto assembly = [](const IteratedParams& ip) {
    const double omega_cubed =
        std::pow(2.0 * std::exp(0.5 * ip.n * kLogPi - special::log_gamma(ip.n / 2.0)), 3);
    const double kappa = kappa_L1_closed(ip.n, ip.rho, ip.sigma);
    return omega_cubed * kappa * kappa * psi_L1_closed(ip.n, ip.alpha, 0);
  };
  int cases = 0;
  for (const int n : {3, 4, 6, 8}) {
    for (const double a : {0.5, 1.5, 2.5}) {
      for (const double r : {0.5, 1.2, 2.0}) {
        for (const double s : {0.8, 1.6}) {
          const IteratedParams ip{n, a, r, s};
          const double b = ip.beta();
          if (!(a < n && r < n && s < n && b > 0.0 && b < n)) continue;
          CHECK(iterated_B(ip) == doctest::Approx(assembly(ip)).epsilon(1e-12));
          ++cases;
        }
      }
    }
  }
  CHECK(cases > 30);
  CHECK_THROWS_AS(iterated_B({4, 3.5, 0.2, 3.8}), std::domain_error);  // beta > n
}

TEST_CASE("iterated_C composes from the single-layer constants at rho = sigma") {
  for (const IteratedParams ip : {IteratedParams{6, 2.0, 1.0, 1.0},
                                  IteratedParams{4, 1.0, 1.0, 1.0},
                                  IteratedParams{5, 2.5, 0.5, 0.5}}) {
    const double composed = weighted_sobolev_C(ip.n, ip.alpha) * weighted_sobolev_C(ip.n, ip.rho);
    CHECK(iterated_C(ip) == doctest::Approx(composed).epsilon(1e-12));
    const double sq = iterated_C(ip) * iterated_C(ip);
    CHECK(sq == doctest::Approx(composed * composed).epsilon(1e-10));
  }
  CHECK(weighted_sobolev_iterated_C(5, 2.0) ==
        doctest::Approx(std::pow(weighted_sobolev_C(5, 2.0), 2)).epsilon(1e-14));
}

TEST_CASE("stein_weiss_operator_C squares to the composition route") {
  // ||T||^2 = c * B_alpha where c is the Riesz composition constant of the
  // half-kernel with itself.
  for (const auto& [n, a] : std::vector<std::pair<int, double>>{{4, 2.0}, {3, 1.5}, {5, 2.5}}) {
    const double half = n - a / 2.0;
    const double c = std::exp(0.5 * n * kLogPi + 2.0 * special::log_gamma((n - half) / 2.0) +
                              special::log_gamma((2.0 * half - n) / 2.0) -
                              2.0 * special::log_gamma(half / 2.0) -
                              special::log_gamma((2.0 * n - 2.0 * half) / 2.0));
    const double t = stein_weiss_operator_C(n, a);
    CHECK(t * t == doctest::Approx(c * stein_weiss_B({n, a})).epsilon(1e-12));
  }
}

TEST_CASE("psi_L1_closed values") {
  CHECK(psi_L1_closed(4, 2.0, 0) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(psi_L1_closed(3, 1.0, 1) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK_THROWS_AS(psi_L1_closed(4, 2.0, 3), std::invalid_argument);
}

TEST_CASE("iterated_gradient_D recursion") {
  CHECK(iterated_gradient_D({5, 1.0, 0}) == doctest::Approx(pitt_C({5, 1.0})).epsilon(1e-15));
  // ell = 2 golden value at (5, 1): 20/36 * pi [G(1)/G(3/2)]^2.
  const double g32 = std::tgamma(1.5);
  CHECK(iterated_gradient_D({5, 1.0, 2}) ==
        doctest::Approx(kPi / (g32 * g32) * 20.0 / 36.0).epsilon(1e-13));
  for (int n = 3; n <= 9; ++n) {
    for (double a = 0.25; a + 2.0 < n; a += 0.375) {
      CHECK(iterated_gradient_D({n, a, 2}) == doctest::Approx(eq30_closed(n, a)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(iterated_gradient_D({5, 1.0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(iterated_gradient_D({5, 3.5, 2}), std::domain_error);
}

TEST_CASE("as-printed recursion coefficient misses by exactly pi^2") {
  // The subtraction implied by the ell = 2 closed form versus the
  // uncorrected coefficient alpha (n-1)/4.
  for (const auto& [n, a] : std::vector<std::pair<int, double>>{{5, 1.0}, {6, 2.5}, {8, 3.0}}) {
    const double delta_true = pitt_C({n, a}) - eq30_closed(n, a);
    const double delta_printed = a * (n - 1.0) / 4.0 * pitt_C({n + 2, a + 2.0});
    CHECK(delta_printed / delta_true == doctest::Approx(kPi * kPi).epsilon(1e-9));
  }
}

TEST_CASE("lambda diagnostics reproduce the proof anchors") {
  CHECK(lambda_diagnostics(LambdaKind::TraceW, 1.0) == doctest::Approx(-2.796).epsilon(4e-4));
  CHECK(std::abs(lambda_diagnostics(LambdaKind::N3Alpha, 0.2) - 0.0021145) < 1e-6);
  CHECK(std::abs(lambda_diagnostics(LambdaKind::N3Alpha, 0.1) - (-0.00103461)) < 1e-7);
  CHECK(std::abs(lambda_n3_deriv_at_zero() - (-0.0304815)) < 1e-6);
  CHECK_THROWS_AS(lambda_diagnostics(LambdaKind::TraceW, 0.5), std::domain_error);
  CHECK_THROWS_AS(lambda_diagnostics(LambdaKind::N3Alpha, 3.5), std::domain_error);
}

TEST_CASE("a-boundary diagnostic: zero at 2, increasing, limit ln(pi/2)") {
  CHECK(std::abs(lambda_diagnostics(LambdaKind::ABoundary, 2.0)) < 1e-14);
  double prev = -1e300;
  for (double w = 2.0; w <= 400.0; w *= 1.3) {
    const double v = lambda_diagnostics(LambdaKind::ABoundary, w);
    CHECK(v >= prev);
    prev = v;
  }
  CHECK(std::abs(lambda_diagnostics(LambdaKind::ABoundary, 4000.0) - std::log(kPi / 2.0)) < 1e-3);
}

TEST_CASE("D_2 is exactly (4 pi / n)^2 for n >= 5") {
  for (int n = 5; n <= 12; ++n) {
    const auto rep = pitt_gradient_D({n, 2.0});
    CHECK(rep.argmax_k == 0);
    CHECK(rep.d_alpha == doctest::Approx(16.0 * kPi * kPi / (n * n)).epsilon(1e-12));
  }
}
