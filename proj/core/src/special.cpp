#include "steinweiss/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "steinweiss/quadrature.hpp"

namespace steinweiss::special {

PositiveReal::PositiveReal(double value) : value_(value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::domain_error("PositiveReal: argument must be finite and > 0, got " +
                            std::to_string(value));
  }
}

namespace {

// Lanczos g = 7, 9-term coefficient set.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
};

double log_gamma_lanczos(double x) {
  // Valid for x >= 0.5; callers shift smaller arguments.
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x - 1.0 + i);
  const double t = x + kLanczosG - 0.5;
  constexpr double half_log_two_pi = 0.91893853320467274178;
  return half_log_two_pi + (x - 0.5) * std::log(t) - t + std::log(acc);
}

// B_{2k} / (2k), k = 1..8.
constexpr double kDigammaSeries[8] = {
    1.0 / 12.0,   -1.0 / 120.0,      1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0,  -691.0 / 32760.0,  1.0 / 12.0,  -3617.0 / 8160.0,
};

}  // namespace

double log_gamma(PositiveReal x) {
  const double v = x.value();
  if (v < 0.5) return log_gamma_lanczos(v + 1.0) - std::log(v);
  return log_gamma_lanczos(v);
}

double digamma(PositiveReal x) {
  double v = x.value();
  double shift = 0.0;
  while (v < 8.0) {
    shift -= 1.0 / v;
    v += 1.0;
  }
  const double z = 1.0 / (v * v);
  double series = 0.0;
  double zp = z;
  for (const double c : kDigammaSeries) {
    series += c * zp;
    zp *= z;
  }
  return shift + std::log(v) - 0.5 / v - series;
}

double gamma_ratio(PositiveReal x, PositiveReal y, double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw std::domain_error("gamma_ratio: beta must be finite and >= 0");
  }
  return std::exp(log_gamma(PositiveReal(x.value() + beta)) -
                  log_gamma(PositiveReal(y.value() + beta)));
}

double digamma_half_gap(double w) {
  if (!(w > 1.0) || !std::isfinite(w)) {
    throw std::domain_error("digamma_half_gap: requires w > 1");
  }
  return digamma(PositiveReal((w + 1.0) / 2.0)) - digamma(PositiveReal(w / 2.0));
}

double digamma_half_gap_integral(double w) {
  if (!(w > 1.0) || !std::isfinite(w)) {
    throw std::domain_error("digamma_half_gap_integral: requires w > 1");
  }
  const auto f = [w](double t) { return std::exp(-w * t) / (1.0 + std::exp(-t)); };
  // Panels of width 4/w; the integrand loses a factor e^-4 per panel.
  double total = 0.0;
  const double width = 4.0 / w;
  for (int j = 0; j < 16; ++j) {
    total += quadrature::integrate(f, j * width, (j + 1) * width, 1e-14, 0.0).value;
  }
  return 2.0 * total;
}

}  // namespace steinweiss::special
