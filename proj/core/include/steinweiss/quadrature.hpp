#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace steinweiss::quadrature {

// Nodes and weights on [-1, 1].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Jacobi rule for the weight (1-x)^a (1+x)^b, a, b > -1, built by
// Golub-Welsch.  Rules are cached and immutable after construction, so
// references stay valid and are shareable across threads.
const Rule& gauss_jacobi(double a, double b, int n);
const Rule& gauss_legendre(int n);

struct Result {
  double value = 0.0;
  double est_error = 0.0;
  std::int64_t evaluations = 0;

  Result& operator+=(const Result& o) {
    value += o.value;
    est_error += o.est_error;
    evaluations += o.evaluations;
    return *this;
  }
};

// int_a^b f, Gauss-Legendre with order doubling (8..1024 nodes) until the
// difference of nested estimates meets max(rel_tol*|I|, abs_floor).  The
// last nested difference is returned as est_error; no exception on
// non-convergence, callers inspect est_error where it matters.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_floor = 0.0);

// int_0^b f(w) w^lam dw for f smooth on [0, b]; Gauss-Jacobi absorbs the
// algebraic endpoint factor.
Result integrate_left_algebraic(const std::function<double(double)>& f, double lam,
                                double b, double rel_tol);

// int_0^b f(u) du where f has an integrable algebraic (u^{s-1}, s > 0) or
// logarithmic endpoint singularity at 0: dyadic panels toward 0 with an
// empirical-ratio tail bound.
Result integrate_to_zero(const std::function<double(double)>& f, double b,
                         double rel_tol);

// int_0^inf f(u) du for f as above near 0 and (super)exponentially decaying;
// unit panels upward from b0.
Result integrate_halfline(const std::function<double(double)>& f, double rel_tol);

}  // namespace steinweiss::quadrature
