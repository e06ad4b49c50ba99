#include "hawkes/detail/exp_poly.hpp"
#include "hawkes/simd.hpp"

namespace hawkes::simd {

double exp_portable(double x) { return detail::exp_portable(x); }

double sum_ordered(const double* v, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += v[i];
  return s;
}

namespace detail {

void gamma_decay_terms_scalar(const double* times, std::size_t n, double t,
                              double coef, double neg_gamma, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double d = t - times[i];
    const double e = exp_portable(neg_gamma * d);
    out[i] = coef * d * e;
  }
}

void epanechnikov_terms_scalar(const double* delta, std::size_t n, double d,
                               double inv_h, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double x = (d + delta[i]) * inv_h;
    const double v = 0.75 * (1.0 - x * x);
    out[i] = v > 0.0 ? v : 0.0;
  }
}

}  // namespace detail

}  // namespace hawkes::simd
