#ifndef HAWKES_SIMD_HPP
#define HAWKES_SIMD_HPP

#include <cstddef>
#include <string>

namespace hawkes::simd {

enum class Isa { scalar, avx2 };

/// Kernel variant in use. Detected once at startup (AVX2 when the CPU has it,
/// scalar otherwise); the HAWKES_SIMD environment variable ("scalar", "avx2",
/// "auto") or set_isa() overrides.
Isa active_isa();
void set_isa(Isa isa);
std::string isa_name(Isa isa);

/// out[i] = coef * d_i * exp(neg_gamma * d_i) with d_i = t - times[i].
/// The gamma-shape transfer-kernel terms for a slice of past event times.
/// All variants produce bit-identical outputs; summation is left to the
/// caller so accumulation order never depends on the variant.
void gamma_decay_terms(const double* times, std::size_t n, double t, double coef,
                       double neg_gamma, double* out);

/// out[i] = max(0, 0.75*(1 - x_i^2)) with x_i = (d + delta[i]) * inv_h.
/// Epanechnikov smoothing-kernel values over a slice of the lag grid.
void epanechnikov_terms(const double* delta, std::size_t n, double d, double inv_h,
                        double* out);

/// Plain left-to-right sum; the one accumulation order used everywhere.
double sum_ordered(const double* v, std::size_t n);

/// The exp used by every kernel evaluation (scalar mirror of the packed one).
double exp_portable(double x);

namespace detail {
void gamma_decay_terms_scalar(const double* times, std::size_t n, double t,
                              double coef, double neg_gamma, double* out);
void epanechnikov_terms_scalar(const double* delta, std::size_t n, double d,
                               double inv_h, double* out);
#if defined(__x86_64__) || defined(_M_X64)
void gamma_decay_terms_avx2(const double* times, std::size_t n, double t,
                            double coef, double neg_gamma, double* out);
void epanechnikov_terms_avx2(const double* delta, std::size_t n, double d,
                             double inv_h, double* out);
#endif
}  // namespace detail

}  // namespace hawkes::simd

#endif  // HAWKES_SIMD_HPP
