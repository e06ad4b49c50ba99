// AVX2 variants of the arithmetic kernels. Each intrinsic mirrors one step of
// the scalar reference (same operations, same order, no fused contraction),
// so outputs are bit-identical to the scalar path; the equivalence tests
// assert that. Tails shorter than one vector fall through to the scalar code.
#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "hawkes/detail/exp_poly.hpp"
#include "hawkes/simd.hpp"

namespace hawkes::simd::detail {

namespace {

inline __m256d exp_pd(__m256d x) {
  const __m256d lo = _mm256_set1_pd(kExpClampLo);
  const __m256d hi = _mm256_set1_pd(kExpClampHi);
  x = _mm256_max_pd(x, lo);
  x = _mm256_min_pd(x, hi);
  const __m256d n =
      _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kLog2E)),
                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_sub_pd(x, _mm256_mul_pd(n, _mm256_set1_pd(kLn2Hi)));
  r = _mm256_sub_pd(r, _mm256_mul_pd(n, _mm256_set1_pd(kLn2Lo)));
  __m256d p = _mm256_set1_pd(kExpCoef[0]);
  for (int i = 1; i < 11; ++i)
    p = _mm256_add_pd(_mm256_mul_pd(p, r), _mm256_set1_pd(kExpCoef[i]));
  const __m256d one = _mm256_set1_pd(1.0);
  p = _mm256_add_pd(_mm256_mul_pd(p, r), one);
  p = _mm256_add_pd(_mm256_mul_pd(p, r), one);
  const __m128i ni = _mm256_cvtpd_epi32(n);
  const __m256i biased =
      _mm256_add_epi64(_mm256_cvtepi32_epi64(ni), _mm256_set1_epi64x(1023));
  const __m256d scale = _mm256_castsi256_pd(_mm256_slli_epi64(biased, 52));
  return _mm256_mul_pd(p, scale);
}

}  // namespace

void gamma_decay_terms_avx2(const double* times, std::size_t n, double t,
                            double coef, double neg_gamma, double* out) {
  const __m256d tv = _mm256_set1_pd(t);
  const __m256d cv = _mm256_set1_pd(coef);
  const __m256d gv = _mm256_set1_pd(neg_gamma);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(tv, _mm256_loadu_pd(times + i));
    const __m256d e = exp_pd(_mm256_mul_pd(gv, d));
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_mul_pd(cv, d), e));
  }
  if (i < n) gamma_decay_terms_scalar(times + i, n - i, t, coef, neg_gamma, out + i);
}

void epanechnikov_terms_avx2(const double* delta, std::size_t n, double d,
                             double inv_h, double* out) {
  const __m256d dv = _mm256_set1_pd(d);
  const __m256d hv = _mm256_set1_pd(inv_h);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d c = _mm256_set1_pd(0.75);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_mul_pd(_mm256_add_pd(dv, _mm256_loadu_pd(delta + i)), hv);
    const __m256d v = _mm256_mul_pd(c, _mm256_sub_pd(one, _mm256_mul_pd(x, x)));
    const __m256d mask = _mm256_cmp_pd(v, zero, _CMP_GT_OQ);
    _mm256_storeu_pd(out + i, _mm256_and_pd(v, mask));
  }
  if (i < n) epanechnikov_terms_scalar(delta + i, n - i, d, inv_h, out + i);
}

}  // namespace hawkes::simd::detail

#endif  // x86_64
