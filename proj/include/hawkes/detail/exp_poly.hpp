#ifndef HAWKES_DETAIL_EXP_POLY_HPP
#define HAWKES_DETAIL_EXP_POLY_HPP

#include <cmath>
#include <cstdint>
#include <cstring>

namespace hawkes::simd::detail {

// One fixed exp implementation shared by the scalar and vector kernel
// variants. Every step below maps 1:1 onto a packed-double instruction, so
// the AVX2 mirror in simd_avx2.cpp reproduces these bits exactly. Accuracy
// is ~1 ulp over the clamped range, which also makes kernel evaluation
// reproducible across libm implementations.
inline constexpr double kExpClampLo = -708.0;
inline constexpr double kExpClampHi = 709.0;
inline constexpr double kLog2E = 1.4426950408889634074;
inline constexpr double kLn2Hi = 6.93145751953125e-1;
inline constexpr double kLn2Lo = 1.42860682030941723212e-6;

// 1/k! for k = 12 .. 2 (Horner order), then the linear/constant terms are
// added explicitly.
inline constexpr double kExpCoef[] = {
    2.08767569878680989792e-9,   // 1/12!
    2.50521083854417187751e-8,   // 1/11!
    2.75573192239858906526e-7,   // 1/10!
    2.75573192239858925110e-6,   // 1/9!
    2.48015873015873015873e-5,   // 1/8!
    1.98412698412698412526e-4,   // 1/7!
    1.38888888888888894068e-3,   // 1/6!
    8.33333333333333321769e-3,   // 1/5!
    4.16666666666666685170e-2,   // 1/4!
    1.66666666666666657415e-1,   // 1/3!
    5.00000000000000000000e-1,   // 1/2!
};

inline double exp_portable(double x) {
  x = x < kExpClampLo ? kExpClampLo : x;
  x = x > kExpClampHi ? kExpClampHi : x;
  const double n = std::nearbyint(x * kLog2E);
  const double r = (x - n * kLn2Hi) - n * kLn2Lo;
  double p = kExpCoef[0];
  for (int i = 1; i < 11; ++i) p = p * r + kExpCoef[i];
  p = p * r + 1.0;
  p = p * r + 1.0;
  const std::int64_t biased = static_cast<std::int64_t>(n) + 1023;
  const std::uint64_t bits = static_cast<std::uint64_t>(biased) << 52;
  double scale;
  std::memcpy(&scale, &bits, sizeof scale);
  return p * scale;
}

}  // namespace hawkes::simd::detail

#endif  // HAWKES_DETAIL_EXP_POLY_HPP
