#include "leflab/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#endif

namespace leflab::kernels {

void modp_axpy_scalar(std::uint32_t* y, const std::uint32_t* x,
                      std::uint32_t a, std::size_t n, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i)
    y[i] = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * x[i] + y[i]) % p);
}

#if defined(__x86_64__) || defined(_M_X64)

namespace {

// -p^{-1} mod 2^32 by Newton iteration; p odd.
std::uint32_t mont_pinv(std::uint32_t p) {
  std::uint32_t inv = p; // correct mod 2^3
  for (int it = 0; it < 4; ++it) inv *= 2u - p * inv;
  return ~inv + 1u; // negate
}

} // namespace

// Montgomery form of the scalar keeps the per-lane work at one 32x32->64
// multiply plus one REDC; lanes hold one value per 64 bits.
__attribute__((target("avx2")))
void modp_axpy_avx2(std::uint32_t* y, const std::uint32_t* x,
                    std::uint32_t a, std::size_t n, std::uint32_t p) {
  const std::uint32_t a_mont = static_cast<std::uint32_t>(
      (static_cast<unsigned __int128>(a) << 32) % p);
  const std::uint32_t pinv = mont_pinv(p);

  const __m256i va = _mm256_set1_epi64x(a_mont);
  const __m256i vpinv = _mm256_set1_epi64x(pinv);
  const __m256i vp = _mm256_set1_epi64x(p);
  const __m256i lo32 = _mm256_set1_epi64x(0xffffffffll);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i vx = _mm256_cvtepu32_epi64(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i)));
    __m256i vy = _mm256_cvtepu32_epi64(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(y + i)));

    // REDC(a_mont * x) = a * x mod p.
    __m256i t = _mm256_mul_epu32(va, vx);
    __m256i m = _mm256_and_si256(_mm256_mul_epu32(t, vpinv), lo32);
    __m256i t2 = _mm256_add_epi64(t, _mm256_mul_epu32(m, vp));
    __m256i u = _mm256_srli_epi64(t2, 32);
    __m256i ge = _mm256_cmpgt_epi64(vp, u); // u < p ?
    u = _mm256_sub_epi64(u, _mm256_andnot_si256(ge, vp));

    __m256i r = _mm256_add_epi64(u, vy);
    ge = _mm256_cmpgt_epi64(vp, r);
    r = _mm256_sub_epi64(r, _mm256_andnot_si256(ge, vp));

    // Even 32-bit lanes of r carry the results.
    __m256i packed = _mm256_permutevar8x32_epi32(
        r, _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(y + i),
                     _mm256_castsi256_si128(packed));
  }
  if (i < n) modp_axpy_scalar(y + i, x + i, a, n - i, p);
}

#endif // x86_64

ModpAxpyFn selected_modp_axpy() {
  static const ModpAxpyFn fn = [] {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) return &modp_axpy_avx2;
#endif
    return &modp_axpy_scalar;
  }();
  return fn;
}

const char* active_kernel_name() {
#if defined(__x86_64__) || defined(_M_X64)
  if (selected_modp_axpy() == &modp_axpy_avx2) return "avx2";
#endif
  return "scalar";
}

} // namespace leflab::kernels
