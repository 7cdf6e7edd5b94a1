#if defined(CYCLOTOME_HAVE_AVX2)

#include <immintrin.h>

#include "cyclotome/kernels.hpp"

namespace cyclotome::kernels {
namespace {

// Unsigned conditional subtract: v in [0, 2n) -> v mod n.  If v < n then
// v - n wraps around to a huge value and min picks v; otherwise it picks v - n.
inline __m256i mod_reduce(__m256i v, __m256i n) {
    return _mm256_min_epu32(v, _mm256_sub_epi32(v, n));
}

} // namespace

void exp_map_avx2(std::uint32_t start, std::uint32_t step, std::uint32_t n, std::uint32_t* out,
                  std::size_t count) {
    if (count < 16) {
        exp_map_scalar(start, step, n, out, count);
        return;
    }
    alignas(32) std::uint32_t init[8];
    std::uint32_t v = start;
    for (int i = 0; i < 8; ++i) {
        init[i] = v;
        v += step;
        if (v >= n) v -= n;
    }
    __m256i vec = _mm256_load_si256(reinterpret_cast<const __m256i*>(init));
    const __m256i nn = _mm256_set1_epi32(static_cast<int>(n));
    const __m256i stride =
        _mm256_set1_epi32(static_cast<int>(static_cast<std::uint64_t>(step) * 8 % n));
    std::size_t i = 0;
    const std::size_t vec_end = count & ~static_cast<std::size_t>(7);
    for (; i < vec_end; i += 8) {
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), vec);
        vec = mod_reduce(_mm256_add_epi32(vec, stride), nn);
    }
    if (i < count) {
        std::uint32_t tail_start = static_cast<std::uint32_t>(
            (start + static_cast<std::uint64_t>(step) % n * i) % n);
        exp_map_scalar(tail_start, step, n, out + i, count - i);
    }
}

void gather_avx2(const std::uint32_t* table, const std::uint32_t* idx, std::uint32_t* out,
                 std::size_t count) {
    std::size_t i = 0;
    const std::size_t vec_end = count & ~static_cast<std::size_t>(7);
    for (; i < vec_end; i += 8) {
        __m256i iv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(idx + i));
        __m256i g = _mm256_i32gather_epi32(reinterpret_cast<const int*>(table), iv, 4);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), g);
    }
    gather_scalar(table, idx + i, out + i, count - i);
}

void add_base_const_avx2(const std::uint32_t* keys, std::uint32_t c, std::uint32_t p,
                         std::uint32_t* out, std::size_t count) {
    // digit0 = k mod p via multiply-shift: floor(k * M >> 33) = floor(k / p),
    // exact for k*p <= 2^33 — covered by keys < 2^22, p < 2^11.  M fits in a
    // 32-bit lane for p >= 3.
    const std::uint64_t M = ((static_cast<std::uint64_t>(1) << 33) + p - 1) / p;
    const __m256i mv = _mm256_set1_epi64x(static_cast<long long>(M));
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
    std::size_t i = 0;
    const std::size_t vec_end = count & ~static_cast<std::size_t>(7);
    for (; i < vec_end; i += 8) {
        __m256i k = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(keys + i));
        __m256i qe = _mm256_srli_epi64(_mm256_mul_epu32(k, mv), 33);
        __m256i qo = _mm256_srli_epi64(_mm256_mul_epu32(_mm256_srli_epi64(k, 32), mv), 33);
        __m256i q = _mm256_blend_epi32(qe, _mm256_slli_epi64(qo, 32), 0xAA);
        __m256i d0 = _mm256_sub_epi32(k, _mm256_mullo_epi32(q, pv));
        __m256i nd = mod_reduce(_mm256_add_epi32(d0, cv), pv);
        __m256i res = _mm256_add_epi32(_mm256_sub_epi32(k, d0), nd);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), res);
    }
    add_base_const_scalar(keys + i, c, p, out + i, count - i);
}

} // namespace cyclotome::kernels

#endif // CYCLOTOME_HAVE_AVX2
