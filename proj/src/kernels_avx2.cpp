// AVX2 variants of the bitset kernels. Tails (< 4 words) fall back to plain
// word loops. Popcount uses the vpshufb nibble-table trick; AVX2 has no
// vector popcount instruction.

#include "symrem/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>

namespace symrem::kernels::avx2 {

namespace {

__attribute__((target("avx2"))) inline __m256i popcount256(__m256i v) {
    const __m256i nibble_counts =
        _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(nibble_counts, lo),
                                  _mm256_shuffle_epi8(nibble_counts, hi));
    // horizontal sum of bytes into four 64-bit lanes
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

__attribute__((target("avx2"))) inline std::uint64_t hsum64(__m256i v) {
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    __m128i s = _mm_add_epi64(lo, hi);
    return static_cast<std::uint64_t>(_mm_extract_epi64(s, 0)) +
           static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

__attribute__((target("avx2"))) bool and_into(std::uint64_t* dst, const std::uint64_t* a,
                                              const std::uint64_t* b, std::size_t nwords) {
    std::size_t i = 0;
    __m256i any = _mm256_setzero_si256();
    for (; i + 4 <= nwords; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i vd = _mm256_and_si256(va, vb);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), vd);
        any = _mm256_or_si256(any, vd);
    }
    std::uint64_t tail_any = 0;
    for (; i < nwords; ++i) {
        dst[i] = a[i] & b[i];
        tail_any |= dst[i];
    }
    return tail_any != 0 || !static_cast<bool>(_mm256_testz_si256(any, any));
}

__attribute__((target("avx2"))) std::uint64_t popcount(const std::uint64_t* a,
                                                       std::size_t nwords) {
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= nwords; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        acc = _mm256_add_epi64(acc, popcount256(va));
    }
    std::uint64_t total = hsum64(acc);
    for (; i < nwords; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i]));
    return total;
}

__attribute__((target("avx2"))) std::uint64_t and_popcount(const std::uint64_t* a,
                                                           const std::uint64_t* b,
                                                           std::size_t nwords) {
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= nwords; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount256(_mm256_and_si256(va, vb)));
    }
    std::uint64_t total = hsum64(acc);
    for (; i < nwords; ++i)
        total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return total;
}

__attribute__((target("avx2"))) bool and_any(const std::uint64_t* a, const std::uint64_t* b,
                                             std::size_t nwords) {
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        if (!_mm256_testz_si256(va, vb)) return true;
    }
    for (; i < nwords; ++i)
        if ((a[i] & b[i]) != 0) return true;
    return false;
}

__attribute__((target("avx2"))) bool equal(const std::uint64_t* a, const std::uint64_t* b,
                                           std::size_t nwords) {
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i x = _mm256_xor_si256(va, vb);
        if (!_mm256_testz_si256(x, x)) return false;
    }
    for (; i < nwords; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

__attribute__((target("avx2"))) void or_into(std::uint64_t* dst, const std::uint64_t* a,
                                             std::size_t nwords) {
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i vd = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(vd, va));
    }
    for (; i < nwords; ++i) dst[i] |= a[i];
}

} // namespace

const Ops ops = {and_into, popcount, and_popcount, and_any, equal, or_into, "avx2"};

} // namespace symrem::kernels::avx2

#endif // x86_64
