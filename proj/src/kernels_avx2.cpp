// AVX2 kernel variants. This translation unit is the only one compiled with
// -mavx2; it is linked in unconditionally on x86 builds and selected at
// runtime, so the rest of the binary stays runnable on any x86-64.

#include <immintrin.h>

#include <cstring>

#include "schur/kernels.hpp"

namespace schur::kern {

namespace {

// Per-64-bit-lane popcount via the nibble-LUT trick (pshufb) + psadbw.
inline __m256i popcount_epi64(__m256i x) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(x, low);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi64(x, 4), low);
  __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

// Four cyclic rotations of d (within v bits) at once. Lane shifts >= 64
// saturate to zero under sllv/srlv, so z = 0 and z = v need no special case.
inline __m256i rotl4(__m256i dv, __m256i zv, int v) {
  const __m256i vv = _mm256_set1_epi64x(v);
  __m256i left = _mm256_sllv_epi64(dv, zv);
  __m256i right = _mm256_srlv_epi64(dv, _mm256_sub_epi64(vv, zv));
  __m256i lomask = _mm256_set1_epi64x(static_cast<long long>(all_mask(v)));
  return _mm256_and_si256(_mm256_or_si256(left, right), lomask);
}

void diff_counts_avx2(Mask d, int v, std::uint16_t* out) {
  const __m256i dv = _mm256_set1_epi64x(static_cast<long long>(d));
  alignas(32) long long cnts[4];
  for (int z = 0; z < v; z += 4) {
    __m256i zv = _mm256_setr_epi64x(z, z + 1, z + 2, z + 3);
    __m256i hits = _mm256_and_si256(dv, rotl4(dv, zv, v));
    _mm256_store_si256(reinterpret_cast<__m256i*>(cnts), popcount_epi64(hits));
    for (int k = 0; k < 4 && z + k < v; ++k)
      out[z + k] = static_cast<std::uint16_t>(cnts[k]);
  }
}

bool diff_counts_flat_avx2(Mask d, int v, int lambda) {
  const __m256i dv = _mm256_set1_epi64x(static_cast<long long>(d));
  const __m256i want = _mm256_set1_epi64x(lambda);
  for (int z = 1; z < v; z += 4) {
    __m256i zv = _mm256_setr_epi64x(z, z + 1, z + 2, z + 3);
    __m256i hits = _mm256_and_si256(dv, rotl4(dv, zv, v));
    __m256i eq = _mm256_cmpeq_epi64(popcount_epi64(hits), want);
    unsigned mask = static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(eq)));
    int lanes = v - z < 4 ? v - z : 4;
    if ((mask & ((1u << lanes) - 1)) != (1u << lanes) - 1u) return false;
  }
  return true;
}

void color_hist_avx2(const std::uint8_t* row, const std::uint8_t* active,
                     int n, int ncolors, std::uint16_t* hist) {
  if (n < 32 || n > 256) {  // below one lane width (or past the pad buffer)
    for (int i = 0; i < n; ++i)
      if (active[i]) ++hist[row[i]];
    return;
  }
  // Pad into locals so full-width loads are in-bounds, then count each color
  // with cmpeq+movemask. Inactive positions get a sentinel no color matches.
  alignas(32) std::uint8_t buf[256];
  const int padded = (n + 31) & ~31;
  std::memcpy(buf, row, static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    if (!active[i]) buf[i] = 0xff;
  std::memset(buf + n, 0xff, static_cast<size_t>(padded - n));
  for (int c = 0; c < ncolors; ++c) {
    const __m256i target = _mm256_set1_epi8(static_cast<char>(c));
    int cnt = 0;
    for (int i = 0; i < padded; i += 32) {
      __m256i bytes = _mm256_load_si256(reinterpret_cast<const __m256i*>(buf + i));
      unsigned m = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(bytes, target)));
      cnt += std::popcount(m);
    }
    hist[c] = static_cast<std::uint16_t>(hist[c] + cnt);
  }
}

const Backend kAvx2{"avx2", diff_counts_avx2, diff_counts_flat_avx2, color_hist_avx2};

}  // namespace

const Backend* avx2() {
  static const Backend* b = __builtin_cpu_supports("avx2") ? &kAvx2 : nullptr;
  return b;
}

}  // namespace schur::kern
