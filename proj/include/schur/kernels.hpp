#pragma once

// Counting kernels with runtime-dispatched SIMD variants.
//
// Two loops dominate the whole library: rotate+popcount difference counting
// over Z_v bitmasks (difference-set searches) and per-vertex color histograms
// (color-graph refinement in the schurity engine). Each has a scalar
// reference implementation and an AVX2 variant; the backend is picked once at
// startup from cpuid and can be forced with SCHUR_KERNELS=scalar|avx2.
// Everything else in the library is branchy search code and stays scalar.

#include <cstdint>

#include "schur/common.hpp"

namespace schur::kern {

struct Backend {
  const char* name;

  // out[z] = |D ∩ (D + z)| for z = 0..v-1, cyclic shift within v bits.
  // D must fit in the low v bits, 1 <= v <= 64.
  void (*diff_counts)(Mask d, int v, std::uint16_t* out);

  // True iff |D ∩ (D + z)| == lambda for every z = 1..v-1.
  bool (*diff_counts_flat)(Mask d, int v, int lambda);

  // hist[c] += number of i in [0, n) with row[i] == c and active[i] != 0.
  // Caller zeroes hist; ncolors bounds the color values present in row.
  void (*color_hist)(const std::uint8_t* row, const std::uint8_t* active,
                     int n, int ncolors, std::uint16_t* hist);
};

// Active backend (set on first use; honors SCHUR_KERNELS env override).
const Backend& active();

// Named backends for tests. scalar() always works; avx2() is null when the
// binary or CPU lacks AVX2 support.
const Backend& scalar();
const Backend* avx2();

// Convenience forwarders through the active backend.
inline void diff_counts(Mask d, int v, std::uint16_t* out) {
  active().diff_counts(d, v, out);
}
inline bool diff_counts_flat(Mask d, int v, int lambda) {
  return active().diff_counts_flat(d, v, lambda);
}
inline void color_hist(const std::uint8_t* row, const std::uint8_t* active_v,
                       int n, int ncolors, std::uint16_t* hist) {
  active().color_hist(row, active_v, n, ncolors, hist);
}

// Cyclic left-rotate of the low v bits: element i of d moves to (i+z) mod v.
inline Mask rotl_v(Mask d, int z, int v) {
  if (z == 0) return d;
  const Mask lo = all_mask(v);
  return ((d << z) | (d >> (v - z))) & lo;
}

}  // namespace schur::kern
