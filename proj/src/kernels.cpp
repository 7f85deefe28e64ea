#include "schur/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace schur::kern {

namespace {

void diff_counts_scalar(Mask d, int v, std::uint16_t* out) {
  for (int z = 0; z < v; ++z)
    out[z] = static_cast<std::uint16_t>(popcount(d & rotl_v(d, z, v)));
}

bool diff_counts_flat_scalar(Mask d, int v, int lambda) {
  for (int z = 1; z < v; ++z)
    if (popcount(d & rotl_v(d, z, v)) != lambda) return false;
  return true;
}

void color_hist_scalar(const std::uint8_t* row, const std::uint8_t* active,
                       int n, int /*ncolors*/, std::uint16_t* hist) {
  for (int i = 0; i < n; ++i)
    if (active[i]) ++hist[row[i]];
}

const Backend kScalar{"scalar", diff_counts_scalar, diff_counts_flat_scalar,
                      color_hist_scalar};

const Backend* pick() {
  const char* force = std::getenv("SCHUR_KERNELS");
  if (force != nullptr) {
    if (std::strcmp(force, "scalar") == 0) return &kScalar;
    if (std::strcmp(force, "avx2") == 0) {
      const Backend* b = avx2();
      if (b == nullptr) throw Error("SCHUR_KERNELS=avx2 but AVX2 is unavailable");
      return b;
    }
    throw Error(std::string("unknown SCHUR_KERNELS backend: ") + force);
  }
  if (const Backend* b = avx2()) return b;
  return &kScalar;
}

}  // namespace

const Backend& scalar() { return kScalar; }

#if !defined(SCHUR_HAVE_AVX2_TU)
const Backend* avx2() { return nullptr; }
#endif

const Backend& active() {
  static const Backend* chosen = pick();
  return *chosen;
}

}  // namespace schur::kern
