#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "schur/kernels.hpp"

using namespace schur;

namespace {

// Reference implementation straight off the definition.
void naive_diff_counts(Mask d, int v, std::uint16_t* out) {
  for (int z = 0; z < v; ++z) {
    int c = 0;
    for (int x = 0; x < v; ++x)
      if (has_bit(d, x) && has_bit(d, (x - z + v) % v)) ++c;
    out[z] = static_cast<std::uint16_t>(c);
  }
}

void naive_color_hist(const std::uint8_t* row, const std::uint8_t* active, int n, int ncolors,
                      std::uint16_t* hist) {
  for (int i = 0; i < n; ++i)
    if (active[i]) ++hist[row[i]];
  (void)ncolors;
}

Mask random_mask(std::mt19937_64& rng, int v, int density_percent) {
  Mask m = 0;
  for (int i = 0; i < v; ++i)
    if (static_cast<int>(rng() % 100) < density_percent) m |= bit(i);
  return m;
}

}  // namespace

TEST_CASE("scalar diff_counts matches the definition") {
  std::mt19937_64 rng(12345);
  std::uint16_t got[64], want[64];
  for (int v = 1; v <= 64; ++v) {
    for (int density : {5, 30, 50, 80}) {
      Mask d = random_mask(rng, v, density);
      kern::scalar().diff_counts(d, v, got);
      naive_diff_counts(d, v, want);
      for (int z = 0; z < v; ++z) {
        CAPTURE(v);
        CAPTURE(z);
        REQUIRE(got[z] == want[z]);
      }
      CHECK(got[0] == popcount(d));
    }
  }
}

TEST_CASE("diff_counts_flat agrees with the full count vector") {
  std::mt19937_64 rng(999);
  std::uint16_t counts[64];
  int flats = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    int v = 1 + static_cast<int>(rng() % 64);
    Mask d = random_mask(rng, v, 10 + static_cast<int>(rng() % 80));
    kern::scalar().diff_counts(d, v, counts);
    for (int lambda : {0, 1, 2, static_cast<int>(counts[v > 1 ? 1 : 0])}) {
      bool want = true;
      for (int z = 1; z < v; ++z)
        if (counts[z] != lambda) want = false;
      bool got = kern::scalar().diff_counts_flat(d, v, lambda);
      REQUIRE(got == want);
      if (want) ++flats;
    }
  }
  CHECK(flats > 0);  // the lambda = counts[1] probes must hit some flats
}

TEST_CASE("known difference sets have flat counts") {
  // Singer (13,4,1) and Paley (11,5,2).
  Mask singer = bit(0) | bit(1) | bit(3) | bit(9);
  Mask paley11 = bit(1) | bit(3) | bit(4) | bit(5) | bit(9);
  CHECK(kern::diff_counts_flat(singer, 13, 1));
  CHECK_FALSE(kern::diff_counts_flat(singer, 13, 2));
  CHECK(kern::diff_counts_flat(paley11, 11, 2));
}

TEST_CASE("scalar color_hist matches the definition") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 80);
    int ncolors = 1 + static_cast<int>(rng() % 32);
    std::vector<std::uint8_t> row(n), active(n);
    for (int i = 0; i < n; ++i) {
      row[i] = static_cast<std::uint8_t>(rng() % ncolors);
      active[i] = static_cast<std::uint8_t>(rng() % 2);
    }
    std::vector<std::uint16_t> got(ncolors, 0), want(ncolors, 0);
    kern::scalar().color_hist(row.data(), active.data(), n, ncolors, got.data());
    naive_color_hist(row.data(), active.data(), n, ncolors, want.data());
    REQUIRE(got == want);
  }
}

TEST_CASE("avx2 backend agrees with scalar exactly") {
  const kern::Backend* simd = kern::avx2();
  if (!simd) return;  // binary or CPU without AVX2: vacuous here

  std::mt19937_64 rng(31337);
  std::uint16_t a[64], b[64];
  for (int trial = 0; trial < 20000; ++trial) {
    int v = 1 + static_cast<int>(rng() % 64);
    Mask d = random_mask(rng, v, static_cast<int>(rng() % 101));
    kern::scalar().diff_counts(d, v, a);
    simd->diff_counts(d, v, b);
    for (int z = 0; z < v; ++z) REQUIRE(a[z] == b[z]);
    int lambda = static_cast<int>(rng() % 8);
    REQUIRE(kern::scalar().diff_counts_flat(d, v, lambda) == simd->diff_counts_flat(d, v, lambda));
  }
  for (int trial = 0; trial < 20000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 80);
    int ncolors = 1 + static_cast<int>(rng() % 64);
    std::vector<std::uint8_t> row(n), active(n);
    for (int i = 0; i < n; ++i) {
      row[i] = static_cast<std::uint8_t>(rng() % ncolors);
      active[i] = static_cast<std::uint8_t>(rng() % 2);
    }
    std::vector<std::uint16_t> x(ncolors, 0), y(ncolors, 0);
    kern::scalar().color_hist(row.data(), active.data(), n, ncolors, x.data());
    simd->color_hist(row.data(), active.data(), n, ncolors, y.data());
    REQUIRE(x == y);
  }
}

TEST_CASE("rotl_v is a cyclic shift") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 2000; ++trial) {
    int v = 1 + static_cast<int>(rng() % 64);
    Mask d = random_mask(rng, v, 50);
    int z = static_cast<int>(rng() % v);
    Mask r = kern::rotl_v(d, z, v);
    CHECK(popcount(r) == popcount(d));
    for (int i = 0; i < v; ++i) CHECK(has_bit(r, (i + z) % v) == has_bit(d, i));
    CHECK(kern::rotl_v(r, (v - z) % v, v) == d);
  }
}

TEST_CASE("active backend is one of the named ones") {
  const kern::Backend& b = kern::active();
  CHECK((std::string(b.name) == "scalar" || std::string(b.name) == "avx2"));
}
