#pragma once

// Plain permutations of {0, ..., n-1} as image vectors.

#include <vector>

#include "schur/common.hpp"

namespace schur {

struct Perm {
  std::vector<int> img;  // img[i] = image of point i

  Perm() = default;
  explicit Perm(std::vector<int> v) : img(std::move(v)) {}

  static Perm identity(int n) {
    Perm p;
    p.img.resize(n);
    for (int i = 0; i < n; ++i) p.img[i] = i;
    return p;
  }

  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i]; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img[i] != i) return false;
    return true;
  }

  // (a * b)(x) = b(a(x)): apply a first, then b.
  friend Perm operator*(const Perm& a, const Perm& b) {
    Perm r;
    r.img.resize(a.img.size());
    for (int i = 0; i < a.degree(); ++i) r.img[i] = b.img[a.img[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img.resize(img.size());
    for (int i = 0; i < degree(); ++i) r.img[img[i]] = i;
    return r;
  }

  bool operator==(const Perm& o) const { return img == o.img; }
  bool operator!=(const Perm& o) const { return !(*this == o); }
  bool operator<(const Perm& o) const { return img < o.img; }

  // True iff the permutation is one cycle through all n points.
  bool is_n_cycle() const {
    int n = degree();
    if (n == 0) return false;
    int x = 0;
    for (int step = 1; step < n; ++step) {
      x = img[x];
      if (x == 0) return false;
    }
    return img[x] == 0;
  }

  // Validity check: img is a bijection on {0..n-1}.
  bool is_valid() const {
    int n = degree();
    std::vector<char> seen(n, 0);
    for (int v : img) {
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }
};

}  // namespace schur
