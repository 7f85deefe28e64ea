#include "schur/diffset.hpp"

#include <algorithm>
#include <numeric>

#include "schur/kernels.hpp"

namespace schur {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; 1LL * d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

int isqrt_floor(long long n) {
  if (n < 0) return -1;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return static_cast<int>(r);
}

int pow_mod(long long b, long long e, int m) {
  long long r = 1 % m;
  b %= m;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
  }
  return static_cast<int>(r);
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int d = 2; 1LL * d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Fill the record's parameters from validated counts; lambda as computed.
DifferenceSetRecord make_record(int v, std::vector<int> elements, int lambda) {
  DifferenceSetRecord r;
  r.v = v;
  r.k = static_cast<int>(elements.size());
  r.lambda = lambda;
  r.elements = std::move(elements);
  r.trivial = r.k < 2 || r.k > v - 2;
  if (1LL * r.k * (r.k - 1) != 1LL * (v - 1) * lambda)
    throw Error("internal: difference counts violate k(k-1) = (v-1)lambda");
  return r;
}

std::vector<int> translate_sorted(const std::vector<int>& d, int g, int v) {
  std::vector<int> out;
  out.reserve(d.size());
  for (int e : d) out.push_back((e + g) % v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> scaled_sorted(const std::vector<int>& d, int t, int v) {
  std::vector<int> out;
  out.reserve(d.size());
  for (int e : d) out.push_back(static_cast<int>(1LL * t * e % v));
  std::sort(out.begin(), out.end());
  return out;
}

// Lexicographically least translate (the canonical representative of the
// translation class).
std::vector<int> canonical_translate(const std::vector<int>& d, int v) {
  if (d.empty()) return {};
  std::vector<int> best = translate_sorted(d, (v - d.front()) % v, v);
  for (int e : d) {
    std::vector<int> cand = translate_sorted(d, (v - e) % v, v);
    if (cand < best) best = std::move(cand);
  }
  return best;
}

}  // namespace

std::optional<DifferenceSetRecord> cyclic_difference_set(int v, std::vector<int> elements) {
  if (v < 1) throw Error("modulus must be positive");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (int e : elements)
    if (e < 0 || e >= v) throw Error("difference-set element out of range");
  const int k = static_cast<int>(elements.size());
  if (v == 1) return make_record(1, std::move(elements), 0);

  long long cnt_total = 1LL * k * (k - 1);
  if (cnt_total % (v - 1) != 0) return std::nullopt;
  const int lambda = static_cast<int>(cnt_total / (v - 1));

  if (v <= 64) {
    Mask m = 0;
    for (int e : elements) m |= bit(e);
    if (!kern::diff_counts_flat(m, v, lambda)) return std::nullopt;
  } else {
    std::vector<int> cnt(v, 0);
    for (int a : elements)
      for (int b : elements)
        if (a != b) ++cnt[(a - b + v) % v];
    for (int z = 1; z < v; ++z)
      if (cnt[z] != lambda) return std::nullopt;
  }
  return make_record(v, std::move(elements), lambda);
}

std::optional<DifferenceSetRecord> is_difference_set(const FiniteGroup& g, Mask d) {
  if (!g.is_abelian()) throw Error("difference sets require an abelian ambient group");
  const int v = g.order();
  if ((d & ~g.universe()) != 0) throw Error("subset leaves the group");
  const int k = popcount(d);

  long long cnt_total = 1LL * k * (k - 1);
  int lambda = -1;
  if (v == 1) {
    lambda = 0;
  } else {
    if (cnt_total % (v - 1) != 0) return std::nullopt;
    lambda = static_cast<int>(cnt_total / (v - 1));
    for (int z = 1; z < v; ++z)
      if (popcount(d & g.left_mul_mask(z, d)) != lambda) return std::nullopt;
  }
  std::vector<int> elements;
  for (int e = 0; e < v; ++e)
    if (has_bit(d, e)) elements.push_back(e);
  return make_record(v, std::move(elements), lambda);
}

DifferenceSetRecord complement(const DifferenceSetRecord& r) {
  std::vector<char> in(r.v, 0);
  for (int e : r.elements) in[e] = 1;
  std::vector<int> rest;
  for (int e = 0; e < r.v; ++e)
    if (!in[e]) rest.push_back(e);
  return make_record(r.v, std::move(rest), r.v - 2 * r.k + r.lambda);
}

std::vector<std::pair<int, int>> feasible_parameters(int v) {
  if (v < 2) throw Error("group order must be at least 2");
  std::vector<std::pair<int, int>> out;
  for (int k = 2; k <= v - 2; ++k) {
    long long t = 1LL * k * (k - 1);
    if (t % (v - 1) == 0) out.emplace_back(k, static_cast<int>(t / (v - 1)));
  }
  return out;
}

std::optional<int> multiplier_test(const DifferenceSetRecord& r, int t) {
  t = ((t % r.v) + r.v) % r.v;
  if (std::gcd(t, r.v) != 1) throw Error("multiplier must be coprime to v");
  std::vector<int> image = scaled_sorted(r.elements, t, r.v);
  for (int g = 0; g < r.v; ++g)
    if (image == translate_sorted(r.elements, g, r.v)) return g;
  return std::nullopt;
}

MultiplierData multiplier_group(const DifferenceSetRecord& r) {
  MultiplierData m;
  m.v = r.v;
  for (int t = 1; t < r.v; ++t) {
    if (std::gcd(t, r.v) != 1) continue;
    if (auto g = multiplier_test(r, t)) {
      m.multipliers.push_back(t);
      m.witness.push_back(*g);
    }
  }
  // The multipliers form a subgroup of (Z/v)*.
  for (int a : m.multipliers)
    for (int b : m.multipliers) {
      int ab = static_cast<int>(1LL * a * b % r.v);
      if (!std::binary_search(m.multipliers.begin(), m.multipliers.end(), ab))
        throw Error("internal: multiplier set not closed under products");
    }
  return m;
}

DifferenceSetRecord invariant_translate(const DifferenceSetRecord& r, const MultiplierData& m) {
  if (m.v != r.v) throw Error("multiplier data is for a different modulus");
  for (int g = 0; g < r.v; ++g) {
    std::vector<int> e = translate_sorted(r.elements, g, r.v);
    bool fixed = true;
    for (int t : m.multipliers)
      if (scaled_sorted(e, t, r.v) != e) {
        fixed = false;
        break;
      }
    if (fixed) return make_record(r.v, std::move(e), r.lambda);
  }
  throw Error("no multiplier-invariant translate exists (contradicts the multiplier theorem)");
}

// ---------------------------------------------------------------------------
// Searches.

namespace {

struct SubsetSearch {
  int p, k, lambda;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<int> cnt;  // difference counts of the current partial set
  std::vector<int> cur;
  std::vector<std::vector<int>>* found;

  void run() {
    cnt.assign(p, 0);
    cur.assign(1, 0);  // translation-normalized: 0 is in the set
    extend(1);
  }

  void extend(int from) {
    if (++nodes > budget) throw BudgetExceeded("difference-set search exceeded its node budget");
    if (static_cast<int>(cur.size()) == k) {
      found->push_back(cur);
      return;
    }
    const int remaining = k - static_cast<int>(cur.size());
    for (int x = from; x <= p - remaining; ++x) {
      bool ok = true;
      for (int s : cur) {
        int d = (x - s) % p;
        if (++cnt[d] > lambda) ok = false;
        if (++cnt[p - d] > lambda) ok = false;
      }
      if (ok) {
        cur.push_back(x);
        extend(x + 1);
        cur.pop_back();
      }
      for (int s : cur) {
        int d = (x - s) % p;
        --cnt[d];
        --cnt[p - d];
      }
    }
  }
};

// Canonicalize, dedupe and sort a batch of same-parameter hits, then emit
// records per the requested mode (complement handling is the caller's job).
std::vector<std::vector<int>> translation_classes(const std::vector<std::vector<int>>& hits,
                                                  int p) {
  std::vector<std::vector<int>> reps;
  for (const auto& h : hits) reps.push_back(canonical_translate(h, p));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

}  // namespace

std::vector<DifferenceSetRecord> search_exhaustive(int p, SearchMode mode, const Budgets& b) {
  if (!is_prime(p)) throw Error("exhaustive search expects a prime modulus");
  if (p > 61) throw Error("exhaustive search is limited to p <= 61");

  std::vector<DifferenceSetRecord> out;
  for (auto [k, lambda] : feasible_parameters(p)) {
    if (2 * k >= p) continue;  // complements are added below
    std::vector<std::vector<int>> hits;
    SubsetSearch s{p, k, lambda, b.subset_nodes, 0, {}, {}, &hits};
    s.run();
    for (const auto& rep : translation_classes(hits, p)) {
      auto rec = cyclic_difference_set(p, rep);
      if (!rec) throw Error("internal: search produced a non-difference set");
      if (mode == SearchMode::UpToTranslation) {
        out.push_back(*rec);
        out.push_back(make_record(p, canonical_translate(complement(*rec).elements, p),
                                  complement(*rec).lambda));
      } else {
        for (int g = 0; g < p; ++g) {
          auto tr = make_record(p, translate_sorted(rec->elements, g, p), rec->lambda);
          out.push_back(complement(tr));
          out.push_back(std::move(tr));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<DifferenceSetRecord> search_multiplier_pruned(int p, const Budgets& b) {
  (void)b;  // candidate count is constant (at most eight)
  if (!is_prime(p)) throw Error("multiplier-pruned search expects a prime modulus");
  if (p % 4 != 1) throw Error("multiplier-pruned search needs p = 4q+1");
  const int q = (p - 1) / 4;
  if (q % 2 == 0 || !is_prime(q)) throw Error("multiplier-pruned search needs q an odd prime");

  // Orbits of the order-q automorphism x -> t x are the cosets of the
  // quartic-residue subgroup.
  const int root = smallest_primitive_root(p);
  const int t = pow_mod(root, 4, p);
  std::vector<char> seen(p, 0);
  std::vector<std::vector<int>> orbits;
  for (int c = 1; c < p; ++c) {
    if (seen[c]) continue;
    std::vector<int> orb;
    for (long long z = c; !seen[z]; z = z * t % p) {
      seen[z] = 1;
      orb.push_back(static_cast<int>(z));
    }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(std::move(orb));
  }
  if (orbits.size() != 4) throw Error("internal: expected four orbits of the order-q map");

  // Feasible nontrivial sizes below p/2 are q and q+1 (at most one of them
  // has integral lambda); a multiplier-invariant candidate is a single orbit,
  // optionally together with 0.
  std::vector<std::vector<int>> hits;
  for (const auto& orb : orbits) {
    for (int with_zero = 0; with_zero <= 1; ++with_zero) {
      std::vector<int> cand = orb;
      if (with_zero) cand.insert(cand.begin(), 0);
      if (2 * static_cast<int>(cand.size()) >= p) continue;
      if (cyclic_difference_set(p, cand)) hits.push_back(std::move(cand));
    }
  }

  std::vector<DifferenceSetRecord> out;
  for (const auto& rep : translation_classes(hits, p)) {
    auto rec = cyclic_difference_set(p, rep);
    out.push_back(*rec);
    out.push_back(make_record(p, canonical_translate(complement(*rec).elements, p),
                              complement(*rec).lambda));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Cyclotomy and named constructions.

int smallest_primitive_root(int p) {
  if (!is_prime(p)) throw Error("primitive roots require a prime modulus");
  if (p == 2) return 1;
  const std::vector<int> fac = prime_factors(p - 1);
  for (int g = 2; g < p; ++g) {
    bool ok = true;
    for (int f : fac)
      if (pow_mod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw Error("internal: no primitive root found");
}

QuarticCyclotomy quartic_cyclotomy(int p) {
  if (!is_prime(p) || p % 4 != 1) throw Error("quartic cyclotomy requires a prime p = 1 (mod 4)");
  QuarticCyclotomy c;
  c.p = p;
  c.root = smallest_primitive_root(p);
  c.f = (p - 1) / 4;

  std::vector<int> class_of(p, -1);
  {
    long long z = 1;
    for (int e = 0; e < p - 1; ++e) {
      class_of[z] = e & 3;
      c.classes[e & 3].push_back(static_cast<int>(z));
      z = z * c.root % p;
    }
  }
  for (auto& cl : c.classes) std::sort(cl.begin(), cl.end());

  for (int i = 0; i < 4; ++i)
    for (int z : c.classes[i]) {
      int w = (z + 1) % p;
      if (w != 0) ++c.table[i][class_of[w]];
    }

  // Row sums: every z in C_i except z = -1 contributes one entry.
  for (int i = 0; i < 4; ++i) {
    int sum = 0;
    for (int j = 0; j < 4; ++j) sum += c.table[i][j];
    int expect = c.f - (class_of[p - 1] == i ? 1 : 0);
    if (sum != expect) throw Error("internal: cyclotomic row sum mismatch");
  }

  // The unique p = x^2 + 4y^2 with x = 1 (mod 4), y >= 0.
  bool found = false;
  for (int y = 0; 4LL * y * y < p; ++y) {
    long long rem = p - 4LL * y * y;
    int x0 = isqrt_floor(rem);
    if (1LL * x0 * x0 != rem) continue;
    if (found) throw Error("internal: x^2 + 4y^2 representation not unique");
    c.x = (x0 % 4 == 1) ? x0 : -x0;
    if (((c.x % 4) + 4) % 4 != 1) throw Error("internal: neither sign of x is 1 mod 4");
    c.y = y;
    found = true;
  }
  if (!found) throw Error("internal: no x^2 + 4y^2 representation found");

  const int q = (p - 1) / 4;
  if (q % 2 == 1 && is_prime(q)) {
    c.q = q;
    if (c.x == 2 * q - 1 - 8 * c.table[1][0]) {
      c.identity_uses_c10 = true;
    } else if (c.x == 2 * q - 1 - 8 * c.table[3][0]) {
      c.identity_uses_c10 = false;
    } else {
      throw Error("cyclotomic identity x = 2q-1-8(1,0)_4 failed in both orientations");
    }
  }
  return c;
}

DifferenceSetRecord paley_set(int p) {
  if (!is_prime(p) || p % 4 != 3) throw Error("Paley sets require a prime p = 3 (mod 4)");
  std::vector<int> qr;
  std::vector<char> seen(p, 0);
  for (int x = 1; x < p; ++x) {
    int s = static_cast<int>(1LL * x * x % p);
    if (!seen[s]) {
      seen[s] = 1;
      qr.push_back(s);
    }
  }
  auto rec = cyclic_difference_set(p, qr);
  if (!rec) throw Error("internal: quadratic residues failed difference-set validation");
  if (rec->k != (p - 1) / 2 || rec->lambda != (p - 3) / 4)
    throw Error("internal: Paley parameters mismatch");
  return *rec;
}

DifferenceSetRecord biquadratic_set(int p) {
  if (!is_prime(p)) throw Error("biquadratic sets require a prime modulus");
  int t = 0;
  bool plus9 = false;
  if (int r = isqrt_floor((p - 1) / 4); (p - 1) % 4 == 0 && 4LL * r * r == p - 1) {
    t = r;
  } else if (int s = isqrt_floor((p - 9) / 4); p > 9 && (p - 9) % 4 == 0 && 4LL * s * s == p - 9) {
    t = s;
    plus9 = true;
  } else {
    throw Error("p is not of the form 4t^2+1 or 4t^2+9");
  }
  if (t % 2 == 0) throw Error("biquadratic construction requires odd t");

  std::vector<int> quartics;
  {
    std::vector<char> seen(p, 0);
    for (int x = 1; x < p; ++x) {
      long long s = 1LL * x * x % p;
      int f = static_cast<int>(s * s % p);
      if (!seen[f]) {
        seen[f] = 1;
        quartics.push_back(f);
      }
    }
    std::sort(quartics.begin(), quartics.end());
  }
  std::vector<int> with_zero = quartics;
  with_zero.insert(with_zero.begin(), 0);

  // Zero-element convention resolved by validation: the 4t^2+9 family takes
  // the residues together with 0, the 4t^2+1 family the residues alone.
  const auto& first = plus9 ? with_zero : quartics;
  const auto& second = plus9 ? quartics : with_zero;
  if (auto rec = cyclic_difference_set(p, first)) return *rec;
  if (auto rec = cyclic_difference_set(p, second)) return *rec;
  throw Error("biquadratic construction failed difference-set validation");
}

}  // namespace schur
