#pragma once

// Difference sets in cyclic (and general abelian) groups: verification,
// parameter feasibility, multipliers and invariant translates, exhaustive and
// multiplier-pruned searches, quartic cyclotomy, and the Paley / biquadratic
// constructions.

#include <optional>
#include <utility>
#include <vector>

#include "schur/common.hpp"
#include "schur/group.hpp"

namespace schur {

// A validated (v, k, lambda) difference set. Elements are residues in [0, v)
// for cyclic groups, element ids for a general abelian ambient group.
struct DifferenceSetRecord {
  int v = 0;
  int k = 0;
  int lambda = 0;
  std::vector<int> elements;  // sorted
  bool trivial = false;       // k outside [2, v-2]

  int order_minus() const { return k - lambda; }  // the design order n = k - lambda

  Mask mask() const {  // requires v <= 64
    if (v > 64) throw Error("difference set too large for a mask");
    Mask m = 0;
    for (int e : elements) m |= bit(e);
    return m;
  }

  bool operator==(const DifferenceSetRecord& o) const {
    return v == o.v && elements == o.elements;
  }
  bool operator<(const DifferenceSetRecord& o) const {
    if (k != o.k) return k < o.k;
    return elements < o.elements;
  }
};

// The numerical multipliers of a cyclic difference set: residues t coprime to
// v with t*D = D + g for some translate witness g.
struct MultiplierData {
  int v = 0;
  std::vector<int> multipliers;  // sorted, a subgroup of (Z/v)*, contains 1
  std::vector<int> witness;      // witness[i]: t = multipliers[i] maps D to D + witness[i]
};

// Quartic (order-4) cyclotomy data for a prime p = 4f + 1.
struct QuarticCyclotomy {
  int p = 0;
  int root = 0;                      // smallest primitive root used
  int f = 0;                         // class size (p-1)/4
  std::vector<int> classes[4];       // C_i = {root^{4s+i}}, each sorted
  int table[4][4] = {};              // (i,j)_4 = #{z in C_i : z+1 in C_j}
  int x = 0, y = 0;                  // p = x^2 + 4y^2, x = 1 (mod 4), y >= 0
  int q = 0;                         // (p-1)/4 when that is an odd prime, else 0
  bool identity_uses_c10 = false;    // which of (1,0)_4 / (3,0)_4 realizes
                                     //   x = 2q - 1 - 8*(.,0)_4   (q regime only)
};

// Arithmetic-only validator over Z/v (any v >= 1): counts the differences of
// the given residues and returns a record iff every nonzero residue is hit
// the same number of times.
std::optional<DifferenceSetRecord> cyclic_difference_set(int v, std::vector<int> elements);

// Same test inside an explicit abelian group; elements are ids of g.
std::optional<DifferenceSetRecord> is_difference_set(const FiniteGroup& g, Mask d);

// (v, k, lambda) -> (v, v-k, v-2k+lambda) with the complementary element set.
DifferenceSetRecord complement(const DifferenceSetRecord& r);

// All (k, lambda) with 2 <= k <= v-2 and k(k-1) = (v-1)lambda, ascending k.
std::vector<std::pair<int, int>> feasible_parameters(int v);

// Translate witness g with t*D = D + g, if t is a multiplier. gcd(t,v) must
// be 1. Cyclic ambient group assumed (elements are residues).
std::optional<int> multiplier_test(const DifferenceSetRecord& r, int t);
MultiplierData multiplier_group(const DifferenceSetRecord& r);

// A translate of D fixed setwise by every multiplier in m (exists whenever m
// consists of multipliers); throws if the scan finds none.
DifferenceSetRecord invariant_translate(const DifferenceSetRecord& r, const MultiplierData& m);

enum class SearchMode { All, UpToTranslation };

// Every nontrivial difference set in C_p (p prime <= 61), by pruned DFS over
// the feasible k < p/2 plus complements. UpToTranslation keeps only the
// lexicographically least translate of each set.
std::vector<DifferenceSetRecord> search_exhaustive(int p, SearchMode mode,
                                                   const Budgets& b = Budgets{});

// Search restricted to unions of orbits of the order-q automorphism group
// (plus optionally 0), for p = 4q + 1 with q an odd prime. Must agree with
// search_exhaustive up to translation.
std::vector<DifferenceSetRecord> search_multiplier_pruned(int p, const Budgets& b = Budgets{});

QuarticCyclotomy quartic_cyclotomy(int p);

// Quadratic residues mod p = 3 (mod 4): a (2q+1, q, (q-1)/2) difference set.
DifferenceSetRecord paley_set(int p);

// Quartic residues (together with 0 when p = 4t^2+9) for p = 4t^2+1 or
// 4t^2+9, t odd; validated before return.
DifferenceSetRecord biquadratic_set(int p);

// Small number-theory helpers shared with the verification module.
bool is_prime(int n);
int smallest_primitive_root(int p);

}  // namespace schur
