#pragma once

// Color graphs of S-rings, their automorphism groups, schurity testing,
// combinatorial isomorphism, and regular-cyclic-subgroup detection.
//
// The color graph of an S-ring colors the ordered pair (x,y) by the class
// of y*x^{-1}; right translations preserve colors by construction. The
// automorphism search is individualize-and-refine backtracking with paired
// partitions; refinement is one-dimensional color-degree refinement. A
// standalone dihedral difference-set constructor covers groups past the
// 64-element mask limit (vertex count up to 80).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schur/common.hpp"
#include "schur/permgroup.hpp"
#include "schur/sring.hpp"

namespace schur {

class ColorGraph {
 public:
  static constexpr int kMaxVertices = 80;

  // table[x * n + y] = color of the ordered pair (x, y).
  ColorGraph(int n, int colors, std::vector<std::uint8_t> table);
  static ColorGraph from_sring(const SRing& a);
  // The rank-4 coloring of A(D) over D_2p built directly from difference-set
  // arithmetic; p may exceed the group-mask limit. Class indices follow the
  // canonical (size, min) order of the corresponding S-ring.
  static ColorGraph from_dihedral_difference_set(int p, const std::vector<int>& d_exponents);

  int n() const { return n_; }
  int colors() const { return colors_; }
  int color(int x, int y) const { return table_[static_cast<size_t>(x) * n_ + y]; }
  int diagonal_color() const { return table_[0]; }
  // Out-degree of any vertex in color c (= class size); diagonal counts 1.
  int color_degree(int c) const { return degree_[c]; }
  int inverse_color(int c) const { return inverse_[c]; }
  // The color classes seen from vertex 0: {y : color(0,y) = c}.
  std::vector<std::vector<int>> classes_of_base_vertex() const;

 private:
  int n_;
  int colors_;
  std::vector<std::uint8_t> table_;
  std::vector<int> degree_;
  std::vector<int> inverse_;
};

struct AutResult {
  PermGroup group;            // meaningful iff complete
  bool complete = false;      // false => node budget exhausted
  std::uint64_t nodes = 0;    // search nodes spent
};

// Full color-preserving automorphism group (colors fixed pointwise).
AutResult color_graph_automorphisms(const ColorGraph& gamma, const Budgets& b = Budgets{});

// Throwing convenience wrapper for S-rings (BudgetExceeded on exhaustion).
PermGroup automorphism_group(const SRing& a, const Budgets& b = Budgets{});

struct SchurityVerdict {
  Flag schurian = Flag::Unknown;
  BigInt aut_order = 0;                     // 0 when unknown
  std::vector<int> stabilizer_orbit_sizes;  // orbits of Aut(A)_e, ascending
  std::uint64_t nodes = 0;
};

// Schurity = orbits of Aut(A)_e coincide with the color classes of vertex 0.
SchurityVerdict schurity_from_graph(const ColorGraph& gamma, const Budgets& b = Budgets{});
SchurityVerdict is_schurian(const SRing& a, const Budgets& b = Budgets{});

// Combinatorial isomorphism: bijection of vertices inducing a bijection of
// colors (classes map to classes). Colors may be permuted, unlike in
// color_graph_automorphisms.
std::optional<Perm> are_isomorphic(const SRing& a, const SRing& b,
                                   const Budgets& budgets = Budgets{});

// Exact search for a cyclic regular automorphism subgroup: a single n-cycle
// sigma with color(sigma x, sigma y) = color(x, y). Yes/No are exact; Unknown
// only on budget exhaustion.
struct RegularCycleResult {
  Flag found = Flag::Unknown;
  std::optional<Perm> witness;
  std::uint64_t nodes = 0;
};
RegularCycleResult find_regular_cycle(const ColorGraph& gamma, const Budgets& b = Budgets{});

// Hybrid decision: a budget-capped direct search first, then (if the full
// automorphism group is small enough to enumerate) an exact pass over its
// elements, then the direct search again with the whole budget. Exact unless
// every stage runs out.
RegularCycleResult regular_cycle_decision(const ColorGraph& gamma, const Budgets& b = Budgets{});

// Statement test for S-rings over dihedral groups: isomorphic to an S-ring
// over the cyclic group of the same order iff the color graph has a regular
// cyclic automorphism group.
RegularCycleResult isomorphic_to_sring_over_cyclic(const SRing& a,
                                                   const Budgets& b = Budgets{});

}  // namespace schur
