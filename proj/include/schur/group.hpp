#pragma once

// Small finite groups by explicit multiplication table, capped at order 64 so
// subsets are single 64-bit masks.
//
// Element indexing is fixed and used by every serialized output:
//   cyclic C_n:    i   <-> a^i,  mul[i][j] = (i+j) mod n
//   dihedral D_2p: i   <-> a^i            (0 <= i < p)
//                  p+i <-> a^i b          (0 <= i < p)
// Products compose left-to-right: mul(x, y) is the index of x*y, and "right
// translation by g" always means x -> x*g.

#include <string>
#include <vector>

#include "schur/common.hpp"
#include "schur/perm.hpp"
#include "schur/permgroup.hpp"

namespace schur {

class FiniteGroup {
 public:
  enum class Kind { Cyclic, Dihedral, Generic };

  // Empty placeholder (order 0); usable groups come from the factories.
  FiniteGroup() = default;

  static FiniteGroup cyclic(int n);
  static FiniteGroup dihedral(int p);  // order 2p, p odd >= 3
  static FiniteGroup from_table(std::vector<std::vector<int>> mul,
                                Kind kind = Kind::Generic);

  int order() const { return n_; }
  int mul(int x, int y) const { return mul_[x * n_ + y]; }
  int inv(int x) const { return inv_[x]; }
  int pow(int x, long e) const;
  int element_order(int x) const;
  bool is_abelian() const;
  Kind kind() const { return kind_; }

  // "C:n" / "D:2p" / "G:n"; parse_group_spec accepts the first two.
  std::string spec() const;

  // Mask helpers. All masks live in the low n bits.
  Mask universe() const { return all_mask(n_); }
  Mask inv_mask(Mask m) const;             // {x^{-1} : x in m}
  Mask left_mul_mask(int g, Mask m) const; // {g*x : x in m}
  Mask right_mul_mask(Mask m, int g) const;// {x*g : x in m}

  bool operator==(const FiniteGroup& o) const {
    return n_ == o.n_ && mul_ == o.mul_;
  }

 private:
  void finish(Kind kind);  // builds inv_, validates the table axioms

  int n_ = 0;
  std::vector<int> mul_;  // flattened n x n
  std::vector<int> inv_;
  Kind kind_ = Kind::Generic;
};

struct Subgroup {
  Mask mask = 0;
  int size = 0;
  bool normal = false;
};

// Every subgroup exactly once, sorted by (size, mask); normality flags set.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

// Is the masked subset a subgroup / normal in g?
bool is_subgroup(const FiniteGroup& g, Mask m);
bool is_normal_subgroup(const FiniteGroup& g, Mask m);

// Smallest subgroup containing the masked subset.
Mask generated_subgroup_mask(const FiniteGroup& g, Mask m);

// All automorphisms of g as a permutation group on element indices.
PermGroup automorphism_group(const FiniteGroup& g);
bool is_automorphism(const FiniteGroup& g, const Perm& f);

// Quotient b/a for a normal in b (both subgroups of g, a <= b). Coset of the
// identity maps to index 0. pi is defined on members of b and -1 elsewhere;
// reps[i] is the smallest element of coset i.
struct QuotientGroup {
  FiniteGroup group;
  std::vector<int> pi;
  std::vector<int> reps;
};
QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& b,
                             const Subgroup& a);

// The subgroup itself as a group: elements renumbered in ascending order.
// embed[i] = index in g of the subgroup's element i.
struct SubgroupGroup {
  FiniteGroup group;
  std::vector<int> embed;
};
SubgroupGroup subgroup_group(const FiniteGroup& g, Mask m);

PermGroup right_regular_representation(const FiniteGroup& g);

FiniteGroup parse_group_spec(const std::string& spec);

}  // namespace schur
