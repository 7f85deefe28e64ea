#pragma once

// S-rings (Schur rings) over small groups: verification, structure
// constants, Schur-Wielandt closure, derived subgroups, and the named
// constructions (cyclotomic, orbit scheme, quotient, wreath, difference-set).
//
// An S-ring is stored as its defining partition. Canonical class order is
// (size, then smallest element), so class 0 is always {e}; every serialized
// form and every constructor output uses that order.

#include <optional>
#include <string>
#include <vector>

#include "schur/group.hpp"
#include "schur/permgroup.hpp"

namespace schur {

class SRing {
 public:
  // Builds from a partition given as class masks; validates all axioms.
  // Throws AxiomError (below, via verify_sring) on violation -- use
  // verify_sring for a non-throwing structured result.
  SRing(FiniteGroup g, const std::vector<Mask>& classes);

  const FiniteGroup& group() const { return g_; }
  int rank() const { return static_cast<int>(classes_.size()); }
  Mask class_mask(int i) const { return classes_[i]; }
  const std::vector<Mask>& classes() const { return classes_; }
  int class_size(int i) const { return sizes_[i]; }
  int class_of(int x) const { return class_of_[x]; }
  int inverse_class(int i) const { return inv_class_[i]; }
  bool is_symmetric() const;

  // True iff the masked set is a union of classes.
  bool is_a_set(Mask m) const;

  // Serialization key: class element lists in canonical order (used for
  // equality, sorting, and census files).
  std::string partition_key() const;

  bool operator==(const SRing& o) const {
    return g_ == o.g_ && classes_ == o.classes_;
  }

 private:
  friend struct SRingAccess;
  SRing() = default;

  FiniteGroup g_;
  std::vector<Mask> classes_;
  std::vector<int> sizes_;
  std::vector<int> class_of_;
  std::vector<int> inv_class_;
};

// Structured verification failure.
struct AxiomViolation {
  enum class Kind {
    NotAPartition,
    IdentityNotSingleton,
    InverseNotAClass,
    NonConstantCount,
  };
  Kind kind = Kind::NotAPartition;
  // For NonConstantCount: classes X (=x), Y (=y) and the witness elements
  // z1, z2 in the same class with counts c1 != c2.
  int x = -1, y = -1, z1 = -1, z2 = -1, c1 = -1, c2 = -1;
  std::string message;
};

struct VerifyResult {
  std::optional<SRing> ring;
  AxiomViolation violation;  // meaningful iff !ring
  bool ok() const { return ring.has_value(); }
};

// Checks the partition axioms; never throws on axiom failure.
VerifyResult verify_sring(const FiniteGroup& g, const std::vector<Mask>& classes);

class AxiomError : public Error {
 public:
  AxiomError(AxiomViolation v) : Error(v.message), violation(std::move(v)) {}
  AxiomViolation violation;
};

// ---------------------------------------------------------------------------
// Structure constants

class StructureConstants {
 public:
  StructureConstants(const SRing& a);

  int rank() const { return rank_; }
  int size_of(int i) const { return sizes_[i]; }
  int inverse_class(int i) const { return inv_class_[i]; }
  // c^Z_{XY}: number of ways z = x*y with x in X, y in Y, for any fixed z in Z.
  int c(int x, int y, int z) const { return table_[(x * rank_ + y) * rank_ + z]; }

 private:
  int rank_;
  std::vector<int> sizes_;
  std::vector<int> inv_class_;
  std::vector<int> table_;  // dense rank^3; desk scale keeps this tiny
};

struct IdentityReport {
  bool ok = true;
  int checks = 0;       // number of (in)equality instances tested
  std::string detail;   // first violation, empty when ok
};

// Verifies the triangle identity |Z|c^{Z^-1}_{XY} = |X|c^{X^-1}_{YZ} =
// |Y|c^{Y^-1}_{ZX}, the row sum Σ_Y c^Z_{XY} = |X|, and the weighted sum
// Σ_Z c^Z_{XY}|Z| = |X||Y|.
IdentityReport check_identities(const StructureConstants& sc);

// ---------------------------------------------------------------------------
// Constructions

// Schur-Wielandt closure: the unique minimal S-ring in which every seed is
// an A-set. Seeds are augmented with their inverses; refinement splits
// classes by factorization-count vectors until stable.
SRing sring_closure(const FiniteGroup& g, const std::vector<Mask>& seeds);

// Raw refinement core used by the enumerator: refines `cells` (a partition
// of G) until counts are constant cell-wise; no S-ring object built.
void refine_partition(const FiniteGroup& g, std::vector<Mask>& cells);

// A-subgroups, generated subgroup and radical of an A-set.
std::vector<Subgroup> a_subgroups(const SRing& a);
Subgroup generated_subgroup(const SRing& a, Mask x);   // <X>
Subgroup radical(const SRing& a, Mask x);              // {g : gX = Xg = X}
bool is_primitive(const SRing& a);

// Orbit partitions as S-rings.
SRing cyclotomic(const FiniteGroup& g, const PermGroup& k);        // cyc(K,G)
SRing from_perm_group(const FiniteGroup& g, const PermGroup& k);   // V(K,G)

// All class-preserving automorphisms of G (a subgroup of Aut(G)).
PermGroup cayley_automorphisms(const SRing& a);

// Restriction A_H to an A-subgroup H: an S-ring over H as its own group.
struct RestrictedSRing {
  SubgroupGroup sub;
  SRing ring;
};
RestrictedSRing restrict_sring(const SRing& a, Mask h);

// Quotient A_{B/A'}: classes are pi-images of the classes inside B.
struct QuotientSRing {
  QuotientGroup quo;
  SRing ring;
};
QuotientSRing quotient_sring(const SRing& a, const Subgroup& b, const Subgroup& aprime);

// Wreath product over a normal subgroup H of G: classes of `inner` (an
// S-ring over H as its own group) embedded in H, plus pi-preimages of the
// nonidentity classes of `outer` (an S-ring over G/H). Degenerate H ({e} or
// G) returns the embedded copy of the single effective operand.
SRing wreath_product(const FiniteGroup& g, Mask h, const SRing& inner,
                     const SRing& outer);
bool is_wreath_over(const SRing& a, Mask h);

// The rank-4 S-ring A(D) over a dihedral group from a difference set D in
// the rotation subgroup, given by its exponent mask (2 <= |D| <= p-2).
SRing dihedral_sring_from_difference_set(const FiniteGroup& dihedral, Mask d_exponents);

}  // namespace schur
