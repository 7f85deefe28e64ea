#pragma once

// Permutation groups with deterministic Schreier-Sims stabilizer chains.
//
// Degrees stay small (at most 80 here), so the chain stores explicit coset
// representatives per orbit point. Orders are exact big integers: Sym(26)
// already overflows 64 bits and stabilizer chains of color-graph
// automorphism groups routinely reach that size.

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <optional>
#include <vector>

#include "schur/common.hpp"
#include "schur/perm.hpp"

namespace schur {

using BigInt = boost::multiprecision::cpp_int;

class PermGroup {
 public:
  // Builds a stabilizer chain from generators. Base points are chosen
  // deterministically (smallest point moved by the current level's
  // generators), optionally forced to start with `preferred_base`.
  static PermGroup from_generators(int degree, std::vector<Perm> gens,
                                   const std::vector<int>& preferred_base = {});
  static PermGroup trivial(int degree);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  BigInt order() const;
  bool is_trivial() const;

  bool contains(const Perm& p) const;

  // Orbit partition of {0..degree-1} under the group, each orbit sorted,
  // orbits ordered by smallest element.
  std::vector<std::vector<int>> orbits() const;

  // Pointwise stabilizer of a single point: a fresh chain whose base starts
  // at x, returned as a group in its own right (same degree).
  PermGroup point_stabilizer(int x) const;

  // Visits group elements in a deterministic order until the visitor returns
  // false or `cap` elements have been produced. Returns true iff the whole
  // group was visited (i.e. not stopped and order <= cap).
  bool for_each_element(std::uint64_t cap,
                        const std::function<bool(const Perm&)>& visit) const;

  // Looks for an element that is a single |degree|-cycle, enumerating at most
  // `cap` elements. Yes => witness; No only when enumeration completed.
  struct RegularCyclicResult {
    Flag verdict = Flag::Unknown;
    std::optional<Perm> witness;
    std::uint64_t elements_seen = 0;
  };
  RegularCyclicResult contains_regular_cyclic(std::uint64_t cap) const;

  const std::vector<int>& base() const { return base_; }

 private:
  struct Level {
    int base_point = -1;
    std::vector<Perm> gens;          // strong generators fixing earlier base points
    std::vector<int> orbit;          // orbit of base_point, in discovery order
    std::vector<int> where;          // point -> index into orbit, or -1
    std::vector<Perm> transversal;   // transversal[i] maps base_point -> orbit[i]
  };

  void build(std::vector<Perm> gens, const std::vector<int>& preferred_base);
  void extend_orbit(Level& lv);
  // Returns siftee and the level it got stuck at (levels_.size() if identity).
  std::pair<Perm, size_t> sift(Perm p) const;
  void add_strong_generator(size_t level, const Perm& p);

  int degree_ = 0;
  std::vector<Perm> gens_;   // original generators (deduped, identity dropped)
  std::vector<Level> levels_;
  std::vector<int> base_;
};

// Orbit partition of arbitrary generator lists without building a chain.
std::vector<std::vector<int>> orbits_of(int degree, const std::vector<Perm>& gens);

}  // namespace schur
