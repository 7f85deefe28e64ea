#include "schur/sring.hpp"

#include <algorithm>
#include <sstream>

namespace schur {

// Internal builder for partitions already known to satisfy the axioms.
struct SRingAccess {
  static SRing make(FiniteGroup g, std::vector<Mask> classes) {
    SRing a;
    a.g_ = std::move(g);
    a.classes_ = std::move(classes);
    const int n = a.g_.order();
    a.sizes_.reserve(a.classes_.size());
    a.class_of_.assign(n, -1);
    for (size_t i = 0; i < a.classes_.size(); ++i) {
      a.sizes_.push_back(popcount(a.classes_[i]));
      for (Mask m = a.classes_[i]; m;) {
        int x = lowest_bit(m);
        m &= m - 1;
        a.class_of_[x] = static_cast<int>(i);
      }
    }
    a.inv_class_.reserve(a.classes_.size());
    for (const Mask m : a.classes_)
      a.inv_class_.push_back(a.class_of_[a.g_.inv(lowest_bit(m))]);
    return a;
  }
};

namespace {

void canonical_sort(std::vector<Mask>& classes) {
  std::sort(classes.begin(), classes.end(), [](Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    return lowest_bit(a) < lowest_bit(b);
  });
}

// c_{XY}(z) = |X ∩ z·Y^{-1}|: factorizations z = xy with x in X, y in Y.
int factorization_count(const FiniteGroup& g, Mask x_mask, Mask inv_y_mask, int z) {
  return popcount(x_mask & g.left_mul_mask(z, inv_y_mask));
}

}  // namespace

VerifyResult verify_sring(const FiniteGroup& g, const std::vector<Mask>& classes_in) {
  VerifyResult res;
  AxiomViolation& v = res.violation;
  const int n = g.order();

  std::vector<Mask> classes;
  classes.reserve(classes_in.size());
  Mask seen = 0;
  for (Mask m : classes_in) {
    if (m == 0) continue;  // empty classes are ignored rather than rejected
    if ((m & ~g.universe()) != 0 || (m & seen) != 0) {
      v.kind = AxiomViolation::Kind::NotAPartition;
      v.message = "classes overlap or leave the group";
      return res;
    }
    seen |= m;
    classes.push_back(m);
  }
  if (seen != g.universe()) {
    v.kind = AxiomViolation::Kind::NotAPartition;
    v.message = "classes do not cover the group";
    return res;
  }
  canonical_sort(classes);

  if (classes[0] != bit(0)) {
    v.kind = AxiomViolation::Kind::IdentityNotSingleton;
    v.message = "the identity is not a singleton class";
    return res;
  }

  std::vector<int> class_of(n);
  for (size_t i = 0; i < classes.size(); ++i)
    for (Mask m = classes[i]; m;) {
      int x = lowest_bit(m);
      m &= m - 1;
      class_of[x] = static_cast<int>(i);
    }

  for (size_t i = 0; i < classes.size(); ++i) {
    if (g.inv_mask(classes[i]) != classes[class_of[g.inv(lowest_bit(classes[i]))]]) {
      v.kind = AxiomViolation::Kind::InverseNotAClass;
      v.x = static_cast<int>(i);
      v.message = "class inverse is not a class";
      return res;
    }
  }

  // Factorization-count constancy for every ordered class pair.
  const int r = static_cast<int>(classes.size());
  std::vector<Mask> inv_of(r);
  for (int j = 0; j < r; ++j) inv_of[j] = g.inv_mask(classes[j]);
  std::vector<int> count_of_class(r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      std::fill(count_of_class.begin(), count_of_class.end(), -1);
      for (int z = 0; z < n; ++z) {
        int c = factorization_count(g, classes[i], inv_of[j], z);
        int& ref = count_of_class[class_of[z]];
        if (ref < 0) {
          ref = c;
        } else if (ref != c) {
          v.kind = AxiomViolation::Kind::NonConstantCount;
          v.x = i;
          v.y = j;
          v.z1 = lowest_bit(classes[class_of[z]]);
          v.z2 = z;
          v.c1 = ref;
          v.c2 = c;
          std::ostringstream msg;
          msg << "factorization count of class pair (" << i << "," << j
              << ") differs inside a class: element " << v.z1 << " has " << v.c1
              << ", element " << v.z2 << " has " << v.c2;
          v.message = msg.str();
          return res;
        }
      }
    }
  }

  res.ring = SRingAccess::make(g, std::move(classes));
  return res;
}

SRing::SRing(FiniteGroup g, const std::vector<Mask>& classes) {
  VerifyResult r = verify_sring(g, classes);
  if (!r.ok()) throw AxiomError(std::move(r.violation));
  *this = std::move(*r.ring);
}

bool SRing::is_symmetric() const {
  for (int i = 0; i < rank(); ++i)
    if (inv_class_[i] != i) return false;
  return true;
}

bool SRing::is_a_set(Mask m) const {
  Mask covered = 0;
  for (Mask c : classes_)
    if ((c & m) != 0) covered |= c;
  return covered == m;
}

std::string SRing::partition_key() const {
  std::ostringstream out;
  for (size_t i = 0; i < classes_.size(); ++i) {
    if (i) out << '|';
    bool first = true;
    for (Mask m = classes_[i]; m;) {
      int x = lowest_bit(m);
      m &= m - 1;
      if (!first) out << ' ';
      out << x;
      first = false;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------

StructureConstants::StructureConstants(const SRing& a) {
  rank_ = a.rank();
  sizes_.resize(rank_);
  inv_class_.resize(rank_);
  for (int i = 0; i < rank_; ++i) {
    sizes_[i] = a.class_size(i);
    inv_class_[i] = a.inverse_class(i);
  }
  table_.assign(static_cast<size_t>(rank_) * rank_ * rank_, 0);
  const FiniteGroup& g = a.group();
  std::vector<Mask> inv_of(rank_);
  for (int j = 0; j < rank_; ++j) inv_of[j] = g.inv_mask(a.class_mask(j));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      for (int k = 0; k < rank_; ++k) {
        int z = lowest_bit(a.class_mask(k));  // any representative: counts constant
        table_[(static_cast<size_t>(i) * rank_ + j) * rank_ + k] =
            factorization_count(g, a.class_mask(i), inv_of[j], z);
      }
}

IdentityReport check_identities(const StructureConstants& sc) {
  IdentityReport rep;
  const int r = sc.rank();
  auto fail = [&](const std::string& what) {
    if (rep.ok) {
      rep.ok = false;
      rep.detail = what;
    }
  };
  // |Z| c^{Z^-1}_{XY} = |X| c^{X^-1}_{YZ} = |Y| c^{Y^-1}_{ZX}
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y)
      for (int z = 0; z < r; ++z) {
        long lhs = static_cast<long>(sc.size_of(z)) * sc.c(x, y, sc.inverse_class(z));
        long mid = static_cast<long>(sc.size_of(x)) * sc.c(y, z, sc.inverse_class(x));
        long rhs = static_cast<long>(sc.size_of(y)) * sc.c(z, x, sc.inverse_class(y));
        rep.checks += 2;
        if (lhs != mid || mid != rhs) {
          std::ostringstream msg;
          msg << "triangle identity fails at classes (" << x << "," << y << "," << z
              << "): " << lhs << " / " << mid << " / " << rhs;
          fail(msg.str());
        }
      }
  // Σ_Y c^Z_{XY} = |X|
  for (int x = 0; x < r; ++x)
    for (int z = 0; z < r; ++z) {
      long sum = 0;
      for (int y = 0; y < r; ++y) sum += sc.c(x, y, z);
      ++rep.checks;
      if (sum != sc.size_of(x)) {
        std::ostringstream msg;
        msg << "row sum over Y at (X=" << x << ", Z=" << z << ") is " << sum
            << ", expected " << sc.size_of(x);
        fail(msg.str());
      }
    }
  // Σ_Z c^Z_{XY} |Z| = |X||Y|
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y) {
      long sum = 0;
      for (int z = 0; z < r; ++z) sum += static_cast<long>(sc.c(x, y, z)) * sc.size_of(z);
      ++rep.checks;
      if (sum != static_cast<long>(sc.size_of(x)) * sc.size_of(y)) {
        std::ostringstream msg;
        msg << "weighted sum over Z at (X=" << x << ", Y=" << y << ") is " << sum
            << ", expected " << static_cast<long>(sc.size_of(x)) * sc.size_of(y);
        fail(msg.str());
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Partition refinement (Schur-Wielandt closure).

void refine_partition(const FiniteGroup& g, std::vector<Mask>& cells) {
  const int n = g.order();
  std::vector<int> cell_of(n, -1);
  auto index_cells = [&]() {
    for (size_t i = 0; i < cells.size(); ++i)
      for (Mask m = cells[i]; m;) {
        int x = lowest_bit(m);
        m &= m - 1;
        cell_of[x] = static_cast<int>(i);
      }
  };
  index_cells();
  std::vector<char> dirty(cells.size(), 1);

  std::vector<int> slot;  // (i,j) -> dirty-pair slot or -1
  std::vector<int> sig;   // n rows of nslots counts
  std::vector<int> order(n);
  std::vector<Mask> next_cells;
  std::vector<char> next_dirty;

  while (true) {
    const int r = static_cast<int>(cells.size());
    // Pairs with a dirty side are the only ones whose counts can have changed;
    // clean pairs were constant on a coarser partition, hence still constant.
    slot.assign(static_cast<size_t>(r) * r, -1);
    int nslots = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        if (dirty[i] || dirty[j]) slot[i * r + j] = nslots++;
    if (nslots == 0) break;

    // Count factorizations z = u*v landing in the dirty pairs.
    sig.assign(static_cast<size_t>(n) * nslots, 0);
    for (int u = 0; u < n; ++u) {
      const int* row = &slot[static_cast<size_t>(cell_of[u]) * r];
      for (int v = 0; v < n; ++v) {
        int s = row[cell_of[v]];
        if (s >= 0) ++sig[static_cast<size_t>(g.mul(u, v)) * nslots + s];
      }
    }

    // Split every cell by (inverse's cell, count row).
    auto row_less = [&](int a, int b) {
      int ia = cell_of[g.inv(a)], ib = cell_of[g.inv(b)];
      if (ia != ib) return ia < ib;
      const int* ra = &sig[static_cast<size_t>(a) * nslots];
      const int* rb = &sig[static_cast<size_t>(b) * nslots];
      for (int s = 0; s < nslots; ++s)
        if (ra[s] != rb[s]) return ra[s] < rb[s];
      return a < b;
    };
    auto row_equal = [&](int a, int b) {
      if (cell_of[g.inv(a)] != cell_of[g.inv(b)]) return false;
      const int* ra = &sig[static_cast<size_t>(a) * nslots];
      const int* rb = &sig[static_cast<size_t>(b) * nslots];
      for (int s = 0; s < nslots; ++s)
        if (ra[s] != rb[s]) return false;
      return true;
    };

    next_cells.clear();
    next_dirty.clear();
    bool split_any = false;
    for (int i = 0; i < r; ++i) {
      int cnt = 0;
      for (Mask m = cells[i]; m;) {
        order[cnt++] = lowest_bit(m);
        m &= m - 1;
      }
      std::sort(order.begin(), order.begin() + cnt, row_less);
      int start = 0;
      int fragments = 0;
      for (int t = 1; t <= cnt; ++t) {
        if (t == cnt || !row_equal(order[start], order[t])) {
          Mask frag = 0;
          for (int q = start; q < t; ++q) frag |= bit(order[q]);
          next_cells.push_back(frag);
          next_dirty.push_back(0);
          ++fragments;
          start = t;
        }
      }
      if (fragments > 1) {
        split_any = true;
        for (int f = 0; f < fragments; ++f)
          next_dirty[next_dirty.size() - 1 - f] = 1;
      }
    }
    if (!split_any) break;

    cells = next_cells;
    dirty = next_dirty;
    index_cells();
  }
}

SRing sring_closure(const FiniteGroup& g, const std::vector<Mask>& seeds) {
  const int n = g.order();
  // Initial partition: key each element by its membership pattern across the
  // inverse-augmented seeds, with the identity isolated.
  std::vector<std::vector<char>> key(n);
  for (int x = 0; x < n; ++x) key[x].reserve(seeds.size() * 2 + 1);
  for (const Mask s : seeds) {
    if ((s & ~g.universe()) != 0) throw Error("closure seed leaves the group");
    Mask si = g.inv_mask(s);
    for (int x = 0; x < n; ++x) {
      key[x].push_back(has_bit(s, x));
      key[x].push_back(has_bit(si, x));
    }
  }
  for (int x = 0; x < n; ++x) key[x].push_back(x == 0);

  std::vector<Mask> cells;
  std::vector<int> owner(n, -1);
  for (int x = 0; x < n; ++x) {
    if (owner[x] >= 0) continue;
    Mask m = bit(x);
    owner[x] = static_cast<int>(cells.size());
    for (int y = x + 1; y < n; ++y)
      if (owner[y] < 0 && key[y] == key[x]) {
        owner[y] = owner[x];
        m |= bit(y);
      }
    cells.push_back(m);
  }
  refine_partition(g, cells);
  VerifyResult r = verify_sring(g, cells);
  if (!r.ok()) throw Error("closure did not stabilize to an S-ring: " + r.violation.message);
  return std::move(*r.ring);
}

// ---------------------------------------------------------------------------
// Derived subgroups.

std::vector<Subgroup> a_subgroups(const SRing& a) {
  std::vector<Subgroup> out;
  for (const Subgroup& s : all_subgroups(a.group()))
    if (a.is_a_set(s.mask)) out.push_back(s);
  return out;
}

Subgroup generated_subgroup(const SRing& a, Mask x) {
  if (!a.is_a_set(x)) throw Error("generated_subgroup: argument is not an A-set");
  Mask m = generated_subgroup_mask(a.group(), x);
  if (!a.is_a_set(m)) throw Error("internal: <X> of an A-set is not an A-set");
  return Subgroup{m, popcount(m), is_normal_subgroup(a.group(), m)};
}

Subgroup radical(const SRing& a, Mask x) {
  if (!a.is_a_set(x)) throw Error("radical: argument is not an A-set");
  const FiniteGroup& g = a.group();
  Mask rad = 0;
  for (int h = 0; h < g.order(); ++h)
    if (g.left_mul_mask(h, x) == x && g.right_mul_mask(x, h) == x) rad |= bit(h);
  if (!is_subgroup(g, rad) || !a.is_a_set(rad))
    throw Error("internal: rad(X) of an A-set is not an A-subgroup");
  return Subgroup{rad, popcount(rad), is_normal_subgroup(g, rad)};
}

bool is_primitive(const SRing& a) {
  Mask whole = a.group().universe();
  for (const Subgroup& s : a_subgroups(a))
    if (s.mask != bit(0) && s.mask != whole) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Constructions.

SRing cyclotomic(const FiniteGroup& g, const PermGroup& k) {
  if (k.degree() != g.order()) throw Error("cyclotomic: degree mismatch");
  for (const Perm& f : k.generators())
    if (!is_automorphism(g, f)) throw Error("cyclotomic: generator is not an automorphism");
  std::vector<Mask> classes;
  for (const auto& orbit : k.orbits()) {
    Mask m = 0;
    for (int x : orbit) m |= bit(x);
    classes.push_back(m);
  }
  return SRing(g, classes);
}

SRing from_perm_group(const FiniteGroup& g, const PermGroup& k) {
  const int n = g.order();
  if (k.degree() != n) throw Error("from_perm_group: degree mismatch");
  for (int x = 1; x < n; ++x) {
    std::vector<int> img(n);
    for (int y = 0; y < n; ++y) img[y] = g.mul(y, x);
    if (!k.contains(Perm{std::move(img)}))
      throw Error("from_perm_group: group does not contain all right translations");
  }
  PermGroup stab = k.point_stabilizer(0);
  std::vector<Mask> classes;
  for (const auto& orbit : stab.orbits()) {
    Mask m = 0;
    for (int x : orbit) m |= bit(x);
    classes.push_back(m);
  }
  return SRing(g, classes);
}

PermGroup cayley_automorphisms(const SRing& a) {
  const FiniteGroup& g = a.group();
  PermGroup aut = automorphism_group(g);
  std::vector<Perm> fixing;
  bool complete = aut.for_each_element(1'000'000, [&](const Perm& f) {
    for (int x = 0; x < g.order(); ++x)
      if (a.class_of(f(x)) != a.class_of(x)) return true;
    fixing.push_back(f);
    return true;
  });
  if (!complete)
    throw BudgetExceeded("cayley_automorphisms: Aut(G) larger than enumeration cap");
  return PermGroup::from_generators(g.order(), std::move(fixing));
}

RestrictedSRing restrict_sring(const SRing& a, Mask h) {
  if (!a.is_a_set(h)) throw Error("restrict_sring: H is not an A-subgroup");
  SubgroupGroup sub = subgroup_group(a.group(), h);
  const int k = sub.group.order();
  std::vector<int> back(a.group().order(), -1);
  for (int i = 0; i < k; ++i) back[sub.embed[i]] = i;
  std::vector<Mask> classes;
  for (int c = 0; c < a.rank(); ++c) {
    Mask cls = a.class_mask(c) & h;
    if (cls == 0) continue;
    Mask m = 0;
    for (Mask t = cls; t;) {
      int x = lowest_bit(t);
      t &= t - 1;
      m |= bit(back[x]);
    }
    classes.push_back(m);
  }
  SRing ring(sub.group, classes);
  return RestrictedSRing{std::move(sub), std::move(ring)};
}

QuotientSRing quotient_sring(const SRing& a, const Subgroup& b, const Subgroup& aprime) {
  if (!a.is_a_set(b.mask) || !a.is_a_set(aprime.mask))
    throw Error("quotient_sring: section endpoints are not A-subgroups");
  QuotientGroup quo = quotient_group(a.group(), b, aprime);
  const int q = quo.group.order();
  std::vector<Mask> images;
  for (int c = 0; c < a.rank(); ++c) {
    Mask cls = a.class_mask(c);
    if ((cls & ~b.mask) != 0) continue;
    Mask img = 0;
    for (Mask t = cls; t;) {
      int x = lowest_bit(t);
      t &= t - 1;
      img |= bit(quo.pi[x]);
    }
    images.push_back(img);
  }
  // Duplicate images merge; anything overlapping without equality is not an
  // A-section and verification would be meaningless.
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  Mask seen = 0;
  for (Mask m : images) {
    if ((m & seen) != 0) throw Error("quotient_sring: not an A-section (images overlap)");
    seen |= m;
  }
  if (seen != all_mask(q)) throw Error("quotient_sring: images do not cover the quotient");
  SRing ring(quo.group, images);
  return QuotientSRing{std::move(quo), std::move(ring)};
}

SRing wreath_product(const FiniteGroup& g, Mask h, const SRing& inner, const SRing& outer) {
  if (!is_normal_subgroup(g, h)) throw Error("wreath_product: H is not normal");
  SubgroupGroup sub = subgroup_group(g, h);
  if (!(inner.group() == sub.group))
    throw Error("wreath_product: inner operand is not an S-ring over H");
  QuotientGroup quo = quotient_group(
      g, Subgroup{g.universe(), g.order(), true}, Subgroup{h, popcount(h), true});
  if (!(outer.group() == quo.group))
    throw Error("wreath_product: outer operand is not an S-ring over G/H");
  std::vector<Mask> classes;
  for (int c = 0; c < inner.rank(); ++c) {
    Mask m = 0;
    for (Mask t = inner.class_mask(c); t;) {
      int x = lowest_bit(t);
      t &= t - 1;
      m |= bit(sub.embed[x]);
    }
    classes.push_back(m);
  }
  for (int c = 0; c < outer.rank(); ++c) {
    if (outer.class_mask(c) == bit(0)) continue;  // identity coset is H itself
    Mask pre = 0;
    for (int x = 0; x < g.order(); ++x)
      if (has_bit(outer.class_mask(c), quo.pi[x])) pre |= bit(x);
    classes.push_back(pre);
  }
  return SRing(g, classes);
}

bool is_wreath_over(const SRing& a, Mask h) {
  const FiniteGroup& g = a.group();
  if (!a.is_a_set(h) || !is_normal_subgroup(g, h)) return false;
  for (int c = 0; c < a.rank(); ++c) {
    Mask cls = a.class_mask(c);
    if ((cls & ~h) == 0) continue;  // class inside H
    // H must lie in the radical: hX = X and Xh = X for every h in H.
    for (Mask t = h; t;) {
      int x = lowest_bit(t);
      t &= t - 1;
      if (g.left_mul_mask(x, cls) != cls || g.right_mul_mask(cls, x) != cls) return false;
    }
  }
  return true;
}

SRing dihedral_sring_from_difference_set(const FiniteGroup& dihedral, Mask d_exponents) {
  if (dihedral.kind() != FiniteGroup::Kind::Dihedral)
    throw Error("difference-set S-ring needs a dihedral group");
  const int n = dihedral.order();
  const int p = n / 2;
  const int k = popcount(d_exponents);
  if ((d_exponents & ~all_mask(p)) != 0)
    throw Error("difference-set exponents leave the rotation subgroup");
  if (k < 2 || k > p - 2) throw Error("difference set must be nontrivial (2 <= k <= p-2)");
  const int b = p;  // index of the reflection a^0 b
  Mask bd = 0;
  for (Mask t = d_exponents; t;) {
    int d = lowest_bit(t);
    t &= t - 1;
    bd |= bit(dihedral.mul(b, d));
  }
  Mask rot_rest = all_mask(p) & ~bit(0);
  Mask refl_rest = (all_mask(n) & ~all_mask(p)) & ~bd;
  return SRing(dihedral, {bit(0), rot_rest, bd, refl_rest});
}

}  // namespace schur
