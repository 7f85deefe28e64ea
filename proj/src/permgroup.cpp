#include "schur/permgroup.hpp"

#include <algorithm>
#include <set>

namespace schur {

namespace {

int smallest_moved_point(const Perm& p) {
  for (int i = 0; i < p.degree(); ++i)
    if (p(i) != i) return i;
  return -1;
}

}  // namespace

PermGroup PermGroup::trivial(int degree) {
  PermGroup g;
  g.degree_ = degree;
  return g;
}

PermGroup PermGroup::from_generators(int degree, std::vector<Perm> gens,
                                     const std::vector<int>& preferred_base) {
  PermGroup g;
  g.degree_ = degree;
  g.build(std::move(gens), preferred_base);
  return g;
}

void PermGroup::extend_orbit(Level& lv) {
  lv.orbit.clear();
  lv.where.assign(degree_, -1);
  lv.transversal.clear();
  lv.orbit.push_back(lv.base_point);
  lv.where[lv.base_point] = 0;
  lv.transversal.push_back(Perm::identity(degree_));
  for (size_t i = 0; i < lv.orbit.size(); ++i) {
    for (const Perm& s : lv.gens) {
      int im = s(lv.orbit[i]);
      if (lv.where[im] < 0) {
        lv.where[im] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(im);
        lv.transversal.push_back(lv.transversal[i] * s);
      }
    }
  }
}

std::pair<Perm, size_t> PermGroup::sift(Perm p) const {
  for (size_t lv = 0; lv < levels_.size(); ++lv) {
    if (p.is_identity()) return {std::move(p), lv};
    int im = p(levels_[lv].base_point);
    int idx = levels_[lv].where[im];
    if (idx < 0) return {std::move(p), lv};
    p = p * levels_[lv].transversal[idx].inverse();
  }
  return {std::move(p), levels_.size()};
}

void PermGroup::build(std::vector<Perm> raw, const std::vector<int>& preferred_base) {
  std::set<std::vector<int>> seen;
  for (Perm& p : raw) {
    if (p.degree() != degree_) throw Error("generator degree mismatch");
    if (!p.is_valid()) throw Error("generator is not a permutation");
    if (p.is_identity()) continue;
    if (seen.insert(p.img).second) gens_.push_back(std::move(p));
  }
  if (gens_.empty()) return;

  // Inserts one element known to lie in the target group; returns true if it
  // was not already represented by the chain. New strong generators go into
  // every level whose base prefix they fix (levels store cumulative sets).
  size_t preferred_used = 0;
  auto level_has = [&](size_t j, const Perm& h) {
    for (const Perm& s : levels_[j].gens)
      if (s.img == h.img) return true;
    return false;
  };
  auto insert_element = [&](const Perm& g) -> bool {
    auto [h, lvl] = sift(g);
    while (!h.is_identity()) {
      if (lvl < levels_.size()) {
        int im = h(levels_[lvl].base_point);
        if (levels_[lvl].where[im] >= 0) {  // peel and descend
          h = h * levels_[lvl].transversal[levels_[lvl].where[im]].inverse();
          ++lvl;
          continue;
        }
        if (level_has(lvl, h)) return false;  // orbit refresh will absorb it
        for (size_t j = 0; j <= lvl; ++j)
          if (!level_has(j, h)) levels_[j].gens.push_back(h);
        return true;
      }
      // Need a new level. Consume preferred base points first (even ones h
      // fixes -- they just get a singleton orbit and h falls through).
      int base;
      if (preferred_used < preferred_base.size())
        base = preferred_base[preferred_used++];
      else
        base = smallest_moved_point(h);
      levels_.emplace_back();
      levels_.back().base_point = base;
      base_.push_back(base);
      extend_orbit(levels_.back());
    }
    return false;
  };

  for (const Perm& g : gens_) insert_element(g);

  // Schreier closure to a fixpoint. Every successful insert strictly grows
  // the chain's order product, so this terminates; degrees here are tiny.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& lv : levels_) extend_orbit(lv);
    for (size_t k = 0; k < levels_.size() && !changed; ++k) {
      Level& lv = levels_[k];
      for (size_t i = 0; i < lv.orbit.size() && !changed; ++i) {
        for (const Perm& s : lv.gens) {
          Perm to_target = lv.transversal[i] * s;
          int target = to_target(lv.base_point);
          Perm schreier = to_target * lv.transversal[lv.where[target]].inverse();
          if (schreier.is_identity()) continue;
          if (insert_element(schreier)) {
            changed = true;
            break;
          }
        }
      }
    }
  }
}

BigInt PermGroup::order() const {
  BigInt n = 1;
  for (const auto& lv : levels_) n *= static_cast<unsigned>(lv.orbit.size());
  return n;
}

bool PermGroup::is_trivial() const { return levels_.empty(); }

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  if (!p.is_valid()) return false;
  auto [h, lvl] = sift(p);
  (void)lvl;
  return h.is_identity();
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  return orbits_of(degree_, gens_);
}

PermGroup PermGroup::point_stabilizer(int x) const {
  if (x < 0 || x >= degree_) throw Error("point_stabilizer: point out of range");
  bool moved = false;
  for (const Perm& g : gens_)
    if (g(x) != x) { moved = true; break; }
  if (!moved) return *this;  // x fixed by everything: stabilizer is the group
  if (!base_.empty() && base_[0] == x) {
    std::vector<Perm> sub = levels_.size() > 1 ? levels_[1].gens : std::vector<Perm>{};
    return from_generators(degree_, std::move(sub));
  }
  // Rebuild a chain whose base starts at x, then read off level 1.
  PermGroup re = from_generators(degree_, gens_, {x});
  return re.point_stabilizer(x);
}

bool PermGroup::for_each_element(std::uint64_t cap,
                                 const std::function<bool(const Perm&)>& visit) const {
  std::uint64_t seen = 0;
  if (levels_.empty()) {
    if (cap == 0) return false;
    return visit(Perm::identity(degree_));
  }
  const size_t depth = levels_.size();
  std::vector<size_t> idx(depth, 0);
  // prod[k] = transversal picks for levels k..depth-1 composed; element = prod[0].
  std::vector<Perm> prod(depth + 1);
  prod[depth] = Perm::identity(degree_);
  for (size_t k = depth; k-- > 0;)
    prod[k] = prod[k + 1] * levels_[k].transversal[idx[k]];
  while (true) {
    if (seen == cap) return false;
    ++seen;
    if (!visit(prod[0])) return false;
    // Odometer: level 0 is the fastest digit.
    size_t k = 0;
    while (k < depth && idx[k] + 1 == levels_[k].transversal.size()) {
      idx[k] = 0;
      ++k;
    }
    if (k == depth) return true;
    ++idx[k];
    for (size_t j = k + 1; j-- > 0;)
      prod[j] = prod[j + 1] * levels_[j].transversal[idx[j]];
  }
}

PermGroup::RegularCyclicResult PermGroup::contains_regular_cyclic(std::uint64_t cap) const {
  RegularCyclicResult res;
  if (degree_ == 0) {
    res.verdict = Flag::False;
    return res;
  }
  // An n-cycle generates a transitive subgroup, so an intransitive group
  // cannot contain one; this costs nothing and settles most No cases.
  if (orbits().size() != 1 && degree_ > 1) {
    res.verdict = Flag::False;
    return res;
  }
  std::uint64_t seen = 0;
  std::optional<Perm> found;
  bool complete = for_each_element(cap, [&](const Perm& p) {
    ++seen;
    if (p.is_n_cycle()) {
      found = p;
      return false;
    }
    return true;
  });
  res.elements_seen = seen;
  if (found) {
    res.verdict = Flag::True;
    res.witness = std::move(found);
  } else {
    res.verdict = complete ? Flag::False : Flag::Unknown;
  }
  return res;
}

std::vector<std::vector<int>> orbits_of(int degree, const std::vector<Perm>& gens) {
  std::vector<int> owner(degree, -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < degree; ++start) {
    if (owner[start] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> queue{start};
    owner[start] = id;
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      out[id].push_back(x);
      for (const Perm& g : gens) {
        int y = g(x);
        if (owner[y] < 0) {
          owner[y] = id;
          queue.push_back(y);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

}  // namespace schur
