#include "schur/group.hpp"

#include <algorithm>

namespace schur {

void FiniteGroup::finish(Kind kind) {
  kind_ = kind;
  if (n_ < 1 || n_ > 64) throw Error("group order must be in [1, 64]");
  if (mul_.size() != static_cast<size_t>(n_) * n_) throw Error("malformed multiplication table");
  for (int v : mul_)
    if (v < 0 || v >= n_) throw Error("multiplication table entry out of range");
  // Identity fixed at index 0, Latin square, inverses, associativity. At
  // order <= 64 the full n^3 associativity scan is at most ~2.6e5 probes.
  for (int x = 0; x < n_; ++x)
    if (mul(0, x) != x || mul(x, 0) != x) throw Error("index 0 is not an identity");
  std::vector<char> seen(n_);
  for (int x = 0; x < n_; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n_; ++y) seen[mul(x, y)] = 1;
    for (char c : seen)
      if (!c) throw Error("multiplication table row is not a permutation");
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n_; ++y) seen[mul(y, x)] = 1;
    for (char c : seen)
      if (!c) throw Error("multiplication table column is not a permutation");
  }
  inv_.assign(n_, -1);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (mul(x, y) == 0) inv_[x] = y;
  for (int x = 0; x < n_; ++x)
    if (inv_[x] < 0 || mul(inv_[x], x) != 0) throw Error("two-sided inverse missing");
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      for (int z = 0; z < n_; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z)))
          throw Error("multiplication table is not associative");
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw Error("cyclic order must be positive");
  FiniteGroup g;
  g.n_ = n;
  g.mul_.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.mul_[i * n + j] = (i + j) % n;
  g.finish(Kind::Cyclic);
  return g;
}

FiniteGroup FiniteGroup::dihedral(int p) {
  if (p < 3 || p % 2 == 0) throw Error("dihedral parameter must be odd and >= 3");
  int n = 2 * p;
  FiniteGroup g;
  g.n_ = n;
  g.mul_.resize(static_cast<size_t>(n) * n);
  // a^i * a^j = a^{i+j};  a^i * a^j b = a^{i+j} b
  // a^i b * a^j = a^{i-j} b  (since b a = a^{-1} b);  a^i b * a^j b = a^{i-j}
  auto rot = [p](int i) { return ((i % p) + p) % p; };
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      g.mul_[i * n + j] = rot(i + j);
      g.mul_[i * n + (p + j)] = p + rot(i + j);
      g.mul_[(p + i) * n + j] = p + rot(i - j);
      g.mul_[(p + i) * n + (p + j)] = rot(i - j);
    }
  g.finish(Kind::Dihedral);
  return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> mul, Kind kind) {
  FiniteGroup g;
  g.n_ = static_cast<int>(mul.size());
  g.mul_.reserve(static_cast<size_t>(g.n_) * g.n_);
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != g.n_) throw Error("multiplication table is not square");
    g.mul_.insert(g.mul_.end(), row.begin(), row.end());
  }
  g.finish(kind);
  if (kind == Kind::Generic && g.n_ >= 1 && g.mul_ == cyclic(g.n_).mul_)
    g.kind_ = Kind::Cyclic;  // recognize literal cyclic tables (quotients etc.)
  return g;
}

int FiniteGroup::pow(int x, long e) const {
  int ord = element_order(x);
  long r = e % ord;
  if (r < 0) r += ord;
  int acc = 0;
  for (long i = 0; i < r; ++i) acc = mul(acc, x);
  return acc;
}

int FiniteGroup::element_order(int x) const {
  int acc = x, ord = 1;
  while (acc != 0) {
    acc = mul(acc, x);
    ++ord;
  }
  return ord;
}

bool FiniteGroup::is_abelian() const {
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

std::string FiniteGroup::spec() const {
  switch (kind_) {
    case Kind::Cyclic: return "C:" + std::to_string(n_);
    case Kind::Dihedral: return "D:" + std::to_string(n_);
    default: return "G:" + std::to_string(n_);
  }
}

Mask FiniteGroup::inv_mask(Mask m) const {
  Mask out = 0;
  while (m) {
    int x = lowest_bit(m);
    m &= m - 1;
    out |= bit(inv_[x]);
  }
  return out;
}

Mask FiniteGroup::left_mul_mask(int g, Mask m) const {
  Mask out = 0;
  while (m) {
    int x = lowest_bit(m);
    m &= m - 1;
    out |= bit(mul(g, x));
  }
  return out;
}

Mask FiniteGroup::right_mul_mask(Mask m, int g) const {
  Mask out = 0;
  while (m) {
    int x = lowest_bit(m);
    m &= m - 1;
    out |= bit(mul(x, g));
  }
  return out;
}

bool is_subgroup(const FiniteGroup& g, Mask m) {
  if (!has_bit(m, 0)) return false;
  for (Mask a = m; a;) {
    int x = lowest_bit(a);
    a &= a - 1;
    if (!has_bit(m, g.inv(x))) return false;
    for (Mask b = m; b;) {
      int y = lowest_bit(b);
      b &= b - 1;
      if (!has_bit(m, g.mul(x, y))) return false;
    }
  }
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, Mask m) {
  if (!is_subgroup(g, m)) return false;
  for (int x = 0; x < g.order(); ++x) {
    // x m x^{-1} == m
    Mask conj = 0;
    for (Mask a = m; a;) {
      int h = lowest_bit(a);
      a &= a - 1;
      conj |= bit(g.mul(g.mul(x, h), g.inv(x)));
    }
    if (conj != m) return false;
  }
  return true;
}

Mask generated_subgroup_mask(const FiniteGroup& g, Mask m) {
  Mask cur = m | bit(0);
  while (true) {
    Mask next = cur;
    for (Mask a = cur; a;) {
      int x = lowest_bit(a);
      a &= a - 1;
      next |= bit(g.inv(x));
      next |= g.left_mul_mask(x, cur);
    }
    if (next == cur) return cur;
    cur = next;
  }
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  // Closure-of-generating-sets walk: start from {e}, repeatedly extend each
  // known subgroup by one outside element and close. Reaches every subgroup
  // because any H is built by adding its elements one at a time.
  std::vector<Mask> found{bit(0)};
  std::vector<char> in_found;  // parallel "seen" bookkeeping via sorted lookup
  std::sort(found.begin(), found.end());
  for (size_t i = 0; i < found.size(); ++i) {
    Mask h = found[i];
    for (int x = 1; x < g.order(); ++x) {
      if (has_bit(h, x)) continue;
      Mask ext = generated_subgroup_mask(g, h | bit(x));
      auto it = std::lower_bound(found.begin(), found.end(), ext);
      if (it == found.end() || *it != ext) found.insert(it, ext);
    }
  }
  (void)in_found;
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (Mask m : found)
    out.push_back(Subgroup{m, popcount(m), is_normal_subgroup(g, m)});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.size != b.size ? a.size < b.size : a.mask < b.mask;
  });
  return out;
}

bool is_automorphism(const FiniteGroup& g, const Perm& f) {
  if (f.degree() != g.order() || !f.is_valid()) return false;
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (f(g.mul(x, y)) != g.mul(f(x), f(y))) return false;
  return true;
}

namespace {

// Backtracking over images of a generating set; each complete assignment is
// extended to an element map via the closure of words in the generators.
void find_automorphisms(const FiniteGroup& g, std::vector<Perm>& out) {
  const int n = g.order();
  // Greedy generating set: add elements not yet in the closure.
  std::vector<int> gens;
  Mask have = bit(0);
  for (int x = 1; x < n; ++x) {
    if (has_bit(have, x)) continue;
    gens.push_back(x);
    have = generated_subgroup_mask(g, have | bit(x));
  }
  // Express every element as a word: element -> (parent element, generator).
  // BFS over right-multiplication by generators.
  std::vector<std::pair<int, int>> word(n, {-1, -1});
  std::vector<int> order_bfs{0};
  std::vector<char> vis(n, 0);
  vis[0] = 1;
  for (size_t i = 0; i < order_bfs.size(); ++i) {
    int x = order_bfs[i];
    for (int s : gens) {
      int y = g.mul(x, s);
      if (!vis[y]) {
        vis[y] = 1;
        word[y] = {x, s};
        order_bfs.push_back(y);
      }
    }
  }
  std::vector<int> img_gen(gens.size());
  std::vector<int> img(n);
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == gens.size()) {
      // Build the candidate element map from the generator images.
      img[0] = 0;
      for (int x : order_bfs) {
        if (x == 0) continue;
        auto [par, s] = word[x];
        size_t si = std::find(gens.begin(), gens.end(), s) - gens.begin();
        img[x] = g.mul(img[par], img_gen[si]);
      }
      Perm f{img};
      if (is_automorphism(g, f)) out.push_back(std::move(f));
      return;
    }
    int src = gens[idx];
    int src_ord = g.element_order(src);
    for (int cand = 0; cand < n; ++cand) {
      if (g.element_order(cand) != src_ord) continue;
      img_gen[idx] = cand;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

PermGroup automorphism_group(const FiniteGroup& g) {
  std::vector<Perm> autos;
  find_automorphisms(g, autos);
  return PermGroup::from_generators(g.order(), std::move(autos));
}

QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& b, const Subgroup& a) {
  if (!is_subgroup(g, b.mask) || !is_subgroup(g, a.mask)) throw Error("quotient: not subgroups");
  if ((a.mask & ~b.mask) != 0) throw Error("quotient: A not contained in B");
  // A must be normal in B (conjugation by members of B preserves A).
  for (Mask xm = b.mask; xm;) {
    int x = lowest_bit(xm);
    xm &= xm - 1;
    Mask conj = 0;
    for (Mask am = a.mask; am;) {
      int h = lowest_bit(am);
      am &= am - 1;
      conj |= bit(g.mul(g.mul(x, h), g.inv(x)));
    }
    if (conj != a.mask) throw Error("quotient: A not normal in B");
  }
  QuotientGroup out;
  out.pi.assign(g.order(), -1);
  // Cosets in order of their smallest member; identity coset first because
  // the smallest member of A is 0.
  std::vector<Mask> cosets;
  for (Mask rest = b.mask; rest;) {
    int x = lowest_bit(rest);
    Mask coset = g.left_mul_mask(x, a.mask);
    cosets.push_back(coset);
    out.reps.push_back(x);
    for (Mask cm = coset; cm;) {
      int y = lowest_bit(cm);
      cm &= cm - 1;
      out.pi[y] = static_cast<int>(cosets.size()) - 1;
    }
    rest &= ~coset;
  }
  int q = static_cast<int>(cosets.size());
  std::vector<std::vector<int>> mul(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) mul[i][j] = out.pi[g.mul(out.reps[i], out.reps[j])];
  out.group = FiniteGroup::from_table(std::move(mul));
  return out;
}

SubgroupGroup subgroup_group(const FiniteGroup& g, Mask m) {
  if (!is_subgroup(g, m)) throw Error("subgroup_group: not a subgroup");
  SubgroupGroup out;
  for (Mask a = m; a;) {
    int x = lowest_bit(a);
    a &= a - 1;
    out.embed.push_back(x);
  }
  int k = static_cast<int>(out.embed.size());
  std::vector<int> back(g.order(), -1);
  for (int i = 0; i < k; ++i) back[out.embed[i]] = i;
  std::vector<std::vector<int>> mul(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) mul[i][j] = back[g.mul(out.embed[i], out.embed[j])];
  out.group = FiniteGroup::from_table(std::move(mul));
  return out;
}

PermGroup right_regular_representation(const FiniteGroup& g) {
  std::vector<Perm> gens;
  for (int x = 1; x < g.order(); ++x) {
    std::vector<int> img(g.order());
    for (int y = 0; y < g.order(); ++y) img[y] = g.mul(y, x);
    gens.emplace_back(std::move(img));
  }
  return PermGroup::from_generators(g.order(), std::move(gens));
}

FiniteGroup parse_group_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos || colon + 1 == spec.size())
    throw Error("group spec must look like C:n or D:2p, got '" + spec + "'");
  std::string kind = spec.substr(0, colon);
  int n = 0;
  for (size_t i = colon + 1; i < spec.size(); ++i) {
    if (spec[i] < '0' || spec[i] > '9')
      throw Error("group spec order is not a number: '" + spec + "'");
    n = n * 10 + (spec[i] - '0');
    if (n > 1000) throw Error("group spec order out of range: '" + spec + "'");
  }
  if (kind == "C") return FiniteGroup::cyclic(n);
  if (kind == "D") {
    if (n % 2 != 0 || (n / 2) % 2 == 0 || n / 2 < 3)
      throw Error("dihedral spec D:n needs n = 2p with p odd >= 3, got '" + spec + "'");
    return FiniteGroup::dihedral(n / 2);
  }
  throw Error("unknown group kind '" + kind + "' (expected C or D)");
}

}  // namespace schur
