#include "schur/schurity.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

namespace schur {

// ---------------------------------------------------------------------------
// ColorGraph

ColorGraph::ColorGraph(int n, int colors, std::vector<std::uint8_t> table)
    : n_(n), colors_(colors), table_(std::move(table)) {
  if (n < 1 || n > kMaxVertices) throw Error("color graph size out of range");
  if (colors < 1 || colors > 255) throw Error("color count out of range");
  if (table_.size() != static_cast<size_t>(n) * n) throw Error("color table size mismatch");
  for (const std::uint8_t c : table_)
    if (c >= colors) throw Error("color id out of range");

  // Diagonal must be one constant color that never appears off-diagonal.
  const int diag = table_[0];
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int c = color(x, y);
      if ((x == y) != (c == diag)) throw Error("diagonal color is not the identity class");
    }

  // Per-color out-degrees must not depend on the vertex.
  degree_.assign(colors, 0);
  for (int y = 0; y < n; ++y) ++degree_[color(0, y)];
  std::vector<int> row(colors);
  for (int x = 1; x < n; ++x) {
    std::fill(row.begin(), row.end(), 0);
    for (int y = 0; y < n; ++y) ++row[color(x, y)];
    if (row != degree_) throw Error("coloring is not degree-regular");
  }
  for (int c = 0; c < colors; ++c)
    if (degree_[c] == 0) throw Error("unused color id");

  // The transpose pairing color(x,y) -> color(y,x) must be well defined.
  inverse_.assign(colors, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int c = color(x, y), ct = color(y, x);
      if (inverse_[c] == -1)
        inverse_[c] = ct;
      else if (inverse_[c] != ct)
        throw Error("transpose pairing of colors is inconsistent");
    }
}

ColorGraph ColorGraph::from_sring(const SRing& a) {
  const FiniteGroup& g = a.group();
  const int n = g.order();
  std::vector<std::uint8_t> table(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    const int xi = g.inv(x);
    for (int y = 0; y < n; ++y)
      table[static_cast<size_t>(x) * n + y] =
          static_cast<std::uint8_t>(a.class_of(g.mul(y, xi)));
  }
  return ColorGraph(n, a.rank(), std::move(table));
}

ColorGraph ColorGraph::from_dihedral_difference_set(int p, const std::vector<int>& d_exponents) {
  if (p < 3 || p % 2 == 0) throw Error("dihedral rotation order must be odd and >= 3");
  const int n = 2 * p;
  if (n > kMaxVertices) throw Error("vertex count exceeds the color-graph limit");
  std::vector<char> in_d(p, 0);
  int k = 0;
  for (int d : d_exponents) {
    if (d < 0 || d >= p) throw Error("difference-set exponent out of range");
    if (!in_d[d]) {
      in_d[d] = 1;
      ++k;
    }
  }
  if (k < 2 || k > p - 2) throw Error("difference set must be nontrivial (2 <= k <= p-2)");

  // Canonical class order is by (size, min): {e}=0, then the smaller of
  // bD / b(A\D), then the larger, then A^# (size p-1).
  const int col_bd = (2 * k < p) ? 1 : 2;
  const int col_rest = 3 - col_bd;
  auto refl_color = [&](int m) {
    return in_d[(p - m) % p] ? col_bd : col_rest;  // a^m b in bD iff -m in D
  };

  std::vector<std::uint8_t> table(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int c;
      const bool xr = x >= p, yr = y >= p;
      const int i = xr ? x - p : x, j = yr ? y - p : y;
      if (xr == yr) {
        int r = (j - i + p) % p;  // y*x^{-1} = a^{j-i}
        c = (r == 0) ? 0 : 3;
      } else {
        c = refl_color((i + j) % p);  // y*x^{-1} = a^{i+j} b
      }
      table[static_cast<size_t>(x) * n + y] = static_cast<std::uint8_t>(c);
    }
  return ColorGraph(n, 4, std::move(table));
}

std::vector<std::vector<int>> ColorGraph::classes_of_base_vertex() const {
  std::vector<std::vector<int>> out(colors_);
  for (int y = 0; y < n_; ++y) out[color(0, y)].push_back(y);
  return out;
}

// ---------------------------------------------------------------------------
// Individualize-and-refine engine over paired partitions.

namespace {

struct PairState {
  // dom[k] and img[k] are matched cells: any isomorphism extending this
  // state maps dom[k] onto img[k]. Cell member lists are kept ascending.
  std::vector<std::vector<int>> dom, img;
  std::vector<int> dom_cell, img_cell;
};

std::uint64_t mix_term(std::uint64_t cell, std::uint64_t key) {
  std::uint64_t m = cell * 0x9E3779B97F4A7C15ull ^ key * 0xBF58476D1CE4E5B9ull;
  m ^= m >> 29;
  m *= 0x94D049BB133111EBull;
  m ^= m >> 32;
  return m;
}

struct IsoEngine {
  const ColorGraph& gd;
  const ColorGraph& gi;
  std::vector<int> key_d, key_i;  // color -> shared label
  bool exact_colors;              // automorphism mode: identity label, exact leaf
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;

  IsoEngine(const ColorGraph& d, const ColorGraph& i, bool exact, std::uint64_t node_budget)
      : gd(d), gi(i), exact_colors(exact), budget(node_budget) {
    if (exact) {
      key_d.resize(gd.colors());
      for (int c = 0; c < gd.colors(); ++c) key_d[c] = c;
      key_i = key_d;
    }
  }

  PairState root() const {
    PairState st;
    const int n = gd.n();
    st.dom.assign(1, {});
    st.img.assign(1, {});
    for (int v = 0; v < n; ++v) {
      st.dom[0].push_back(v);
      st.img[0].push_back(v);
    }
    st.dom_cell.assign(n, 0);
    st.img_cell.assign(n, 0);
    return st;
  }

  // Color-degree refinement of both sides in lockstep; false on mismatch.
  bool refine(PairState& st) const {
    const int n = gd.n();
    std::vector<std::pair<std::uint64_t, int>> hd, hi;
    bool changed = true;
    while (changed) {
      changed = false;
      const size_t ncells = st.dom.size();
      for (size_t k = 0; k < ncells; ++k) {
        if (st.dom[k].size() != st.img[k].size()) return false;
        if (st.dom[k].size() <= 1) continue;
        hd.clear();
        hi.clear();
        for (int x : st.dom[k]) {
          std::uint64_t h = 0;
          for (int y = 0; y < n; ++y)
            h += mix_term(st.dom_cell[y], key_d[gd.color(x, y)]);
          hd.emplace_back(h, x);
        }
        for (int w : st.img[k]) {
          std::uint64_t h = 0;
          for (int y = 0; y < n; ++y)
            h += mix_term(st.img_cell[y], key_i[gi.color(w, y)]);
          hi.emplace_back(h, w);
        }
        std::sort(hd.begin(), hd.end());
        std::sort(hi.begin(), hi.end());
        for (size_t t = 0; t < hd.size(); ++t)
          if (hd[t].first != hi[t].first) return false;
        if (hd.front().first == hd.back().first) continue;  // no split

        changed = true;
        // First group replaces cell k; the rest become new paired cells.
        size_t start = 0;
        bool first = true;
        for (size_t t = 1; t <= hd.size(); ++t) {
          if (t == hd.size() || hd[t].first != hd[start].first) {
            std::vector<int> dpart, ipart;
            for (size_t q = start; q < t; ++q) {
              dpart.push_back(hd[q].second);
              ipart.push_back(hi[q].second);
            }
            std::sort(dpart.begin(), dpart.end());
            std::sort(ipart.begin(), ipart.end());
            size_t id = first ? k : st.dom.size();
            if (first) {
              st.dom[k] = dpart;
              st.img[k] = ipart;
              first = false;
            } else {
              st.dom.push_back(dpart);
              st.img.push_back(ipart);
            }
            for (int v : dpart) st.dom_cell[v] = static_cast<int>(id);
            for (int w : ipart) st.img_cell[w] = static_cast<int>(id);
            start = t;
          }
        }
      }
    }
    return true;
  }

  bool individualize(PairState& st, int v, int w) const {
    const int k = st.dom_cell[v];
    if (st.img_cell[w] != k) return false;
    auto& d = st.dom[k];
    auto& i = st.img[k];
    if (d.size() < 2) return false;
    d.erase(std::find(d.begin(), d.end(), v));
    i.erase(std::find(i.begin(), i.end(), w));
    const int id = static_cast<int>(st.dom.size());
    st.dom.push_back({v});
    st.img.push_back({w});
    st.dom_cell[v] = id;
    st.img_cell[w] = id;
    return refine(st);
  }

  std::optional<Perm> leaf(const PairState& st) const {
    const int n = gd.n();
    Perm f;
    f.img.assign(n, -1);
    for (size_t k = 0; k < st.dom.size(); ++k) {
      if (st.dom[k].size() != 1) return std::nullopt;
      f.img[st.dom[k][0]] = st.img[k][0];
    }
    if (exact_colors) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (gi.color(f(x), f(y)) != gd.color(x, y)) return std::nullopt;
      return f;
    }
    // Free-color mode: the induced color map must be a well-defined bijection.
    std::vector<int> phi(gd.colors(), -1), hit(gi.colors(), 0);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int c = gd.color(x, y), c2 = gi.color(f(x), f(y));
        if (phi[c] == -1) {
          if (hit[c2]) return std::nullopt;
          phi[c] = c2;
          hit[c2] = 1;
        } else if (phi[c] != c2) {
          return std::nullopt;
        }
      }
    return f;
  }

  std::optional<Perm> search(const PairState& st) {
    if (exhausted) return std::nullopt;
    if (++nodes > budget) {
      exhausted = true;
      return std::nullopt;
    }
    int best = -1;
    for (size_t k = 0; k < st.dom.size(); ++k) {
      if (st.dom[k].size() < 2) continue;
      if (best < 0 || st.dom[k].size() < st.dom[best].size() ||
          (st.dom[k].size() == st.dom[best].size() && st.dom[k][0] < st.dom[best][0]))
        best = static_cast<int>(k);
    }
    if (best < 0) return leaf(st);
    const int v = st.dom[best][0];
    for (int w : st.img[best]) {
      if (exhausted) return std::nullopt;
      PairState child = st;
      if (!individualize(child, v, w)) continue;
      if (auto f = search(child)) return f;
    }
    return std::nullopt;
  }
};

bool fixes_prefix(const Perm& f, const std::vector<int>& base, size_t len) {
  for (size_t i = 0; i < len; ++i)
    if (f(base[i]) != base[i]) return false;
  return true;
}

}  // namespace

AutResult color_graph_automorphisms(const ColorGraph& gamma, const Budgets& b) {
  AutResult out;
  IsoEngine eng(gamma, gamma, /*exact=*/true, b.aut_nodes);
  PairState line = eng.root();
  if (!eng.refine(line)) throw Error("internal: self-refinement failed");

  std::vector<Perm> gens;
  std::vector<int> base;
  while (!eng.exhausted) {
    int best = -1;
    for (size_t k = 0; k < line.dom.size(); ++k) {
      if (line.dom[k].size() < 2) continue;
      if (best < 0 || line.dom[k].size() < line.dom[best].size() ||
          (line.dom[k].size() == line.dom[best].size() && line.dom[k][0] < line.dom[best][0]))
        best = static_cast<int>(k);
    }
    if (best < 0) break;  // discrete: only the identity fixes the base
    const int v = line.dom[best][0];
    const std::vector<int> candidates = line.img[best];

    // Orbit of v under the generators that fix the base so far; candidates
    // already inside it need no fresh search.
    std::vector<char> in_orbit(gamma.n(), 0);
    auto grow_orbit = [&]() {
      std::vector<int> queue{v};
      in_orbit.assign(gamma.n(), 0);
      in_orbit[v] = 1;
      while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        for (const Perm& f : gens) {
          if (!fixes_prefix(f, base, base.size())) continue;
          for (int img : {f(u), f.inverse()(u)})
            if (!in_orbit[img]) {
              in_orbit[img] = 1;
              queue.push_back(img);
            }
        }
      }
    };
    grow_orbit();
    for (int t : candidates) {
      if (eng.exhausted) break;
      if (t == v || in_orbit[t]) continue;
      PairState st = line;
      if (!eng.individualize(st, v, t)) continue;
      if (auto f = eng.search(st)) {
        gens.push_back(std::move(*f));
        grow_orbit();
      }
    }
    // Descend the first path: pin v to itself.
    if (!eng.individualize(line, v, v)) throw Error("internal: first-path descent failed");
    base.push_back(v);
  }

  out.nodes = eng.nodes;
  out.complete = !eng.exhausted;
  if (out.complete) out.group = PermGroup::from_generators(gamma.n(), std::move(gens), base);
  return out;
}

PermGroup automorphism_group(const SRing& a, const Budgets& b) {
  AutResult r = color_graph_automorphisms(ColorGraph::from_sring(a), b);
  if (!r.complete) throw BudgetExceeded("automorphism search exceeded its node budget");
  return std::move(r.group);
}

SchurityVerdict schurity_from_graph(const ColorGraph& gamma, const Budgets& b) {
  SchurityVerdict v;
  AutResult r = color_graph_automorphisms(gamma, b);
  v.nodes = r.nodes;
  if (!r.complete) return v;  // unknown
  v.aut_order = r.group.order();
  PermGroup stab = r.group.point_stabilizer(0);
  std::vector<std::vector<int>> orbits = stab.orbits();
  for (const auto& o : orbits) v.stabilizer_orbit_sizes.push_back(static_cast<int>(o.size()));
  std::sort(v.stabilizer_orbit_sizes.begin(), v.stabilizer_orbit_sizes.end());

  std::vector<std::vector<int>> classes = gamma.classes_of_base_vertex();
  auto canon = [](std::vector<std::vector<int>>& sets) {
    for (auto& s : sets) std::sort(s.begin(), s.end());
    std::sort(sets.begin(), sets.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
  };
  canon(orbits);
  canon(classes);
  v.schurian = (orbits == classes) ? Flag::True : Flag::False;
  return v;
}

SchurityVerdict is_schurian(const SRing& a, const Budgets& b) {
  return schurity_from_graph(ColorGraph::from_sring(a), b);
}

std::optional<Perm> are_isomorphic(const SRing& a, const SRing& b, const Budgets& budgets) {
  if (a.group().order() != b.group().order()) return std::nullopt;
  if (a.rank() != b.rank()) return std::nullopt;
  ColorGraph gd = ColorGraph::from_sring(a);
  ColorGraph gi = ColorGraph::from_sring(b);

  // Shared color labels from isomorphism invariants: diagonal flag, class
  // size, self-pairedness under transpose.
  using Label = std::tuple<int, int, int>;
  auto labels_of = [](const ColorGraph& g) {
    std::vector<Label> out(g.colors());
    for (int c = 0; c < g.colors(); ++c)
      out[c] = Label(c == g.diagonal_color() ? 1 : 0, g.color_degree(c),
                     g.inverse_color(c) == c ? 1 : 0);
    return out;
  };
  std::vector<Label> ld = labels_of(gd), li = labels_of(gi);
  std::vector<Label> joint = ld;
  joint.insert(joint.end(), li.begin(), li.end());
  std::sort(joint.begin(), joint.end());
  joint.erase(std::unique(joint.begin(), joint.end()), joint.end());
  auto label_index = [&](const Label& l) {
    return static_cast<int>(std::lower_bound(joint.begin(), joint.end(), l) - joint.begin());
  };
  std::vector<int> count_d(joint.size(), 0), count_i(joint.size(), 0);

  IsoEngine eng(gd, gi, /*exact=*/false, budgets.aut_nodes);
  eng.key_d.resize(gd.colors());
  eng.key_i.resize(gi.colors());
  for (int c = 0; c < gd.colors(); ++c) ++count_d[eng.key_d[c] = label_index(ld[c])];
  for (int c = 0; c < gi.colors(); ++c) ++count_i[eng.key_i[c] = label_index(li[c])];
  if (count_d != count_i) return std::nullopt;

  PairState st = eng.root();
  if (!eng.refine(st)) return std::nullopt;
  std::optional<Perm> f = eng.search(st);
  if (eng.exhausted && !f)
    throw BudgetExceeded("isomorphism search exceeded its node budget");
  return f;
}

// ---------------------------------------------------------------------------
// Regular cyclic subgroups.

RegularCycleResult find_regular_cycle(const ColorGraph& gamma, const Budgets& b) {
  RegularCycleResult res;
  const int n = gamma.n();
  if (n == 1) {
    res.found = Flag::True;
    res.witness = Perm::identity(1);
    return res;
  }

  // Per-vertex successor lists by color.
  std::vector<std::vector<std::vector<int>>> succ(
      n, std::vector<std::vector<int>>(gamma.colors()));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) succ[x][gamma.color(x, y)].push_back(y);

  std::vector<int> cyc(n, -1);
  std::vector<char> used(n, 0);
  cyc[0] = 0;
  used[0] = 1;
  const std::uint64_t budget = b.cycle_nodes;
  std::uint64_t nodes = 0;
  bool exhausted = false;

  // Place cyc[m]; the shift conditions against earlier entries are
  // color(cyc[m], cyc[j+1]) = color(cyc[m-1], cyc[j]) for 0 <= j <= m-2.
  auto fits = [&](int m, int w) {
    for (int j = 0; j + 1 <= m - 1; ++j)
      if (gamma.color(w, cyc[j + 1]) != gamma.color(cyc[m - 1], cyc[j])) return false;
    return true;
  };

  std::vector<int> all_others;
  for (int w = 1; w < n; ++w) all_others.push_back(w);

  auto place = [&](auto&& self, int m) -> bool {
    if (exhausted) return false;
    if (m == n) {
      for (int j = 0; j + 1 <= n - 1; ++j)
        if (gamma.color(cyc[0], cyc[j + 1]) != gamma.color(cyc[n - 1], cyc[j])) return false;
      return true;
    }
    const std::vector<int>* cands;
    if (m == 1) {
      cands = &all_others;
    } else {
      // Strongest single constraint: color(cyc[m-1], w) is forced.
      int need = gamma.inverse_color(gamma.color(cyc[m - 1], cyc[m - 2]));
      cands = &succ[cyc[m - 1]][need];
    }
    for (int w : *cands) {
      if (used[w]) continue;
      if (++nodes > budget) {
        exhausted = true;
        return false;
      }
      if (!fits(m, w)) continue;
      cyc[m] = w;
      used[w] = 1;
      if (self(self, m + 1)) return true;
      used[w] = 0;
      cyc[m] = -1;
    }
    return false;
  };

  bool found = place(place, 1);
  res.nodes = nodes;
  if (found) {
    Perm sigma;
    sigma.img.assign(n, -1);
    for (int i = 0; i < n; ++i) sigma.img[cyc[i]] = cyc[(i + 1) % n];
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (gamma.color(sigma(x), sigma(y)) != gamma.color(x, y))
          throw Error("internal: regular-cycle witness fails color preservation");
    if (!sigma.is_n_cycle()) throw Error("internal: witness is not a full cycle");
    res.found = Flag::True;
    res.witness = std::move(sigma);
  } else if (exhausted) {
    res.found = Flag::Unknown;
  } else {
    res.found = Flag::False;
  }
  return res;
}

RegularCycleResult regular_cycle_decision(const ColorGraph& gamma, const Budgets& b) {
  // Cheap direct probe: settles thin and near-complete colorings instantly.
  Budgets probe = b;
  probe.cycle_nodes = std::min<std::uint64_t>(b.cycle_nodes, 200'000);
  RegularCycleResult res = find_regular_cycle(gamma, probe);
  if (res.found != Flag::Unknown) return res;

  AutResult aut = color_graph_automorphisms(gamma, b);
  res.nodes += aut.nodes;
  if (aut.complete && aut.group.order() <= BigInt(b.element_cap)) {
    auto rc = aut.group.contains_regular_cyclic(b.element_cap);
    res.nodes += rc.elements_seen;
    if (rc.verdict != Flag::Unknown) {
      res.found = rc.verdict;
      res.witness = std::move(rc.witness);
      return res;
    }
  }

  if (b.cycle_nodes > probe.cycle_nodes) {
    RegularCycleResult full = find_regular_cycle(gamma, b);
    full.nodes += res.nodes;
    return full;
  }
  return res;
}

RegularCycleResult isomorphic_to_sring_over_cyclic(const SRing& a, const Budgets& b) {
  return regular_cycle_decision(ColorGraph::from_sring(a), b);
}

}  // namespace schur
