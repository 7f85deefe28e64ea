#include "schur/enumerate.hpp"

#include <algorithm>
#include <chrono>

namespace schur {

namespace {

// Depth-first class builder. See header for the search order contract.
struct Searcher {
  const FiniteGroup& g;
  const int n;
  const std::uint64_t budget;

  std::uint64_t nodes = 0;
  bool stopped = false;
  std::vector<std::vector<Mask>> results;

  std::vector<Mask> completed;  // exact classes so far, {e} first
  std::vector<Mask> pending;    // inverse-forced future classes
  Mask used = 0;
  Mask pending_mask = 0;

  // Decision-path bookkeeping for checkpoint/resume.
  std::vector<std::uint32_t> path;
  const std::vector<std::uint32_t>& resume;
  bool skipping;
  std::vector<std::uint32_t> checkpoint;

  Searcher(const FiniteGroup& group, std::uint64_t node_budget,
           const std::vector<std::uint32_t>& resume_path)
      : g(group),
        n(group.order()),
        budget(node_budget),
        resume(resume_path),
        skipping(!resume_path.empty()) {}

  bool out_of_budget() {
    ++nodes;
    if (nodes > budget) {
      stopped = true;
      checkpoint = path;
      return true;
    }
    return false;
  }

  void run() {
    completed.push_back(bit(0));
    used = bit(0);
    std::vector<Mask> cells{bit(0), g.universe() & ~bit(0)};
    if (n == 1) cells.pop_back();
    refine_partition(g, cells);
    std::vector<int> cell_of(n);
    for (size_t i = 0; i < cells.size(); ++i)
      for (Mask m = cells[i]; m;) {
        int x = lowest_bit(m);
        m &= m - 1;
        cell_of[x] = static_cast<int>(i);
      }
    descend(cell_of);
  }

  void descend(const std::vector<int>& cell_of) {
    if (stopped || out_of_budget()) return;
    Mask free = g.universe() & ~used;
    if (free == 0) {
      results.push_back(completed);
      return;
    }
    int s = lowest_bit(free);
    if (has_bit(pending_mask, s)) {
      // The inverse-forced class seeded here is fully determined.
      size_t idx = 0;
      while (!has_bit(pending[idx], s)) ++idx;
      Mask p = pending[idx];
      pending.erase(pending.begin() + idx);
      pending_mask &= ~p;
      completed.push_back(p);
      used |= p;
      descend(cell_of);  // partition of record unchanged: no re-refinement
      used &= ~p;
      completed.pop_back();
      pending.insert(pending.begin() + idx, p);
      pending_mask |= p;
      return;
    }
    // Candidates for the new class seeded at s: free cell-mates of s that are
    // not reserved by a pending class (all are > s since s is lowest free).
    std::vector<int> addables;
    for (Mask m = free & ~pending_mask & ~bit(s); m;) {
      int u = lowest_bit(m);
      m &= m - 1;
      if (cell_of[u] == cell_of[s]) addables.push_back(u);
    }
    branch(bit(s), addables, 0);
  }

  // Branch over "close the class now" (choice 0) or "add the k-th remaining
  // candidate" (choice k).
  void branch(Mask s, const std::vector<int>& addables, size_t from) {
    if (stopped || out_of_budget()) return;
    const size_t depth = path.size();
    const size_t options = addables.size() - from;
    std::uint32_t start = 0;
    bool guided = skipping && depth < resume.size();
    if (guided) {
      start = resume[depth];
      if (start > options) throw Error("invalid resume path");
    }
    if (skipping && depth >= resume.size()) skipping = false;
    for (std::uint32_t choice = start; choice <= options; ++choice) {
      if (stopped) return;
      if (guided && choice > start) {
        skipping = false;
        guided = false;
      }
      path.push_back(choice);
      if (choice == 0) {
        close_class(s);
      } else {
        size_t k = from + choice - 1;
        Mask s2 = s | bit(addables[k]);
        if (!monotone_prune(s2, addables, k + 1))
          branch(s2, addables, k + 1);
      }
      path.pop_back();
    }
  }

  // A class grown from s2 ends up between s2 and u = s2 + all remaining
  // candidates. Difference and product counts are monotone in the set, and
  // both must be constant on the final class, so the partial maximum may not
  // exceed the envelope minimum.
  bool monotone_prune(Mask s2, const std::vector<int>& addables, size_t from) {
    Mask u = s2;
    for (size_t i = from; i < addables.size(); ++i) u |= bit(addables[i]);
    Mask inv_s = g.inv_mask(s2);
    Mask inv_u = g.inv_mask(u);
    int max_ns = 0, min_nu = n + 1, max_ps = 0, min_pu = n + 1;
    for (Mask m = s2; m;) {
      int z = lowest_bit(m);
      m &= m - 1;
      max_ns = std::max(max_ns, popcount(s2 & g.left_mul_mask(z, s2)));
      min_nu = std::min(min_nu, popcount(u & g.left_mul_mask(z, u)));
      if (max_ns > min_nu) return true;
      max_ps = std::max(max_ps, popcount(s2 & g.left_mul_mask(z, inv_s)));
      min_pu = std::min(min_pu, popcount(u & g.left_mul_mask(z, inv_u)));
      if (max_ps > min_pu) return true;
    }
    return false;
  }

  void close_class(Mask s) {
    Mask t = g.inv_mask(s);
    bool new_pending = false;
    if (t != s) {
      // A class and its inverse are equal or disjoint, and the inverse of a
      // completed class is already completed or pending.
      if ((t & (used | s)) != 0) return;
      if ((t & pending_mask) != 0) return;
      pending.push_back(t);
      pending_mask |= t;
      new_pending = true;
    }
    completed.push_back(s);
    used |= s;

    // Refine the partition of record; prune unless every decided class
    // survives as a single cell.
    std::vector<Mask> cells = completed;
    cells.insert(cells.end(), pending.begin(), pending.end());
    Mask rest = g.universe() & ~used & ~pending_mask;
    if (rest) cells.push_back(rest);
    refine_partition(g, cells);

    bool ok = true;
    for (const Mask fixed : completed) {
      if (std::find(cells.begin(), cells.end(), fixed) == cells.end()) {
        ok = false;
        break;
      }
    }
    if (ok)
      for (const Mask fixed : pending)
        if (std::find(cells.begin(), cells.end(), fixed) == cells.end()) {
          ok = false;
          break;
        }
    if (ok) {
      std::vector<int> cell_of(n);
      for (size_t i = 0; i < cells.size(); ++i)
        for (Mask m = cells[i]; m;) {
          int x = lowest_bit(m);
          m &= m - 1;
          cell_of[x] = static_cast<int>(i);
        }
      descend(cell_of);
    }

    used &= ~s;
    completed.pop_back();
    if (new_pending) {
      pending.pop_back();
      pending_mask &= ~t;
    }
  }
};

}  // namespace

SRingCensus make_census(const FiniteGroup& g, std::vector<SRing> rings) {
  SRingCensus census;
  census.group_spec = g.spec();
  std::vector<std::pair<std::string, size_t>> order;
  order.reserve(rings.size());
  for (size_t i = 0; i < rings.size(); ++i) order.emplace_back(rings[i].partition_key(), i);
  std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    int ra = rings[a.second].rank(), rb = rings[b.second].rank();
    if (ra != rb) return ra < rb;
    return a.first < b.first;
  });
  census.entries.reserve(rings.size());
  for (const auto& [key, i] : order) {
    (void)key;
    CensusEntry e{std::move(rings[i]), false, false};
    e.symmetric = e.ring.is_symmetric();
    e.primitive = is_primitive(e.ring);
    census.entries.push_back(std::move(e));
  }
  return census;
}

SRingCensus enumerate_srings(const FiniteGroup& g, const Budgets& budgets,
                             const std::vector<std::uint32_t>& resume) {
  if (g.order() > 34) throw Error("enumeration is limited to groups of order <= 34");
  auto t0 = std::chrono::steady_clock::now();
  Searcher s(g, budgets.enum_nodes, resume);
  s.run();
  std::vector<SRing> rings;
  rings.reserve(s.results.size());
  for (const auto& classes : s.results) {
    VerifyResult vr = verify_sring(g, classes);
    if (!vr.ok())
      throw Error("internal: enumerated partition failed verification: " +
                  vr.violation.message);
    rings.push_back(std::move(*vr.ring));
  }
  SRingCensus census = make_census(g, std::move(rings));
  census.nodes = s.nodes;
  census.complete = !s.stopped;
  census.checkpoint = s.checkpoint;
  census.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return census;
}

SRingCensus naive_enumerate(const FiniteGroup& g) {
  if (g.order() > 14) throw Error("the naive oracle is limited to groups of order <= 14");
  auto t0 = std::chrono::steady_clock::now();
  const int n = g.order();
  const int m = n - 1;  // elements 1..n-1 get partition slots 0..m-1
  std::vector<SRing> rings;
  std::uint64_t scanned = 0;

  if (m == 0) {
    rings.emplace_back(g, std::vector<Mask>{bit(0)});
    SRingCensus census = make_census(g, std::move(rings));
    census.nodes = 1;
    census.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return census;
  }

  std::vector<int> inv(n);
  for (int x = 0; x < n; ++x) inv[x] = g.inv(x);

  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<int> a(m, 0), prefix_max(m, 0);
  std::vector<int> partner(m + 1);
  std::vector<Mask> cells(m + 1);
  while (true) {
    ++scanned;
    int ncells = 0;
    for (int i = 0; i < m; ++i) ncells = std::max(ncells, a[i]);
    ++ncells;

    // Quick inverse-closure filter: the cell map x -> inv(x) must be a
    // well-defined involution on cell indices.
    bool inv_ok = true;
    std::fill(partner.begin(), partner.begin() + ncells, -1);
    for (int i = 0; i < m && inv_ok; ++i) {
      int ci = a[i];
      int cj = a[inv[i + 1] - 1];
      if (partner[ci] == -1)
        partner[ci] = cj;
      else if (partner[ci] != cj)
        inv_ok = false;
    }
    if (inv_ok) {
      std::fill(cells.begin(), cells.begin() + ncells, 0);
      for (int i = 0; i < m; ++i) cells[a[i]] |= bit(i + 1);
      std::vector<Mask> classes(cells.begin(), cells.begin() + ncells);
      classes.push_back(bit(0));
      VerifyResult vr = verify_sring(g, classes);
      if (vr.ok()) rings.push_back(std::move(*vr.ring));
    }

    // Next restricted growth string.
    int i = m - 1;
    while (i > 0 && a[i] > prefix_max[i]) --i;
    if (i == 0) break;
    ++a[i];
    for (int j = i + 1; j < m; ++j) {
      prefix_max[j] = std::max(prefix_max[j - 1], a[j - 1]);
      a[j] = 0;
    }
  }

  SRingCensus census = make_census(g, std::move(rings));
  census.nodes = scanned;
  census.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return census;
}

}  // namespace schur
