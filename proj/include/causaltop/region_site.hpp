#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "causaltop/causal_site.hpp"
#include "causaltop/errors.hpp"
#include "causaltop/region.hpp"

namespace causaltop {

namespace detail {

// Sorted-unique insert keyed by region_less.
inline bool insert_region(std::vector<Region>& pool, const Region& r) {
  auto it = std::lower_bound(pool.begin(), pool.end(), r, region_less);
  if (it != pool.end() && *it == r) return false;
  pool.insert(it, r);
  return true;
}

inline bool bbox_disjoint(const Region& a, const Region& b) {
  if (a.empty() || b.empty()) return true;
  return a.max_u() < b.min_u() || b.max_u() < a.min_u() ||
         a.max_v() < b.min_v() || b.max_v() < a.min_v();
}

}  // namespace detail

// Lattice sample around the input regions: the bottom plus `depth` rounds of
// pairwise unions and intersections (lattice polynomials of bounded depth).
inline std::vector<Region> region_lattice_closure(const std::vector<Region>& sample,
                                                  int depth = 2,
                                                  std::size_t guard = 4096) {
  std::vector<Region> pool{Region{}};  // bottom
  for (const auto& r : sample) detail::insert_region(pool, r);

  for (int round = 0; round < depth; ++round) {
    std::vector<Region> snapshot = pool;
    bool grew = false;
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        grew |= detail::insert_region(pool, region_union(snapshot[i], snapshot[j]));
        if (!detail::bbox_disjoint(snapshot[i], snapshot[j]))
          grew |= detail::insert_region(pool,
                                        region_intersect(snapshot[i], snapshot[j]));
        if (pool.size() > guard) throw ResourceError("region closure exceeds size guard");
      }
    if (!grew) break;
  }
  return pool;
}

struct RegionSite {
  std::vector<Region> elements;  // canonically ordered; bottom is the empty region
  CausalSite site;
};

// Finite combinatorial image of the region structure (inclusion order,
// causal precedence, empty region as bottom). The element list must be
// union-closed for every join to exist in-carrier.
inline RegionSite build_region_site(std::vector<Region> elements) {
  detail::insert_region(elements, Region{});
  int bottom = -1;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    names.push_back("R" + std::to_string(i));
    if (elements[i].empty()) bottom = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> leq_pairs, prec_pairs;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j) {
      if (region_subset(elements[i], elements[j]))
        leq_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
      if (!elements[i].empty() && !elements[j].empty() &&
          region_precedes(elements[i], elements[j]))
        prec_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  CausalSite cs(names, bottom, leq_pairs, prec_pairs);
  return {std::move(elements), std::move(cs)};
}

// Checks the causal-site axioms over the depth-bounded lattice closure of the
// sample, evaluating joins and cuttings with the exact region operations (the
// witnesses of the axioms live in the full region lattice, not necessarily in
// the finite closure).
inline ValidationReport validate_region_site(const std::vector<Region>& sample,
                                             int depth = 2,
                                             std::size_t guard = 4096) {
  ValidationReport rep;
  const std::vector<Region> el = region_lattice_closure(sample, depth, guard);
  const int n = static_cast<int>(el.size());
  auto name = [&](int i) { return "R" + std::to_string(i); };

  std::vector<bool> nonempty(n);
  std::vector<Rat> lo_u(n), hi_u(n), lo_v(n), hi_v(n);
  for (int i = 0; i < n; ++i) {
    nonempty[i] = !el[i].empty();
    if (nonempty[i]) {
      lo_u[i] = el[i].min_u();
      hi_u[i] = el[i].max_u();
      lo_v[i] = el[i].min_v();
      hi_v[i] = el[i].max_v();
    }
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> prec(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!nonempty[i]) {
        leq[i][j] = true;
        continue;
      }
      if (nonempty[j] && lo_u[j] <= lo_u[i] && hi_u[i] <= hi_u[j] &&
          lo_v[j] <= lo_v[i] && hi_v[i] <= hi_v[j])
        leq[i][j] = region_subset(el[i], el[j]);
      if (nonempty[j])
        prec[i][j] = region_precedes(el[i], el[j]);
    }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a != b && leq[a][b] && leq[b][a])
        detail::report(rep, "leq-antisymmetric", name(a) + "," + name(b));
      for (int c = 0; c < n; ++c)
        if (leq[a][b] && leq[b][c] && !leq[a][c])
          detail::report(rep, "leq-transitive", name(a) + "," + name(c));
    }
  for (int a = 0; a < n; ++a) {
    if (prec[a][a]) detail::report(rep, "prec-antireflexive", name(a));
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (prec[a][b] && prec[b][c] && !prec[a][c])
          detail::report(rep, "prec-transitive", name(a) + "," + name(c));
  }

  // (i) b inside a and a prec c implies b prec c;
  // (ii) b inside a and c prec a implies c prec b.
  for (int a = 0; a < n; ++a) {
    if (!nonempty[a]) continue;
    for (int b = 0; b < n; ++b) {
      if (!nonempty[b] || !leq[b][a]) continue;
      for (int c = 0; c < n; ++c) {
        if (!nonempty[c]) continue;
        if (prec[a][c] && !prec[b][c])
          detail::report(rep, "axiom-i",
                         name(b) + " inside " + name(a) + " prec " + name(c));
        if (prec[c][a] && !prec[c][b])
          detail::report(rep, "axiom-ii",
                         name(c) + " prec " + name(a) + " over " + name(b));
      }
    }
  }

  // (iii) a prec c and b prec c implies (a union b) prec c. The union need
  // not lie in the closure; its extrema are the componentwise maxima, so the
  // quantifier part holds automatically and only union == c can fail, which
  // requires the union's bounding box to touch c's minima.
  for (int c = 0; c < n; ++c) {
    if (!nonempty[c]) continue;
    for (int a = 0; a < n; ++a) {
      if (!prec[a][c]) continue;
      for (int b = a; b < n; ++b) {
        if (!prec[b][c]) continue;
        const Rat mu = std::max(hi_u[a], hi_u[b]), mv = std::max(hi_v[a], hi_v[b]);
        if (mu < lo_u[c] || mv < lo_v[c]) continue;
        const Region u = region_union(el[a], el[b]);
        if (!region_precedes(u, el[c]))
          detail::report(rep, "axiom-iii",
                         name(a) + "," + name(b) + " prec " + name(c));
      }
    }
  }

  // (iv) the cutting b_a: inside b, precedes a (or empty), and universal over
  // every closure element below b that precedes a.
  for (int a = 0; a < n; ++a) {
    if (!nonempty[a]) continue;
    for (int b = 0; b < n; ++b) {
      const Region cut = region_cutting(el[b], el[a]);
      if (!region_subset(cut, el[b]))
        detail::report(rep, "axiom-iv-a", "cutting of " + name(a) + " by " +
                                             name(b) + " not inside " + name(b));
      if (!cut.empty() && !region_precedes(cut, el[a]))
        detail::report(rep, "axiom-iv-a", "cutting of " + name(a) + " by " +
                                             name(b) + " does not precede " + name(a));
      for (int c = 0; c < n; ++c)
        if (nonempty[c] && prec[c][a] && leq[c][b] && !region_subset(el[c], cut))
          detail::report(rep, "axiom-iv-b",
                         name(c) + " not inside the cutting of " + name(a) +
                             " by " + name(b));
    }
  }
  return rep;
}

// --- Dyadic refinement of a window ----------------------------------------

struct Refinement {
  std::vector<Region> site;                 // grid cells closed under intersection
  std::vector<std::vector<int>> families;   // maximal centered families (indices)
  std::vector<Region> witnesses;            // nonempty intersection per family
};

inline std::vector<Block> dyadic_cells(const Block& window, int level) {
  if (level < 0) throw ValidationError("negative refinement level");
  const long n = 1l << level;
  const Rat hu = (window.u_hi - window.u_lo) / n;
  const Rat hv = (window.v_hi - window.v_lo) / n;
  if (hu == 0 || hv == 0) throw ValidationError("degenerate refinement window");
  std::vector<Block> cells;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      cells.emplace_back(window.u_lo + hu * i, window.u_lo + hu * (i + 1),
                         window.v_lo + hv * j, window.v_lo + hv * (j + 1));
  return cells;
}

// All dyadic cells of the window at the given level, closed under pairwise
// intersection; maximal centered subfamilies are read off representative
// points of the induced arrangement (grid nodes and half-step midpoints).
inline Refinement refine_and_enumerate(const Block& window, int level,
                                       int max_level = 5) {
  if (level > max_level) throw ResourceError("refinement level exceeds guard");
  Refinement out;
  for (const auto& c : dyadic_cells(window, level))
    detail::insert_region(out.site, Region::from_blocks({c}));

  // Cells intersect only along shared edges and corners, so two rounds of
  // pairwise intersection reach the fixpoint.
  for (int round = 0; round < 2; ++round) {
    std::vector<Region> snapshot = out.site;
    bool grew = false;
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        if (detail::bbox_disjoint(snapshot[i], snapshot[j])) continue;
        Region r = region_intersect(snapshot[i], snapshot[j]);
        if (!r.empty()) grew |= detail::insert_region(out.site, r);
      }
    if (!grew) break;
  }

  const long n = 1l << level;
  const Rat hu2 = (window.u_hi - window.u_lo) / (2 * n);
  const Rat hv2 = (window.v_hi - window.v_lo) / (2 * n);
  std::set<std::vector<int>> seen;
  for (long i = 0; i <= 2 * n; ++i)
    for (long j = 0; j <= 2 * n; ++j) {
      const NullPoint p{window.u_lo + hu2 * i, window.v_lo + hv2 * j};
      std::vector<int> fam;
      for (std::size_t k = 0; k < out.site.size(); ++k)
        if (out.site[k].contains(p)) fam.push_back(static_cast<int>(k));
      if (!fam.empty()) seen.insert(std::move(fam));
    }
  std::vector<std::vector<int>> fams(seen.begin(), seen.end());
  for (const auto& f : fams) {
    bool maximal = true;
    for (const auto& g : fams)
      if (&f != &g && f.size() < g.size() &&
          std::includes(g.begin(), g.end(), f.begin(), f.end())) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    Region inter = out.site[f[0]];
    for (std::size_t k = 1; k < f.size(); ++k)
      inter = region_intersect(inter, out.site[f[k]]);
    out.families.push_back(f);
    out.witnesses.push_back(std::move(inter));
  }
  return out;
}

// Family of base cells containing a point; distinct points get distinct
// families once the grid is finer than their separation.
inline std::vector<int> point_cell_family(const Block& window, int level,
                                          const NullPoint& p) {
  std::vector<int> fam;
  const auto cells = dyadic_cells(window, level);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const Block& c = cells[k];
    if (c.u_lo <= p.u && p.u <= c.u_hi && c.v_lo <= p.v && p.v <= c.v_hi)
      fam.push_back(static_cast<int>(k));
  }
  return fam;
}

}  // namespace causaltop
