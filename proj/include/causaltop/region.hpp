#pragma once

#include <algorithm>
#include <compare>
#include <utility>
#include <vector>

#include "causaltop/errors.hpp"
#include "causaltop/minkowski.hpp"
#include "causaltop/rational.hpp"

namespace causaltop {

// Null coordinates u = t - x, v = t + x. In these coordinates the 1+1D
// causal order is the componentwise order, so closed diamonds are
// axis-aligned rectangles.
struct NullPoint {
  Rat u, v;
  bool operator==(const NullPoint&) const = default;
};

inline NullPoint to_null(const MinkVec& p) {
  if (p.dim() != 2) throw ValidationError("null coordinates need dimension 1+1");
  return {p.coords[0] - p.coords[1], p.coords[0] + p.coords[1]};
}

inline MinkVec from_null(const NullPoint& n) {
  return MinkVec({(n.u + n.v) / 2, (n.v - n.u) / 2});
}

// Closed rectangle in null coordinates; degenerate edges and points allowed.
struct Block {
  Rat u_lo, u_hi, v_lo, v_hi;

  Block(Rat ul, Rat uh, Rat vl, Rat vh)
      : u_lo(std::move(ul)), u_hi(std::move(uh)), v_lo(std::move(vl)), v_hi(std::move(vh)) {
    if (u_lo > u_hi || v_lo > v_hi) throw ValidationError("inverted block bounds");
  }
  bool operator==(const Block&) const = default;
};

// --- 1D sets: canonical unions of closed intervals -------------------------

struct Interval {
  Rat lo, hi;
  bool operator==(const Interval&) const = default;
  std::weak_ordering operator<=>(const Interval&) const = default;
};

// Sorted, pairwise disjoint, non-touching maximal closed intervals.
using IntervalSet = std::vector<Interval>;

inline IntervalSet iv_normalize(std::vector<Interval> xs) {
  std::sort(xs.begin(), xs.end(),
            [](const Interval& a, const Interval& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  IntervalSet out;
  for (auto& x : xs) {
    if (x.lo > x.hi) continue;
    if (!out.empty() && x.lo <= out.back().hi) {
      if (x.hi > out.back().hi) out.back().hi = x.hi;
    } else {
      out.push_back(x);
    }
  }
  return out;
}

inline IntervalSet iv_union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> all(a);
  all.insert(all.end(), b.begin(), b.end());
  return iv_normalize(std::move(all));
}

inline IntervalSet iv_intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Rat lo = std::max(x.lo, y.lo);
      Rat hi = std::min(x.hi, y.hi);
      if (lo <= hi) out.push_back({std::move(lo), std::move(hi)});
    }
  return iv_normalize(std::move(out));
}

inline bool iv_contains(const IntervalSet& s, const Rat& x) {
  for (const auto& i : s)
    if (i.lo <= x && x <= i.hi) return true;
  return false;
}

// Canonical sets: a is contained in b iff every a-interval fits in a single
// b-interval.
inline bool iv_subset(const IntervalSet& a, const IntervalSet& b) {
  for (const auto& x : a) {
    bool covered = false;
    for (const auto& y : b)
      if (y.lo <= x.lo && x.hi <= y.hi) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

// --- Regions ---------------------------------------------------------------

// Canonical finite union of closed blocks. The u-axis is cut at breakpoints;
// the region is described by the v-set at each breakpoint and on each open
// interval between consecutive breakpoints. Breakpoints where the v-set does
// not change are pruned, so equal point sets have identical representations.
class Region {
public:
  Region() = default;  // the empty region, the lattice bottom

  static Region from_blocks(const std::vector<Block>& blocks) {
    Region r;
    std::vector<Rat> breaks;
    for (const auto& b : blocks) {
      breaks.push_back(b.u_lo);
      breaks.push_back(b.u_hi);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    r.breaks_ = std::move(breaks);
    const std::size_t k = r.breaks_.size();
    r.at_.resize(k);
    if (k > 0) r.between_.resize(k - 1);
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Interval> vs;
      for (const auto& b : blocks)
        if (b.u_lo <= r.breaks_[i] && r.breaks_[i] <= b.u_hi)
          vs.push_back({b.v_lo, b.v_hi});
      r.at_[i] = iv_normalize(std::move(vs));
      if (i + 1 < k) {
        std::vector<Interval> vo;
        for (const auto& b : blocks)
          if (b.u_lo <= r.breaks_[i] && r.breaks_[i + 1] <= b.u_hi)
            vo.push_back({b.v_lo, b.v_hi});
        r.between_[i] = iv_normalize(std::move(vo));
      }
    }
    r.prune();
    return r;
  }

  bool empty() const { return breaks_.empty(); }

  const std::vector<Rat>& breaks() const { return breaks_; }
  const IntervalSet& at(std::size_t i) const { return at_[i]; }
  const IntervalSet& between(std::size_t i) const { return between_[i]; }

  // v-set at exactly u.
  IntervalSet eval_at(const Rat& u) const {
    auto it = std::lower_bound(breaks_.begin(), breaks_.end(), u);
    if (it != breaks_.end() && *it == u)
      return at_[static_cast<std::size_t>(it - breaks_.begin())];
    if (it == breaks_.begin() || it == breaks_.end()) return {};
    return between_[static_cast<std::size_t>(it - breaks_.begin()) - 1];
  }

  // v-set on the open interval just right of u (valid until the next break).
  IntervalSet eval_open_after(const Rat& u) const {
    if (breaks_.empty() || u < breaks_.front() || u >= breaks_.back()) return {};
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), u);
    return between_[static_cast<std::size_t>(it - breaks_.begin()) - 1];
  }

  bool contains(const NullPoint& p) const { return iv_contains(eval_at(p.u), p.v); }

  Rat min_u() const { return require_nonempty(), breaks_.front(); }
  Rat max_u() const { return require_nonempty(), breaks_.back(); }
  Rat min_v() const {
    require_nonempty();
    bool found = false;
    Rat best;
    auto consider = [&](const IntervalSet& s) {
      if (!s.empty() && (!found || s.front().lo < best)) {
        best = s.front().lo;
        found = true;
      }
    };
    for (const auto& s : at_) consider(s);
    for (const auto& s : between_) consider(s);
    return best;
  }
  Rat max_v() const {
    require_nonempty();
    bool found = false;
    Rat best;
    auto consider = [&](const IntervalSet& s) {
      if (!s.empty() && (!found || s.back().hi > best)) {
        best = s.back().hi;
        found = true;
      }
    };
    for (const auto& s : at_) consider(s);
    for (const auto& s : between_) consider(s);
    return best;
  }

  // Deterministic closed-block cover of the region: slab blocks for the open
  // cells (their closures are inside the region) plus point-cell blocks.
  std::vector<Block> to_blocks() const {
    std::vector<Block> out;
    static const IntervalSet kEmpty;
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
      // Slab closures already cover the breakpoint v-sets of their two
      // neighbors; emit a point block only for intervals adding coverage.
      const IntervalSet& left = i == 0 ? kEmpty : between_[i - 1];
      const IntervalSet& right = i + 1 == breaks_.size() ? kEmpty : between_[i];
      const IntervalSet covered = iv_union(left, right);
      for (const auto& iv : at_[i])
        if (!iv_subset({iv}, covered))
          out.emplace_back(breaks_[i], breaks_[i], iv.lo, iv.hi);
    }
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
      for (const auto& iv : between_[i])
        out.emplace_back(breaks_[i], breaks_[i + 1], iv.lo, iv.hi);
    return out;
  }

  bool operator==(const Region&) const = default;

  // Arbitrary total order, used for deduplication and canonical output order.
  friend bool region_less(const Region& a, const Region& b) {
    if (a.breaks_ != b.breaks_)
      return std::lexicographical_compare(a.breaks_.begin(), a.breaks_.end(),
                                          b.breaks_.begin(), b.breaks_.end());
    auto cmp_sets = [](const std::vector<IntervalSet>& x,
                       const std::vector<IntervalSet>& y) -> int {
      if (x == y) return 0;
      return x < y ? -1 : 1;
    };
    const int c = cmp_sets(a.at_, b.at_);
    if (c != 0) return c < 0;
    return cmp_sets(a.between_, b.between_) < 0;
  }

  template <class Op>
  friend Region region_overlay(const Region& a, const Region& b, Op op) {
    std::vector<Rat> breaks(a.breaks_);
    breaks.insert(breaks.end(), b.breaks_.begin(), b.breaks_.end());
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    Region r;
    r.breaks_ = std::move(breaks);
    const std::size_t k = r.breaks_.size();
    r.at_.resize(k);
    if (k > 0) r.between_.resize(k - 1);
    for (std::size_t i = 0; i < k; ++i) {
      r.at_[i] = op(a.eval_at(r.breaks_[i]), b.eval_at(r.breaks_[i]));
      if (i + 1 < k)
        r.between_[i] =
            op(a.eval_open_after(r.breaks_[i]), b.eval_open_after(r.breaks_[i]));
    }
    r.prune();
    return r;
  }

private:
  void require_nonempty() const {
    if (breaks_.empty()) throw ValidationError("operation undefined on the empty region");
  }

  // Remove breakpoints whose v-set matches both neighboring open cells. The
  // cells between two surviving breakpoints are all equal, so the cell right
  // after a kept breakpoint represents the whole gap.
  void prune() {
    const std::size_t k = breaks_.size();
    static const IntervalSet kEmpty;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < k; ++i) {
      const IntervalSet& left = i == 0 ? kEmpty : between_[i - 1];
      const IntervalSet& right = i + 1 == k ? kEmpty : between_[i];
      if (!(at_[i] == left && at_[i] == right)) kept.push_back(i);
    }
    std::vector<Rat> nb;
    std::vector<IntervalSet> nat, nbetween;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      nb.push_back(breaks_[kept[j]]);
      nat.push_back(at_[kept[j]]);
      if (j + 1 < kept.size()) nbetween.push_back(between_[kept[j]]);
    }
    breaks_ = std::move(nb);
    at_ = std::move(nat);
    between_ = std::move(nbetween);
  }

  std::vector<Rat> breaks_;
  std::vector<IntervalSet> at_;       // v-set at each breakpoint
  std::vector<IntervalSet> between_;  // v-set strictly between breakpoints
};

bool region_less(const Region& a, const Region& b);

inline Region region_union(const Region& a, const Region& b) {
  return region_overlay(a, b, [](const IntervalSet& x, const IntervalSet& y) {
    return iv_union(x, y);
  });
}

inline Region region_intersect(const Region& a, const Region& b) {
  return region_overlay(a, b, [](const IntervalSet& x, const IntervalSet& y) {
    return iv_intersect(x, y);
  });
}

inline bool region_subset(const Region& a, const Region& b) {
  if (a.empty()) return true;
  if (b.empty()) return false;
  std::vector<Rat> breaks(a.breaks());
  breaks.insert(breaks.end(), b.breaks().begin(), b.breaks().end());
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    if (!iv_subset(a.eval_at(breaks[i]), b.eval_at(breaks[i]))) return false;
    if (i + 1 < breaks.size() &&
        !iv_subset(a.eval_open_after(breaks[i]), b.eval_open_after(breaks[i])))
      return false;
  }
  return true;
}

// Union of the closed diamonds given by (p, q) corner pairs in 1+1D.
inline Region region_from_diamonds(
    const std::vector<std::pair<MinkVec, MinkVec>>& diamonds) {
  std::vector<Block> blocks;
  for (const auto& [p, q] : diamonds) {
    if (!causal_le(p, q))
      throw ValidationError("invalid diamond: p is not causally below q");
    const NullPoint np = to_null(p), nq = to_null(q);
    blocks.emplace_back(np.u, nq.u, np.v, nq.v);
  }
  return Region::from_blocks(blocks);
}

// A prec B: A != B and every point of A is causally below every point of B.
// Closed bounded regions attain their extrema, so corner comparison suffices.
inline bool region_precedes(const Region& a, const Region& b) {
  if (a.empty() || b.empty())
    throw ValidationError("precedence undefined for the empty region");
  if (a == b) return false;
  return a.max_u() <= b.min_u() && a.max_v() <= b.min_v();
}

// Cutting B_A. In null coordinates the set of maximal points below all of A
// collapses to the single apex (min_u(A), min_v(A)); the cutting is B clipped
// to the past cone of that apex. The one degenerate case, clip == A (A a
// single point inside B), must return the empty region since A prec A fails.
inline Region region_cutting(const Region& b, const Region& a) {
  if (a.empty()) throw ValidationError("cutting by the empty region");
  if (b.empty()) return {};
  const Rat mu = a.min_u(), mv = a.min_v();
  if (b.min_u() > mu || b.min_v() > mv) return {};
  Region clip = Region::from_blocks({Block(b.min_u(), mu, b.min_v(), mv)});
  Region r = region_intersect(b, clip);
  if (r == a) return {};
  return r;
}

// A region containing every listed point and avoiding x: a small diamond per
// point, shrunk below the sup-distance to x.
inline Region separate(const std::vector<NullPoint>& points, const NullPoint& x) {
  std::vector<Block> blocks;
  for (const auto& p : points) {
    if (p == x)
      throw ValidationError("separation impossible: x coincides with an input point");
    const Rat du = abs(p.u - x.u), dv = abs(p.v - x.v);
    const Rat eps = std::max(du, dv) / 2;
    blocks.emplace_back(p.u - eps, p.u + eps, p.v - eps, p.v + eps);
  }
  return Region::from_blocks(blocks);
}

}  // namespace causaltop
