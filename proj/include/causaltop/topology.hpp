#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "causaltop/errors.hpp"

namespace causaltop {

// A finite topological space stored by its closed sets. Points are kept in a
// canonical sorted order and subsets are bitmasks over the point indices.
class FiniteTopology {
public:
  static constexpr std::size_t kMaxPoints = 24;

  FiniteTopology() : closed_{0} {}

  static FiniteTopology from_closed_masks(std::vector<std::string> sorted_points,
                                          std::vector<std::uint32_t> closed) {
    FiniteTopology t;
    if (sorted_points.size() > kMaxPoints) throw ResourceError("ground set too large");
    t.points_ = std::move(sorted_points);
    std::sort(closed.begin(), closed.end());
    closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
    t.closed_ = std::move(closed);
    t.check_invariants();
    return t;
  }

  const std::vector<std::string>& points() const { return points_; }
  const std::vector<std::uint32_t>& closed_sets() const { return closed_; }
  std::uint32_t ground_mask() const {
    return points_.empty() ? 0u : (std::uint32_t{1} << points_.size()) - 1;
  }

  int index_of(const std::string& name) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), name);
    if (it == points_.end() || *it != name)
      throw ValidationError("unknown point: " + name);
    return static_cast<int>(it - points_.begin());
  }

  bool is_closed(std::uint32_t mask) const {
    return std::binary_search(closed_.begin(), closed_.end(), mask);
  }

  // Smallest closed set containing the given mask.
  std::uint32_t closure(std::uint32_t mask) const {
    std::uint32_t c = ground_mask();
    for (auto s : closed_)
      if ((mask & ~s) == 0) c &= s;
    return c;
  }

  std::vector<std::string> member_names(std::uint32_t mask) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (mask >> i & 1u) out.push_back(points_[i]);
    return out;
  }

  bool operator==(const FiniteTopology&) const = default;

private:
  void check_invariants() const {
    const auto g = ground_mask();
    if (!is_closed(0) || !is_closed(g))
      throw ValidationError("closed sets must contain the empty set and the ground set");
    for (auto a : closed_) {
      if ((a & ~g) != 0) throw ValidationError("closed set not a subset of ground");
      for (auto b : closed_) {
        if (!is_closed(a | b)) throw ValidationError("closed sets not closed under union");
        if (!is_closed(a & b)) throw ValidationError("closed sets not closed under intersection");
      }
    }
  }

  std::vector<std::string> points_;       // sorted, unique
  std::vector<std::uint32_t> closed_;     // sorted, unique
};

// Reflexive-transitive specialization relation: x <= y iff x lies in the
// closure of {y}.
struct SpecializationPreorder {
  std::vector<std::string> points;
  std::vector<std::uint32_t> below;  // below[y] = {x : x <= y}
};

// Least family of closed sets containing the subbase, the empty set and the
// ground set, closed under pairwise union and intersection.
inline FiniteTopology generate_from_closed_subbase(
    std::vector<std::string> points, const std::vector<std::vector<std::string>>& subbase) {
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end())
    throw ValidationError("duplicate point name");
  if (points.size() > FiniteTopology::kMaxPoints)
    throw ResourceError("ground set too large");
  const std::uint32_t g =
      points.empty() ? 0u : (std::uint32_t{1} << points.size()) - 1;
  FiniteTopology lookup = FiniteTopology::from_closed_masks(points, {0u, g});

  std::set<std::uint32_t> family = {0u, g};
  for (const auto& member : subbase) {
    std::uint32_t m = 0;
    for (const auto& name : member) m |= std::uint32_t{1} << lookup.index_of(name);
    family.insert(m);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint32_t> snapshot(family.begin(), family.end());
    for (auto a : snapshot)
      for (auto b : snapshot) {
        grew |= family.insert(a | b).second;
        grew |= family.insert(a & b).second;
      }
  }
  return FiniteTopology::from_closed_masks(points,
                                           {family.begin(), family.end()});
}

inline bool is_T1(const FiniteTopology& t) {
  for (std::size_t i = 0; i < t.points().size(); ++i)
    if (!t.is_closed(std::uint32_t{1} << i)) return false;
  return true;
}

inline SpecializationPreorder specialization(const FiniteTopology& t) {
  SpecializationPreorder sp;
  sp.points = t.points();
  sp.below.resize(t.points().size());
  for (std::size_t y = 0; y < t.points().size(); ++y)
    sp.below[y] = t.closure(std::uint32_t{1} << y);
  return sp;
}

// Exhaustive Alexander-subbase style compactness check: every subbase
// subfamily with the finite intersection property must have nonempty
// intersection. `has_fip` may override the f.i.p. test (the default computes
// real intersections); tests use the override to inject counterexamples.
inline bool subbase_fip_implies_nonempty(
    const std::vector<std::uint32_t>& subbase,
    const std::function<bool(const std::vector<std::uint32_t>&)>& has_fip = {}) {
  if (subbase.size() > 20) throw ResourceError("subbase too large for exhaustive check");
  const std::uint32_t limit = std::uint32_t{1} << subbase.size();
  for (std::uint32_t sel = 1; sel < limit; ++sel) {
    std::vector<std::uint32_t> subfamily;
    std::uint32_t inter = ~std::uint32_t{0};
    for (std::size_t k = 0; k < subbase.size(); ++k)
      if (sel >> k & 1u) {
        subfamily.push_back(subbase[k]);
        inter &= subbase[k];
      }
    const bool fip = has_fip ? has_fip(subfamily) : inter != 0;
    if (fip && inter == 0) return false;
  }
  return true;
}

inline bool check_fip_compactness(const FiniteTopology& t,
                                  const std::vector<std::vector<std::string>>& subbase) {
  if (generate_from_closed_subbase(t.points(), subbase) != t)
    throw ValidationError("subbase does not generate the topology");
  std::vector<std::uint32_t> masks;
  for (const auto& member : subbase) {
    std::uint32_t m = 0;
    for (const auto& name : member) m |= std::uint32_t{1} << t.index_of(name);
    masks.push_back(m);
  }
  return subbase_fip_implies_nonempty(masks);
}

// On a finite space every set is compact and the saturated sets are exactly
// the up-sets of the specialization preorder, so the dual's closed sets are
// the up-sets.
inline FiniteTopology de_groot_dual(const FiniteTopology& t) {
  const std::size_t n = t.points().size();
  if (n > 20) throw ResourceError("ground set too large for dualization");
  const auto sp = specialization(t);
  std::vector<std::uint32_t> up(n);  // up[x] = {y : x <= y}
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (sp.below[y] >> x & 1u) up[x] |= std::uint32_t{1} << y;
  std::vector<std::uint32_t> closed;
  const std::uint32_t limit = n == 0 ? 1 : std::uint32_t{1} << n;
  for (std::uint32_t s = 0; s < limit; ++s) {
    std::uint32_t sat = 0;
    for (std::size_t x = 0; x < n; ++x)
      if (s >> x & 1u) sat |= up[x];
    if (sat == s) closed.push_back(s);
  }
  if (closed.empty()) closed.push_back(0);
  return FiniteTopology::from_closed_masks(t.points(), closed);
}

// [tau, tau^G, tau^GG, ...] truncated at the first repetition.
inline std::vector<FiniteTopology> dual_iteration(const FiniteTopology& t,
                                                  std::size_t max_steps = 8) {
  if (max_steps < 4) throw ValidationError("max_steps must be at least 4");
  std::vector<FiniteTopology> seq{t};
  for (std::size_t i = 1; i < max_steps; ++i) {
    FiniteTopology next = de_groot_dual(seq.back());
    if (std::find(seq.begin(), seq.end(), next) != seq.end()) break;
    seq.push_back(std::move(next));
  }
  return seq;
}

// No two nonempty open sets are disjoint.
inline bool is_superconnected(const FiniteTopology& t) {
  const std::uint32_t g = t.ground_mask();
  for (auto c1 : t.closed_sets())
    for (auto c2 : t.closed_sets()) {
      const std::uint32_t u1 = g & ~c1, u2 = g & ~c2;
      if (u1 != 0 && u2 != 0 && (u1 & u2) == 0) return false;
    }
  return true;
}

// Subspace topology.
inline FiniteTopology restrict(const FiniteTopology& t,
                               const std::vector<std::string>& subset) {
  std::uint32_t sub = 0;
  for (const auto& name : subset) sub |= std::uint32_t{1} << t.index_of(name);
  std::vector<std::string> points = t.member_names(sub);
  // Re-pack masks into the subset's own index space.
  std::vector<int> remap(t.points().size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < t.points().size(); ++i)
    if (sub >> i & 1u) remap[i] = next++;
  std::vector<std::uint32_t> closed;
  for (auto c : t.closed_sets()) {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < t.points().size(); ++i)
      if ((c & sub) >> i & 1u) m |= std::uint32_t{1} << remap[i];
    closed.push_back(m);
  }
  return FiniteTopology::from_closed_masks(points, closed);
}

}  // namespace causaltop
