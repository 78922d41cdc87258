#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "causaltop/errors.hpp"

namespace causaltop {

// A finite set of places together with a family of place-subsets (the
// framology). Places are kept sorted; framology members are bitmasks over the
// place indices, deduplicated and sorted, so structural equality is value
// equality.
class Framework {
public:
  static constexpr std::size_t kMaxPlaces = 30;

  Framework() = default;

  Framework(std::vector<std::string> places,
            const std::vector<std::vector<std::string>>& framology) {
    std::sort(places.begin(), places.end());
    if (std::adjacent_find(places.begin(), places.end()) != places.end())
      throw ValidationError("duplicate place name");
    if (places.size() > kMaxPlaces) throw ResourceError("too many places");
    places_ = std::move(places);
    std::set<std::uint32_t> masks;
    for (const auto& member : framology) {
      std::uint32_t m = 0;
      for (const auto& name : member) m |= std::uint32_t{1} << index_of(name);
      masks.insert(m);
    }
    framology_.assign(masks.begin(), masks.end());
  }

  static Framework from_masks(std::vector<std::string> sorted_places,
                              std::vector<std::uint32_t> masks) {
    Framework fw;
    if (sorted_places.size() > kMaxPlaces) throw ResourceError("too many places");
    fw.places_ = std::move(sorted_places);
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    fw.framology_ = std::move(masks);
    return fw;
  }

  const std::vector<std::string>& places() const { return places_; }
  const std::vector<std::uint32_t>& framology() const { return framology_; }
  std::size_t place_count() const { return places_.size(); }

  int index_of(const std::string& name) const {
    auto it = std::lower_bound(places_.begin(), places_.end(), name);
    if (it == places_.end() || *it != name)
      throw ValidationError("unknown place: " + name);
    return static_cast<int>(it - places_.begin());
  }

  std::vector<std::string> member_names(std::uint32_t mask) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < places_.size(); ++i)
      if (mask >> i & 1u) out.push_back(places_[i]);
    return out;
  }

  // Set-builder style name for a place subset, used to mint place names for
  // dual and quotient frameworks.
  std::string subset_name(std::uint32_t mask) const {
    std::string s = "{";
    bool first = true;
    for (const auto& n : member_names(mask)) {
      if (!first) s += ",";
      s += n;
      first = false;
    }
    return s + "}";
  }

  // pi(x) as a bitmask over framology indices.
  std::uint32_t point_mask(int place) const {
    std::uint32_t m = 0;
    for (std::size_t k = 0; k < framology_.size(); ++k)
      if (framology_[k] >> place & 1u) m |= std::uint32_t{1} << k;
    return m;
  }

  bool operator==(const Framework&) const = default;

private:
  std::vector<std::string> places_;        // sorted, unique
  std::vector<std::uint32_t> framology_;   // sorted, unique subset masks
};

struct FrameworkMorphism {
  Framework source;
  Framework target;
  std::vector<int> map;  // source place index -> target place index
};

struct IsomorphismWitness {
  FrameworkMorphism forward;
  FrameworkMorphism backward;
};

// Two distinct places must be separated by some framology member.
inline bool is_T0(const Framework& fw) {
  const auto n = fw.place_count();
  for (std::size_t x = 0; x + 1 < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      bool separated = false;
      for (auto m : fw.framology())
        if ((m >> x & 1u) != (m >> y & 1u)) {
          separated = true;
          break;
        }
      if (!separated) return false;
    }
  return true;
}

// Places of the dual are the framology members; the dual framology consists
// of the sets pi(x) = {U in framology : x in U}.
inline Framework dualize(const Framework& fw) {
  if (fw.framology().size() > Framework::kMaxPlaces)
    throw ResourceError("framology too large to dualize");
  std::vector<std::string> dual_names;  // indexed like fw.framology()
  for (auto m : fw.framology()) dual_names.push_back(fw.subset_name(m));
  std::vector<std::vector<std::string>> dual_framology;
  for (std::size_t x = 0; x < fw.place_count(); ++x) {
    const std::uint32_t pm = fw.point_mask(static_cast<int>(x));
    std::vector<std::string> member;
    for (std::size_t k = 0; k < dual_names.size(); ++k)
      if (pm >> k & 1u) member.push_back(dual_names[k]);
    dual_framology.push_back(std::move(member));
  }
  return Framework(dual_names, dual_framology);
}

// Quotient by a partition of the places; classes are named by their contents.
inline Framework quotient(const Framework& fw,
                          const std::vector<std::vector<std::string>>& partition) {
  std::vector<int> cls(fw.place_count(), -1);
  std::vector<std::uint32_t> class_masks;
  for (const auto& block : partition) {
    if (block.empty()) throw ValidationError("empty partition class");
    std::uint32_t m = 0;
    for (const auto& name : block) {
      const int i = fw.index_of(name);
      if (cls[i] != -1) throw ValidationError("place in two partition classes: " + name);
      cls[i] = static_cast<int>(class_masks.size());
      m |= std::uint32_t{1} << i;
    }
    class_masks.push_back(m);
  }
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (cls[i] == -1)
      throw ValidationError("place missing from partition: " + fw.places()[i]);

  std::vector<std::string> class_names;
  for (auto m : class_masks) class_names.push_back(fw.subset_name(m));
  std::vector<std::vector<std::string>> framology;
  for (auto u : fw.framology()) {
    std::set<std::string> image;
    for (std::size_t i = 0; i < fw.place_count(); ++i)
      if (u >> i & 1u) image.insert(class_names[cls[i]]);
    framology.emplace_back(image.begin(), image.end());
  }
  return Framework(class_names, framology);
}

// f is a morphism iff the image of every source framology member is a target
// framology member.
inline bool check_morphism(const FrameworkMorphism& m) {
  if (m.map.size() != m.source.place_count())
    throw ValidationError("morphism map is not total");
  for (auto u : m.source.framology()) {
    std::uint32_t image = 0;
    for (std::size_t i = 0; i < m.map.size(); ++i)
      if (u >> i & 1u) image |= std::uint32_t{1} << m.map[i];
    const auto& tf = m.target.framology();
    if (!std::binary_search(tf.begin(), tf.end(), image)) return false;
  }
  return true;
}

struct DoubleDualResult {
  Framework double_dual;
  Framework quotient;  // fw modulo the kernel of x -> pi(x)
  bool t0 = false;
  // Relates fw (when T0) or the quotient (otherwise) to the double dual.
  IsomorphismWitness witness;
};

inline DoubleDualResult double_dual_isomorphism(const Framework& fw) {
  DoubleDualResult res;
  const Framework d1 = dualize(fw);
  res.double_dual = dualize(d1);
  res.t0 = is_T0(fw);

  // Kernel classes of x -> pi(x).
  std::map<std::uint32_t, std::vector<std::string>> classes;
  for (std::size_t x = 0; x < fw.place_count(); ++x)
    classes[fw.point_mask(static_cast<int>(x))].push_back(fw.places()[x]);
  std::vector<std::vector<std::string>> partition;
  for (auto& [mask, names] : classes) partition.push_back(names);
  res.quotient = quotient(fw, partition);

  // The place of the double dual corresponding to pi(x) is named by the set
  // of d1-place names {U : x in U}; recompute that name from the masks.
  auto dd_name = [&](std::uint32_t pi_mask) {
    std::uint32_t d1_mask = 0;
    for (std::size_t k = 0; k < fw.framology().size(); ++k)
      if (pi_mask >> k & 1u)
        d1_mask |= std::uint32_t{1} << d1.index_of(fw.subset_name(fw.framology()[k]));
    return d1.subset_name(d1_mask);
  };

  const Framework& src = res.t0 ? fw : res.quotient;
  std::vector<int> fwd(src.place_count());
  std::vector<int> bwd(res.double_dual.place_count(), -1);
  for (std::size_t x = 0; x < fw.place_count(); ++x) {
    const std::uint32_t pm = fw.point_mask(static_cast<int>(x));
    const int ti = res.double_dual.index_of(dd_name(pm));
    int source_index;
    if (res.t0) {
      source_index = static_cast<int>(x);
    } else {
      // The quotient class of x is named by the kernel class containing it.
      std::uint32_t class_mask = 0;
      for (std::size_t y = 0; y < fw.place_count(); ++y)
        if (fw.point_mask(static_cast<int>(y)) == pm)
          class_mask |= std::uint32_t{1} << y;
      source_index = src.index_of(fw.subset_name(class_mask));
    }
    fwd[source_index] = ti;
    bwd[ti] = source_index;
  }
  res.witness.forward = {src, res.double_dual, fwd};
  res.witness.backward = {res.double_dual, src, bwd};
  return res;
}

namespace detail {

inline std::vector<std::vector<int>> place_profiles(const Framework& fw) {
  std::vector<std::vector<int>> prof(fw.place_count());
  for (std::size_t x = 0; x < fw.place_count(); ++x) {
    for (auto m : fw.framology())
      if (m >> x & 1u) prof[x].push_back(std::popcount(m));
    std::sort(prof[x].begin(), prof[x].end());
  }
  return prof;
}

}  // namespace detail

// Backtracking isomorphism search with degree-profile pruning. Deterministic:
// candidates are tried in canonical place order.
inline std::optional<IsomorphismWitness> frameworks_isomorphic(const Framework& a,
                                                               const Framework& b) {
  constexpr std::size_t kGuard = 12;
  if (a.place_count() > kGuard || b.place_count() > kGuard)
    throw ResourceError("isomorphism search limited to 12 places");
  if (a.place_count() != b.place_count() ||
      a.framology().size() != b.framology().size())
    return std::nullopt;
  auto sizes = [](const Framework& fw) {
    std::vector<int> s;
    for (auto m : fw.framology()) s.push_back(std::popcount(m));
    std::sort(s.begin(), s.end());
    return s;
  };
  if (sizes(a) != sizes(b)) return std::nullopt;

  const auto pa = detail::place_profiles(a);
  const auto pb = detail::place_profiles(b);
  const std::size_t n = a.place_count();
  std::vector<int> assign(n, -1);
  std::vector<bool> used(n, false);

  auto framology_matches = [&] {
    for (auto u : a.framology()) {
      std::uint32_t image = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (u >> i & 1u) image |= std::uint32_t{1} << assign[i];
      const auto& bf = b.framology();
      if (!std::binary_search(bf.begin(), bf.end(), image)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return framology_matches();
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || pa[depth] != pb[j]) continue;
      assign[depth] = static_cast<int>(j);
      used[j] = true;
      if (self(self, depth + 1)) return true;
      used[j] = false;
      assign[depth] = -1;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;

  std::vector<int> inverse(n);
  for (std::size_t i = 0; i < n; ++i) inverse[assign[i]] = static_cast<int>(i);
  return IsomorphismWitness{{a, b, assign}, {b, a, inverse}};
}

}  // namespace causaltop
