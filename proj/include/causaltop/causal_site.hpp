#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "causaltop/errors.hpp"
#include "causaltop/topology.hpp"

namespace causaltop {

using Bits = boost::dynamic_bitset<>;

// A finite carrier with a partial order (bottom, binary joins) and a strict
// causal order. Relations are stored exactly as given; validation reports
// every axiom the data violates instead of fixing it up.
class CausalSite {
public:
  static constexpr std::size_t kMaxElements = 512;

  CausalSite(std::vector<std::string> names, int bottom,
             const std::vector<std::pair<int, int>>& leq_pairs,
             const std::vector<std::pair<int, int>>& prec_pairs)
      : names_(std::move(names)), bottom_(bottom) {
    const std::size_t n = names_.size();
    if (n > kMaxElements) throw ResourceError("causal site too large");
    if (bottom_ < 0 || static_cast<std::size_t>(bottom_) >= n)
      throw ValidationError("bottom index out of range");
    up_.assign(n, Bits(n));
    down_.assign(n, Bits(n));
    succ_.assign(n, Bits(n));
    pred_.assign(n, Bits(n));
    for (auto [a, b] : leq_pairs) {
      up_[a].set(b);
      down_[b].set(a);
    }
    for (auto [a, b] : prec_pairs) {
      succ_[a].set(b);
      pred_[b].set(a);
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  int bottom() const { return bottom_; }

  int index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw ValidationError("unknown element: " + name);
    return static_cast<int>(it - names_.begin());
  }

  bool leq(int a, int b) const { return up_[a].test(b); }
  bool prec(int a, int b) const { return succ_[a].test(b); }
  const Bits& up(int a) const { return up_[a]; }       // {b : a leq b}
  const Bits& down(int a) const { return down_[a]; }   // {b : b leq a}
  const Bits& pred_of(int a) const { return pred_[a]; }  // {c : c prec a}
  const Bits& succ_of(int a) const { return succ_[a]; }  // {c : a prec c}

  // Least upper bound within the carrier, if it exists.
  std::optional<int> join(int a, int b) const {
    Bits ub = up_[a] & up_[b];
    for (auto m = ub.find_first(); m != Bits::npos; m = ub.find_next(m))
      if (ub.is_subset_of(up_[m])) return static_cast<int>(m);
    return std::nullopt;
  }

private:
  std::vector<std::string> names_;
  int bottom_;
  std::vector<Bits> up_, down_, succ_, pred_;
};

struct Violation {
  std::string axiom;
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

struct CuttingResult {
  // Elements satisfying both cutting clauses; by antisymmetry there is at
  // most one, but the search reports everything it found.
  std::vector<int> candidates;
  std::optional<int> greatest;
};

// Exhaustive search for the cutting of a by b. When no nonbottom candidate
// precedes a inside b, bottom is accepted unless `strict` is set.
inline CuttingResult find_cutting(const CausalSite& cs, int a, int b,
                                  bool strict = false) {
  CuttingResult res;
  const int bot = cs.bottom();
  Bits need = cs.pred_of(a) & cs.down(b);  // everything clause (b) must cover
  need.reset(bot);
  for (std::size_t c = 0; c < cs.size(); ++c) {
    const bool clause_a =
        (cs.prec(static_cast<int>(c), a) || (!strict && static_cast<int>(c) == bot)) &&
        cs.leq(static_cast<int>(c), b);
    if (!clause_a) continue;
    if (need.is_subset_of(cs.down(static_cast<int>(c))))
      res.candidates.push_back(static_cast<int>(c));
  }
  for (int c : res.candidates) {
    bool greatest = true;
    for (int d : res.candidates)
      if (!cs.leq(d, c)) {
        greatest = false;
        break;
      }
    if (greatest) {
      res.greatest = c;
      break;
    }
  }
  return res;
}

namespace detail {

inline void report(ValidationReport& r, const char* axiom, std::string witness) {
  r.violations.push_back({axiom, std::move(witness)});
}

}  // namespace detail

// Checks the partial-order requirements, the strict-order requirements and
// the four linking axioms, returning a concrete witness for each violation.
inline ValidationReport validate_causal_site(const CausalSite& cs,
                                             bool strict_cutting = false) {
  ValidationReport rep;
  const std::size_t n = cs.size();
  const int bot = cs.bottom();
  auto name = [&](std::size_t i) { return cs.names()[i]; };

  for (std::size_t a = 0; a < n; ++a) {
    if (!cs.leq(a, a)) detail::report(rep, "leq-reflexive", name(a));
    if (!cs.leq(bot, a)) detail::report(rep, "leq-bottom-least", name(a));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && cs.leq(a, b) && cs.leq(b, a))
        detail::report(rep, "leq-antisymmetric", name(a) + "," + name(b));
      if (cs.leq(a, b) && !cs.down(a).is_subset_of(cs.down(b)))
        detail::report(rep, "leq-transitive", name(a) + "," + name(b));
    }
  // Join table, reused by axiom (iii).
  std::vector<std::vector<int>> join_of(n, std::vector<int>(n, -1));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      auto j = cs.join(static_cast<int>(a), static_cast<int>(b));
      if (j) {
        join_of[a][b] = join_of[b][a] = *j;
      } else {
        detail::report(rep, "leq-join-exists", name(a) + "," + name(b));
      }
    }

  for (std::size_t a = 0; a < n; ++a) {
    if (a == static_cast<std::size_t>(bot)) continue;
    if (cs.prec(a, a)) detail::report(rep, "prec-antireflexive", name(a));
    for (std::size_t b = 0; b < n; ++b) {
      if (b == static_cast<std::size_t>(bot)) continue;
      if (cs.prec(a, b) && !(cs.pred_of(a) - Bits(n).set(bot)).is_subset_of(cs.pred_of(b)))
        detail::report(rep, "prec-transitive", name(a) + "," + name(b));
    }
    if (cs.prec(a, bot) || cs.prec(bot, a))
      detail::report(rep, "prec-excludes-bottom", name(a));
  }

  Bits nonbot(n);
  nonbot.set();
  nonbot.reset(bot);

  // (i) b leq a and a prec c implies b prec c.
  for (std::size_t a = 0; a < n; ++a) {
    if (a == static_cast<std::size_t>(bot)) continue;
    const Bits& succ_a = cs.succ_of(static_cast<int>(a));
    for (auto c = succ_a.find_first(); c != Bits::npos; c = succ_a.find_next(c)) {
      Bits lower = cs.down(static_cast<int>(a)) & nonbot;
      if (!lower.is_subset_of(cs.pred_of(static_cast<int>(c))))
        detail::report(rep, "axiom-i", name(a) + " prec " + name(c));
    }
    // (ii) b leq a and c prec a implies c prec b.
    Bits lower = cs.down(static_cast<int>(a)) & nonbot;
    for (auto b = lower.find_first(); b != Bits::npos; b = lower.find_next(b)) {
      Bits preds = cs.pred_of(static_cast<int>(a)) & nonbot;
      if (!preds.is_subset_of(cs.pred_of(static_cast<int>(b))))
        detail::report(rep, "axiom-ii", name(b) + " leq " + name(a));
    }
  }

  // (iii) a prec c and b prec c implies (a join b) prec c.
  for (std::size_t c = 0; c < n; ++c) {
    if (c == static_cast<std::size_t>(bot)) continue;
    Bits preds = cs.pred_of(static_cast<int>(c)) & nonbot;
    for (auto a = preds.find_first(); a != Bits::npos; a = preds.find_next(a))
      for (auto b = preds.find_next(a); b != Bits::npos; b = preds.find_next(b)) {
        const int j = join_of[a][b];
        if (j >= 0 && !preds.test(j))
          detail::report(rep, "axiom-iii",
                         name(a) + "," + name(b) + " prec " + name(c));
      }
  }

  // (iv) every pair has a cutting.
  for (std::size_t a = 0; a < n; ++a) {
    if (a == static_cast<std::size_t>(bot)) continue;
    for (std::size_t b = 0; b < n; ++b) {
      auto cut = find_cutting(cs, static_cast<int>(a), static_cast<int>(b),
                              strict_cutting);
      if (!cut.greatest)
        detail::report(rep, "axiom-iv", "a=" + name(a) + ", b=" + name(b));
    }
  }
  return rep;
}

// Inclusion-maximal members of { up(y) \ {bottom} : y != bottom }. For finite
// carriers these are exactly the maximal centered subsets.
inline std::vector<std::vector<int>> maximal_centered_families(const CausalSite& cs) {
  const std::size_t n = cs.size();
  const int bot = cs.bottom();
  std::vector<Bits> ups;
  for (std::size_t y = 0; y < n; ++y) {
    if (y == static_cast<std::size_t>(bot)) continue;
    Bits u = cs.up(static_cast<int>(y));
    u.reset(bot);
    if (u.none()) continue;
    if (std::find(ups.begin(), ups.end(), u) == ups.end()) ups.push_back(u);
  }
  std::vector<std::vector<int>> out;
  for (const auto& u : ups) {
    bool maximal = true;
    for (const auto& v : ups)
      if (u != v && u.is_subset_of(v)) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    std::vector<int> fam;
    for (auto i = u.find_first(); i != Bits::npos; i = u.find_next(i))
      fam.push_back(static_cast<int>(i));
    out.push_back(std::move(fam));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Theorem-style synthesis: points are the maximal centered families, the
// closed subbase is { pi(x) : x in S }. The result must come out compact T1.
inline FiniteTopology synthesize_topology(const CausalSite& cs) {
  const auto families = maximal_centered_families(cs);
  std::vector<std::string> ground;
  for (const auto& fam : families) {
    std::string nm = "{";
    for (std::size_t i = 0; i < fam.size(); ++i) {
      if (i) nm += ",";
      nm += cs.names()[fam[i]];
    }
    ground.push_back(nm + "}");
  }
  std::vector<std::vector<std::string>> subbase;
  for (std::size_t x = 0; x < cs.size(); ++x) {
    std::vector<std::string> member;
    for (std::size_t f = 0; f < families.size(); ++f)
      if (std::binary_search(families[f].begin(), families[f].end(),
                             static_cast<int>(x)))
        member.push_back(ground[f]);
    subbase.push_back(std::move(member));
  }
  FiniteTopology t = generate_from_closed_subbase(ground, subbase);
  if (!is_T1(t) || !check_fip_compactness(t, subbase))
    throw ValidationError("synthesized topology is not compact T1; input site invalid?");
  return t;
}

}  // namespace causaltop
