#pragma once

#include <cstddef>
#include <vector>

#include "causaltop/errors.hpp"
#include "causaltop/rational.hpp"

namespace causaltop {

enum class CausalCharacter { Timelike, Null, Spacelike };
enum class TimeOrientation { Future, Past, Neither };
enum class Cone { Future, Past, Both };

// A (1+d)-vector of exact rationals, d >= 1; coords[0] is time.
struct MinkVec {
  std::vector<Rat> coords;

  MinkVec() = default;
  explicit MinkVec(std::vector<Rat> c) : coords(std::move(c)) {
    if (coords.size() < 2 || coords.size() > 4)
      throw ValidationError("vector dimension must be 1+d with d in {1,2,3}");
  }

  std::size_t dim() const { return coords.size(); }
  const Rat& t() const { return coords[0]; }

  friend MinkVec operator+(const MinkVec& a, const MinkVec& b) {
    if (a.dim() != b.dim()) throw ValidationError("dimension mismatch");
    std::vector<Rat> c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a.coords[i] + b.coords[i];
    return MinkVec(std::move(c));
  }
  friend MinkVec operator-(const MinkVec& a, const MinkVec& b) {
    if (a.dim() != b.dim()) throw ValidationError("dimension mismatch");
    std::vector<Rat> c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a.coords[i] - b.coords[i];
    return MinkVec(std::move(c));
  }
  bool operator==(const MinkVec&) const = default;
};

// Inner product with signature (1, -1, ..., -1).
inline Rat eta(const MinkVec& v, const MinkVec& w) {
  if (v.dim() != w.dim()) throw ValidationError("dimension mismatch");
  Rat sum = v.coords[0] * w.coords[0];
  for (std::size_t i = 1; i < v.dim(); ++i) sum -= v.coords[i] * w.coords[i];
  return sum;
}

struct VecClass {
  CausalCharacter character;
  TimeOrientation orientation;
  bool operator==(const VecClass&) const = default;
};

inline VecClass classify(const MinkVec& v) {
  const Rat q = eta(v, v);
  VecClass c;
  c.character = q > 0   ? CausalCharacter::Timelike
                : q == 0 ? CausalCharacter::Null
                         : CausalCharacter::Spacelike;
  c.orientation = v.t() > 0   ? TimeOrientation::Future
                  : v.t() < 0 ? TimeOrientation::Past
                              : TimeOrientation::Neither;
  return c;
}

// v << w: the difference is timelike and future-oriented.
inline bool chron_lt(const MinkVec& v, const MinkVec& w) {
  const VecClass c = classify(w - v);
  return c.character == CausalCharacter::Timelike &&
         c.orientation == TimeOrientation::Future;
}

// p <= q: the difference is non-past-oriented and non-spacelike.
inline bool causal_le(const MinkVec& p, const MinkVec& q) {
  const MinkVec d = q - p;
  return d.t() >= 0 && eta(d, d) >= 0;
}

inline bool in_cone(const MinkVec& x, const MinkVec& p, Cone which) {
  switch (which) {
    case Cone::Future: return causal_le(p, x);
    case Cone::Past: return causal_le(x, p);
    case Cone::Both: return causal_le(p, x) || causal_le(x, p);
  }
  return false;
}

// Membership in the closed diamond J+(p) n J-(q).
inline bool diamond_contains(const MinkVec& p, const MinkVec& q, const MinkVec& x) {
  if (!causal_le(p, q)) throw ValidationError("invalid diamond: p is not causally below q");
  return causal_le(p, x) && causal_le(x, q);
}

}  // namespace causaltop
