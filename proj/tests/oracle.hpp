#pragma once

// Brute-force reference implementations written straight from the
// definitions, sharing nothing with the library beyond Subset and FinSpace.

#include <cstddef>
#include <optional>
#include <vector>

#include "sctop/space.hpp"

namespace oracle {

using sctop::FinSpace;
using sctop::Subset;

inline std::vector<Subset> closed_sets(const FinSpace& x) {
  std::vector<Subset> out;
  for (const auto& u : x.opens()) out.push_back(~u);
  return out;
}

/// x <= y iff every open containing x contains y.
inline bool leq(const FinSpace& x, std::size_t a, std::size_t b) {
  for (const auto& u : x.opens())
    if (u.contains(a) && !u.contains(b)) return false;
  return true;
}

/// Nonempty, and inside one of any two closed sets covering it.
inline bool irreducible(const FinSpace& x, const Subset& f) {
  if (f.empty()) return false;
  const auto cs = oracle::closed_sets(x);
  for (const auto& a : cs)
    for (const auto& b : cs)
      if (f.is_subset_of(a | b) && !f.is_subset_of(a) && !f.is_subset_of(b)) return false;
  return true;
}

inline std::optional<std::size_t> sup(const FinSpace& x, const Subset& f) {
  std::vector<std::size_t> ubs;
  for (std::size_t u = 0; u < x.size(); ++u) {
    bool ub = true;
    f.for_each([&](std::size_t a) { ub = ub && leq(x, a, u); });
    if (ub) ubs.push_back(u);
  }
  for (auto u : ubs) {
    bool least = true;
    for (auto v : ubs) least = least && leq(x, u, v);
    if (least) return u;
  }
  return std::nullopt;
}

/// Contains the supremum of every irreducible subset with a supremum.
inline bool i_closed(const FinSpace& x, const Subset& a) {
  bool ok = true;
  sctop::for_each_subset_of(a, [&](const Subset& f) {
    if (!ok || !irreducible(x, f)) return;
    if (auto s = sup(x, f)) ok = a.contains(*s);
  });
  return ok;
}

/// Open, and met by every Irr+ set whose supremum it contains.
inline bool si_open(const FinSpace& x, const Subset& u) {
  if (!x.opens().contains(u)) return false;
  bool ok = true;
  sctop::for_each_subset(x.size(), [&](const Subset& f) {
    if (!ok || !irreducible(x, f)) return;
    if (auto s = sup(x, f); s && u.contains(*s)) ok = f.intersects(u);
  });
  return ok;
}

/// Intersection of all I-closed supersets.
inline Subset i_closure(const FinSpace& x, const Subset& a) {
  Subset out = Subset::full(x.size());
  sctop::for_each_subset(x.size(), [&](const Subset& c) {
    if (a.is_subset_of(c) && i_closed(x, c)) out &= c;
  });
  return out;
}

}  // namespace oracle
