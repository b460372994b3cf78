#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sctop/error.hpp"
#include "sctop/order.hpp"
#include "sctop/subset.hpp"

namespace sctop {

/// Upper bound on the size of a materialized open family.
inline constexpr std::size_t kMaxOpens = std::size_t{1} << 21;

/// How irreducibility is decided.
enum class IrrRoute {
  /// Literal criterion: whenever F meets two opens it meets their intersection.
  OpenPairs,
  /// The same criterion restricted to the minimal open neighbourhoods of the
  /// points of F, which generate every open meeting F.
  Neighbourhoods,
  /// Finite-space shortcut: F is nonempty and has a greatest element.
  Maximum,
};

/// An irreducible set together with its supremum.
struct IrrPlusEntry {
  Subset set;
  std::size_t sup;
};

/// A finite T0 space given by its family of open sets.
///
/// The value is an immutable handle; copies share the underlying data and a
/// lazily filled cache of the enumeration-heavy families (Irr, Irr+, SI opens).
class FinSpace {
 public:
  FinSpace() : FinSpace(build(0, {Subset(0)}, false)) {}

  /// Validates that `opens` contains the empty set and the carrier, is closed
  /// under binary unions and intersections, and separates points (T0).
  static FinSpace from_opens(std::size_t n, std::vector<Subset> opens) { return build(n, std::move(opens), true); }

  /// Opens supplied by a trusted construction (already a T0 topology).
  static FinSpace from_trusted_opens(std::size_t n, std::vector<Subset> opens) {
    return build(n, std::move(opens), false);
  }

  std::size_t size() const noexcept { return d_->n; }
  const SubsetFamily& opens() const noexcept { return d_->opens; }
  /// Specialization order: x <= y iff every open containing x contains y.
  const FinPoset& order() const noexcept { return d_->order; }
  /// Smallest open set containing x.
  const Subset& neighbourhood(std::size_t x) const { return d_->nbhd.at(x); }

  bool is_open(const Subset& u) const {
    check(u);
    return d_->opens.contains(u);
  }
  bool is_closed(const Subset& c) const { return is_open(~c); }

  void check(const Subset& s) const {
    if (s.universe() != size())
      throw Error(ErrorKind::IndexOutOfRange, "subset over a carrier of size " + std::to_string(s.universe()) +
                                                  " used with a space of size " + std::to_string(size()));
  }

  friend bool operator==(const FinSpace& a, const FinSpace& b) {
    return a.d_ == b.d_ || (a.d_->n == b.d_->n && a.d_->opens == b.d_->opens);
  }

  // Lazily computed families; callers enforce enumeration caps first.
  const SubsetFamily& cached_irr() const {
    std::call_once(d_->cache.irr_once, [&] { d_->cache.irr = compute_irr(); });
    return d_->cache.irr;
  }
  const std::vector<IrrPlusEntry>& cached_irr_plus() const {
    std::call_once(d_->cache.plus_once, [&] {
      for (const auto& f : cached_irr())
        if (auto s = sup(order(), f)) d_->cache.irr_plus.push_back({f, *s});
    });
    return d_->cache.irr_plus;
  }
  const SubsetFamily& cached_si_opens() const {
    std::call_once(d_->cache.si_once, [&] {
      d_->cache.si_opens = d_->opens.filter([&](const Subset& u) { return inaccessible(u); });
    });
    return d_->cache.si_opens;
  }

  /// Clause (ii) of SI-openness: sup F in U forces F to meet U, for F in Irr+.
  bool inaccessible(const Subset& u) const {
    for (const auto& e : cached_irr_plus())
      if (u.contains(e.sup) && !e.set.intersects(u)) return false;
    return true;
  }

  /// Neighbourhood-route irreducibility (no cap involved).
  bool irreducible_by_neighbourhoods(const Subset& f) const {
    if (f.empty()) return false;
    const auto idx = f.indices();
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j)
        if (!(d_->nbhd[idx[i]] & d_->nbhd[idx[j]]).intersects(f)) return false;
    return true;
  }

 private:
  struct Cache {
    std::once_flag irr_once;
    SubsetFamily irr;
    std::once_flag plus_once;
    std::vector<IrrPlusEntry> irr_plus;
    std::once_flag si_once;
    SubsetFamily si_opens;
  };
  struct Data {
    std::size_t n = 0;
    SubsetFamily opens;
    std::vector<Subset> nbhd;
    FinPoset order;
    mutable Cache cache;
  };

  explicit FinSpace(std::shared_ptr<Data> d) : d_(std::move(d)) {}

  static FinSpace build(std::size_t n, std::vector<Subset> opens, bool validate) {
    auto d = std::make_shared<Data>();
    d->n = n;
    d->opens = SubsetFamily(n, std::move(opens));
    const auto& fam = d->opens;
    if (validate) {
      if (!fam.contains(Subset(n))) throw Error(ErrorKind::InvalidTopology, "open family lacks the empty set");
      if (!fam.contains(Subset::full(n))) throw Error(ErrorKind::InvalidTopology, "open family lacks the carrier");
      for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j) {
          if (!fam.contains(fam[i] | fam[j]))
            throw Error(ErrorKind::InvalidTopology,
                        "union of opens " + fam[i].word() + " and " + fam[j].word() + " is not open");
          if (!fam.contains(fam[i] & fam[j]))
            throw Error(ErrorKind::InvalidTopology,
                        "intersection of opens " + fam[i].word() + " and " + fam[j].word() + " is not open");
        }
    }
    d->nbhd.assign(n, Subset::full(n));
    for (const auto& u : fam) u.for_each([&](std::size_t x) { d->nbhd[x] &= u; });
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (d->nbhd[x].contains(y) && d->nbhd[y].contains(x))
          throw Error(ErrorKind::T0Violation, "points " + std::to_string(x) + " and " + std::to_string(y) +
                                                  " are topologically indistinguishable");
    d->order = FinPoset::from_up_sets(d->nbhd);
    return FinSpace(std::move(d));
  }

  SubsetFamily compute_irr() const {
    std::vector<Subset> out;
    for_each_subset(
        size(), [&](const Subset& f) {
          if (irreducible_by_neighbourhoods(f)) out.push_back(f);
        },
        size());
    return SubsetFamily(size(), std::move(out));
  }

  std::shared_ptr<Data> d_;
};

// ---------------------------------------------------------------------------
// Construction

/// The space whose opens are the up-sets of `p`.
inline FinSpace alexandroff(const FinPoset& p) {
  const std::size_t n = p.size();
  // Enumerate down-sets along a linear extension, then complement.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p.down(a).count() < p.down(b).count(); });
  std::vector<Subset> opens;
  Subset current(n);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      if (opens.size() >= kMaxOpens) throw Error(ErrorKind::CapExceeded, "Alexandroff topology has too many opens");
      opens.push_back(~current);
      return;
    }
    const std::size_t e = order[k];
    self(self, k + 1);
    Subset below = p.down(e);
    below.erase(e);
    if (below.is_subset_of(current)) {
      current.insert(e);
      self(self, k + 1);
      current.erase(e);
    }
  };
  rec(rec, 0);
  return FinSpace::from_trusted_opens(n, std::move(opens));
}

inline FinSpace discrete_space(std::size_t n) { return alexandroff(FinPoset::antichain(n)); }

/// Opens {}, {1}, {0,1}: 0 is below 1 in the specialization order.
inline FinSpace sierpinski() { return FinSpace::from_opens(2, {Subset(2), Subset::of(2, {1}), Subset::full(2)}); }

/// The specialization poset of the space.
inline FinPoset specialization(const FinSpace& x) { return x.order(); }

/// Closes a generating family under finite intersections (including the empty
/// intersection, the carrier) and then arbitrary unions.
inline std::vector<Subset> topology_generated_by(std::size_t n, const std::vector<Subset>& subbase) {
  std::unordered_set<Subset, SubsetHash> meets;
  std::vector<Subset> work{Subset::full(n)};
  meets.insert(Subset::full(n));
  for (const auto& s : subbase)
    if (meets.insert(s).second) work.push_back(s);
  for (std::size_t i = 0; i < work.size(); ++i)
    for (const auto& s : subbase) {
      Subset m = work[i] & s;
      if (meets.insert(m).second) work.push_back(m);
    }
  std::unordered_set<Subset, SubsetHash> opens{Subset(n)};
  std::vector<Subset> all{Subset(n)};
  for (const auto& b : work) {
    if (opens.contains(b)) continue;
    const std::size_t before = all.size();
    opens.insert(b);
    all.push_back(b);
    for (std::size_t i = 0; i < before; ++i) {
      Subset u = all[i] | b;
      if (opens.insert(u).second) {
        all.push_back(u);
        if (all.size() > kMaxOpens) throw Error(ErrorKind::CapExceeded, "generated topology has too many opens");
      }
    }
  }
  return all;
}

// ---------------------------------------------------------------------------
// Closure, irreducibility

inline Subset closure(const FinSpace& x, const Subset& a) {
  x.check(a);
  Subset out(x.size());
  for (std::size_t y = 0; y < x.size(); ++y)
    if (x.neighbourhood(y).intersects(a)) out.insert(y);
  return out;
}

inline Subset interior(const FinSpace& x, const Subset& a) {
  x.check(a);
  Subset out(x.size());
  for (std::size_t y = 0; y < x.size(); ++y)
    if (x.neighbourhood(y).is_subset_of(a)) out.insert(y);
  return out;
}

inline bool is_irreducible(const FinSpace& x, const Subset& f, IrrRoute route = IrrRoute::OpenPairs) {
  x.check(f);
  if (f.empty()) return false;
  switch (route) {
    case IrrRoute::OpenPairs: {
      std::vector<const Subset*> meeting;
      for (const auto& u : x.opens())
        if (u.intersects(f)) meeting.push_back(&u);
      for (std::size_t i = 0; i < meeting.size(); ++i)
        for (std::size_t j = i + 1; j < meeting.size(); ++j)
          if (!(*meeting[i] & *meeting[j]).intersects(f)) return false;
      return true;
    }
    case IrrRoute::Neighbourhoods:
      return x.irreducible_by_neighbourhoods(f);
    case IrrRoute::Maximum:
      return maximum(x.order(), f).has_value();
  }
  return false;
}

/// All irreducible subsets, via the requested route.
inline SubsetFamily irr_enumerate(const FinSpace& x, IrrRoute route, std::size_t cap = kDefaultCap) {
  check_cap(x.size(), cap, "Irr enumeration");
  std::vector<Subset> out;
  for_each_subset(
      x.size(), [&](const Subset& f) {
        if (is_irreducible(x, f, route)) out.push_back(f);
      },
      cap);
  return SubsetFamily(x.size(), std::move(out));
}

inline const SubsetFamily& irr_enumerate(const FinSpace& x, std::size_t cap = kDefaultCap) {
  check_cap(x.size(), cap, "Irr enumeration");
  return x.cached_irr();
}

/// Irreducible subsets whose supremum exists in the specialization order.
inline SubsetFamily irr_plus_enumerate(const FinSpace& x, std::size_t cap = kDefaultCap) {
  check_cap(x.size(), cap, "Irr+ enumeration");
  std::vector<Subset> out;
  for (const auto& e : x.cached_irr_plus()) out.push_back(e.set);
  return SubsetFamily(x.size(), std::move(out));
}

// ---------------------------------------------------------------------------
// The irreducibly-derived (SI) topology

inline bool is_si_open(const FinSpace& x, const Subset& u, std::size_t cap = kDefaultCap) {
  x.check(u);
  check_cap(x.size(), cap, "SI-openness");
  return x.is_open(u) && x.inaccessible(u);
}

inline const SubsetFamily& si_opens(const FinSpace& x, std::size_t cap = kDefaultCap) {
  check_cap(x.size(), cap, "SI topology");
  return x.cached_si_opens();
}

inline FinSpace si_space(const FinSpace& x, std::size_t cap = kDefaultCap) {
  return FinSpace::from_opens(x.size(), si_opens(x, cap).sets());
}

/// Closed, and contains the supremum of every Irr+ set it contains.
inline bool is_si_closed(const FinSpace& x, const Subset& c, std::size_t cap = kDefaultCap) {
  x.check(c);
  check_cap(x.size(), cap, "SI-closedness");
  if (!x.is_closed(c)) return false;
  for (const auto& e : x.cached_irr_plus())
    if (e.set.is_subset_of(c) && !c.contains(e.sup)) return false;
  return true;
}

/// Closure in SI(X).
inline Subset si_closure(const FinSpace& x, const Subset& a, std::size_t cap = kDefaultCap) {
  x.check(a);
  Subset outside(x.size());
  for (const auto& u : si_opens(x, cap))
    if (!u.intersects(a)) outside |= u;
  return ~outside;
}

/// SI-closed sets in canonical order.
inline SubsetFamily si_closed_sets(const FinSpace& x, std::size_t cap = kDefaultCap) {
  std::vector<Subset> out;
  for (const auto& u : si_opens(x, cap)) out.push_back(~u);
  return SubsetFamily(x.size(), std::move(out));
}

inline SubsetFamily closed_sets(const FinSpace& x) {
  std::vector<Subset> out;
  for (const auto& u : x.opens()) out.push_back(~u);
  return SubsetFamily(x.size(), std::move(out));
}

// ---------------------------------------------------------------------------
// I-closed sets and the I-closure

inline bool is_i_closed(const FinSpace& x, const Subset& a, std::size_t cap = kDefaultCap) {
  x.check(a);
  check_cap(x.size(), cap, "I-closedness");
  for (const auto& e : x.cached_irr_plus())
    if (e.set.is_subset_of(a) && !a.contains(e.sup)) return false;
  return true;
}

inline bool is_i_open(const FinSpace& x, const Subset& a, std::size_t cap = kDefaultCap) {
  return is_i_closed(x, ~a, cap);
}

/// All I-closed subsets.
inline SubsetFamily theta(const FinSpace& x, std::size_t cap = kDefaultCap) {
  check_cap(x.size(), cap, "Theta enumeration");
  std::vector<Subset> out;
  for_each_subset(
      x.size(), [&](const Subset& a) {
        if (is_i_closed(x, a, cap)) out.push_back(a);
      },
      cap);
  return SubsetFamily(x.size(), std::move(out));
}

/// All I-open subsets.
inline SubsetFamily delta(const FinSpace& x, std::size_t cap = kDefaultCap) {
  std::vector<Subset> out;
  for (const auto& a : theta(x, cap)) out.push_back(~a);
  return SubsetFamily(x.size(), std::move(out));
}

/// Least I-closed superset, computed as the least fixpoint of
/// A -> A + {sup F | F in Irr+, F subset of A}.
inline Subset cl_i(const FinSpace& x, const Subset& a, std::size_t cap = kDefaultCap) {
  x.check(a);
  check_cap(x.size(), cap, "I-closure");
  Subset cur = a;
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& e : x.cached_irr_plus())
      if (!cur.contains(e.sup) && e.set.is_subset_of(cur)) {
        cur.insert(e.sup);
        grew = true;
      }
  }
  return cur;
}

/// Intersection of every I-closed superset of A (the defining formula).
inline Subset cl_i_by_intersection(const FinSpace& x, const Subset& a, std::size_t cap = kDefaultCap) {
  x.check(a);
  Subset out = Subset::full(x.size());
  for (const auto& c : theta(x, cap))
    if (a.is_subset_of(c)) out &= c;
  return out;
}

// ---------------------------------------------------------------------------
// Completeness, sobriety, subspaces, connectedness

/// Every irreducible subset has a supremum.
inline bool is_strongly_complete(const FinSpace& x, std::size_t cap = kDefaultCap) {
  check_cap(x.size(), cap, "strong completeness");
  return x.cached_irr().size() == x.cached_irr_plus().size();
}

/// Every directed subset of the specialization order has a supremum.
inline bool is_dcpo(const FinSpace& x, std::size_t cap = kDefaultCap) {
  bool ok = true;
  for_each_subset(
      x.size(), [&](const Subset& d) {
        if (ok && is_directed(x.order(), d) && !sup(x.order(), d)) ok = false;
      },
      cap);
  return ok;
}

/// Every closed irreducible set is the closure of exactly one point.
inline bool is_sober(const FinSpace& x, std::size_t cap = kDefaultCap) {
  check_cap(x.size(), cap, "sobriety");
  for (const auto& u : x.opens()) {
    Subset c = ~u;
    if (!x.irreducible_by_neighbourhoods(c)) continue;
    std::size_t generic = 0;
    for (std::size_t p = 0; p < x.size(); ++p)
      if (closure(x, Subset::singleton(x.size(), p)) == c) ++generic;
    if (generic != 1) return false;
  }
  return true;
}

/// Relative topology on the members of y, reindexed in increasing order.
inline FinSpace subspace(const FinSpace& x, const Subset& y) {
  x.check(y);
  const auto idx = y.indices();
  std::vector<Subset> opens;
  opens.reserve(x.opens().size());
  for (const auto& u : x.opens()) {
    Subset t(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      if (u.contains(idx[i])) t.insert(i);
    opens.push_back(std::move(t));
  }
  return FinSpace::from_trusted_opens(idx.size(), std::move(opens));
}

inline bool is_clopen(const FinSpace& x, const Subset& u) { return x.is_open(u) && x.is_closed(u); }

/// No clopen sets besides the empty set and the carrier.
inline bool is_connected(const FinSpace& x) {
  for (const auto& u : x.opens())
    if (!u.empty() && !u.is_full() && x.is_closed(u)) return false;
  return true;
}

}  // namespace sctop
