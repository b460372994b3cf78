#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sctop/error.hpp"
#include "sctop/subset.hpp"

namespace sctop {

/// A finite partial order on {0, ..., size-1}. The relation is validated
/// (reflexive, transitive, antisymmetric) when the poset is built and is
/// immutable afterwards.
class FinPoset {
 public:
  FinPoset() = default;

  /// Builds a poset from the full relation: `leq[i][j]` means i <= j.
  /// Throws InvalidPoset naming the violated axiom and a witness.
  static FinPoset from_matrix(const std::vector<std::vector<bool>>& leq) {
    const std::size_t n = leq.size();
    std::vector<Subset> up(n, Subset(n));
    for (std::size_t i = 0; i < n; ++i) {
      if (leq[i].size() != n)
        throw Error(ErrorKind::InvalidPoset, "relation matrix row " + std::to_string(i) + " has wrong length");
      for (std::size_t j = 0; j < n; ++j)
        if (leq[i][j]) up[i].insert(j);
    }
    return from_up_sets(std::move(up));
  }

  /// Builds a poset from the relation given as pairs (a, b) meaning a <= b.
  /// The relation must already be reflexive and transitive.
  static FinPoset from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<Subset> up(n, Subset(n));
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n)
        throw Error(ErrorKind::IndexOutOfRange, "pair (" + std::to_string(a) + "," + std::to_string(b) +
                                                    ") outside carrier of size " + std::to_string(n));
      up[a].insert(b);
    }
    return from_up_sets(std::move(up));
  }

  /// Reflexive-transitive closure of the generating pairs, then validated.
  static FinPoset generated_by(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<Subset> up(n, Subset(n));
    for (std::size_t i = 0; i < n; ++i) up[i].insert(i);
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n)
        throw Error(ErrorKind::IndexOutOfRange, "pair outside carrier");
      up[a].insert(b);
    }
    // Warshall on rows.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (up[i].contains(k)) up[i] |= up[k];
    return from_up_sets(std::move(up));
  }

  /// `up[i]` is the principal filter of i. Validates the axioms.
  static FinPoset from_up_sets(std::vector<Subset> up) {
    const std::size_t n = up.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (up[i].universe() != n) throw Error(ErrorKind::InvalidPoset, "row over wrong carrier");
      if (!up[i].contains(i))
        throw Error(ErrorKind::InvalidPoset, "not reflexive: (" + std::to_string(i) + "," + std::to_string(i) +
                                                 ") missing");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j : up[i].indices()) {
        if (j != i && up[j].contains(i))
          throw Error(ErrorKind::InvalidPoset, "not antisymmetric: " + std::to_string(i) + "<=" +
                                                   std::to_string(j) + " and " + std::to_string(j) +
                                                   "<=" + std::to_string(i));
        if (!up[j].is_subset_of(up[i])) {
          std::size_t k = *(up[j] - up[i]).first();
          throw Error(ErrorKind::InvalidPoset, "not transitive: " + std::to_string(i) + "<=" +
                                                   std::to_string(j) + " and " + std::to_string(j) + "<=" +
                                                   std::to_string(k) + " but not " + std::to_string(i) +
                                                   "<=" + std::to_string(k));
        }
      }
    }
    FinPoset p;
    p.up_ = std::move(up);
    p.down_.assign(n, Subset(n));
    for (std::size_t i = 0; i < n; ++i) p.up_[i].for_each([&](std::size_t j) { p.down_[j].insert(i); });
    return p;
  }

  static FinPoset chain(std::size_t n) {
    std::vector<Subset> up(n, Subset(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) up[i].insert(j);
    return from_up_sets(std::move(up));
  }

  static FinPoset antichain(std::size_t n) {
    std::vector<Subset> up(n, Subset(n));
    for (std::size_t i = 0; i < n; ++i) up[i].insert(i);
    return from_up_sets(std::move(up));
  }

  std::size_t size() const noexcept { return up_.size(); }

  bool leq(std::size_t a, std::size_t b) const { return up_.at(a).contains(b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }

  /// Principal filter of a.
  const Subset& up(std::size_t a) const { return up_.at(a); }
  /// Principal ideal of a.
  const Subset& down(std::size_t a) const { return down_.at(a); }

  /// Strict covering pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b) {
        if (!less(a, b)) continue;
        Subset between = up_[a] & down_[b];
        if (between.count() == 2) out.emplace_back(a, b);
      }
    return out;
  }

  friend bool operator==(const FinPoset& a, const FinPoset& b) { return a.up_ == b.up_; }

 private:
  std::vector<Subset> up_;
  std::vector<Subset> down_;
};

namespace detail {
inline void check_carrier(const FinPoset& p, const Subset& a) {
  if (a.universe() != p.size())
    throw Error(ErrorKind::IndexOutOfRange, "subset over a carrier of size " + std::to_string(a.universe()) +
                                                " used with a poset of size " + std::to_string(p.size()));
}
}  // namespace detail

/// {x | x <= a for some a in A}.
inline Subset down_closure(const FinPoset& p, const Subset& a) {
  detail::check_carrier(p, a);
  Subset out(p.size());
  a.for_each([&](std::size_t i) { out |= p.down(i); });
  return out;
}

/// {x | a <= x for some a in A}.
inline Subset up_closure(const FinPoset& p, const Subset& a) {
  detail::check_carrier(p, a);
  Subset out(p.size());
  a.for_each([&](std::size_t i) { out |= p.up(i); });
  return out;
}

inline bool is_up_set(const FinPoset& p, const Subset& a) { return up_closure(p, a) == a; }
inline bool is_down_set(const FinPoset& p, const Subset& a) { return down_closure(p, a) == a; }

/// Elements above every member of A (all of the carrier when A is empty).
inline Subset upper_bounds(const FinPoset& p, const Subset& a) {
  detail::check_carrier(p, a);
  Subset out = Subset::full(p.size());
  a.for_each([&](std::size_t i) { out &= p.up(i); });
  return out;
}

inline Subset lower_bounds(const FinPoset& p, const Subset& a) {
  detail::check_carrier(p, a);
  Subset out = Subset::full(p.size());
  a.for_each([&](std::size_t i) { out &= p.down(i); });
  return out;
}

/// The greatest element of A, if A has one.
inline std::optional<std::size_t> maximum(const FinPoset& p, const Subset& a) {
  Subset ub = upper_bounds(p, a) & a;
  return ub.first();
}

inline std::optional<std::size_t> minimum(const FinPoset& p, const Subset& a) {
  Subset lb = lower_bounds(p, a) & a;
  return lb.first();
}

/// Nonempty, and every pair of members has an upper bound inside the set.
inline bool is_directed(const FinPoset& p, const Subset& d) {
  detail::check_carrier(p, d);
  if (d.empty()) return false;
  const auto idx = d.indices();
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (!(p.up(idx[i]) & p.up(idx[j])).intersects(d)) return false;
  return true;
}

/// Least upper bound of a nonempty subset, if it exists. The empty set is
/// always reported as having no supremum.
inline std::optional<std::size_t> sup(const FinPoset& p, const Subset& a) {
  detail::check_carrier(p, a);
  if (a.empty()) return std::nullopt;
  return minimum(p, upper_bounds(p, a));
}

inline std::optional<std::size_t> inf(const FinPoset& p, const Subset& a) {
  detail::check_carrier(p, a);
  if (a.empty()) return std::nullopt;
  return maximum(p, lower_bounds(p, a));
}

/// The poset on the members of `y` (in increasing index order) with the
/// inherited order.
inline FinPoset restrict(const FinPoset& p, const Subset& y) {
  detail::check_carrier(p, y);
  const auto idx = y.indices();
  std::vector<Subset> up(idx.size(), Subset(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      if (p.leq(idx[i], idx[j])) up[i].insert(j);
  return FinPoset::from_up_sets(std::move(up));
}

}  // namespace sctop
