#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sctop/error.hpp"
#include "sctop/space.hpp"

namespace sctop {

/// A total function between the carriers of two finite spaces.
class SpaceMap {
 public:
  SpaceMap() = default;
  SpaceMap(FinSpace src, FinSpace dst, std::vector<std::size_t> table)
      : src_(std::move(src)), dst_(std::move(dst)), table_(std::move(table)) {
    if (table_.size() != src_.size())
      throw Error(ErrorKind::IndexOutOfRange, "map table has " + std::to_string(table_.size()) +
                                                  " entries for a source of size " + std::to_string(src_.size()));
    for (auto t : table_)
      if (t >= dst_.size())
        throw Error(ErrorKind::IndexOutOfRange, "map value " + std::to_string(t) + " outside target of size " +
                                                    std::to_string(dst_.size()));
  }

  static SpaceMap identity(const FinSpace& x) {
    std::vector<std::size_t> t(x.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
    return SpaceMap(x, x, std::move(t));
  }

  static SpaceMap constant(const FinSpace& x, const FinSpace& y, std::size_t value) {
    return SpaceMap(x, y, std::vector<std::size_t>(x.size(), value));
  }

  const FinSpace& src() const noexcept { return src_; }
  const FinSpace& dst() const noexcept { return dst_; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }
  std::size_t operator()(std::size_t x) const { return table_.at(x); }

  Subset image(const Subset& a) const {
    src_.check(a);
    return sctop::image(a, table_, dst_.size());
  }
  Subset preimage(const Subset& b) const {
    dst_.check(b);
    return sctop::preimage(b, table_);
  }

  friend bool operator==(const SpaceMap& a, const SpaceMap& b) {
    return a.table_ == b.table_ && a.src_ == b.src_ && a.dst_ == b.dst_;
  }

 private:
  FinSpace src_;
  FinSpace dst_;
  std::vector<std::size_t> table_;
};

/// Counterexample attached to a failed continuity flag.
struct Witness {
  std::string reason;
  /// The offending set (an open, an I-closed set, or an Irr+ member).
  std::optional<Subset> set;
  /// The offending points, e.g. a pair a <= b with f(a) not <= f(b).
  std::vector<std::size_t> points;
};

struct ContinuityReport {
  bool continuous = false;
  bool monotone = false;
  bool i_continuous = false;
  bool si_continuous = false;
  bool si_plus_continuous = false;
  bool preserves_irr_sups = false;

  std::optional<Witness> continuous_witness;
  std::optional<Witness> monotone_witness;
  std::optional<Witness> i_continuous_witness;
  std::optional<Witness> si_continuous_witness;
  std::optional<Witness> si_plus_witness;
  std::optional<Witness> irr_sups_witness;
};

namespace detail {

inline std::optional<Witness> continuity_failure(const SpaceMap& f, const SubsetFamily& src_opens,
                                                 const SubsetFamily& dst_opens, const char* what) {
  for (const auto& v : dst_opens)
    if (!src_opens.contains(f.preimage(v)))
      return Witness{std::string("preimage of ") + what + "open set is not " + what + "open", v, {}};
  return std::nullopt;
}

inline std::optional<Witness> monotonicity_failure(const SpaceMap& f) {
  const auto& p = f.src().order();
  const auto& q = f.dst().order();
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.leq(a, b) && !q.leq(f(a), f(b)))
        return Witness{"order pair not preserved", std::nullopt, {a, b}};
  return std::nullopt;
}

inline std::optional<Witness> i_continuity_failure(const SpaceMap& f, std::size_t cap) {
  for (const auto& b : theta(f.dst(), cap)) {
    Subset pre = f.preimage(b);
    if (!is_i_closed(f.src(), pre, cap))
      return Witness{"preimage of I-closed set is not I-closed", b, {}};
  }
  return std::nullopt;
}

inline std::optional<Witness> irr_sup_failure(const SpaceMap& f, std::size_t cap) {
  check_cap(f.src().size(), cap, "Irr+ enumeration");
  check_cap(f.dst().size(), cap, "Irr+ enumeration");
  for (const auto& e : f.src().cached_irr_plus()) {
    auto s = sup(f.dst().order(), f.image(e.set));
    if (!s || *s != f(e.sup))
      return Witness{s ? "sup of image differs from image of sup" : "image has no supremum", e.set, {e.sup}};
  }
  return std::nullopt;
}

}  // namespace detail

/// Preimage of every open is open.
inline bool is_continuous(const SpaceMap& f) {
  return !detail::continuity_failure(f, f.src().opens(), f.dst().opens(), "").has_value();
}

/// Order-preserving with respect to the specialization orders.
inline bool is_monotone(const SpaceMap& f) { return !detail::monotonicity_failure(f).has_value(); }

/// Preimage of every I-closed set is I-closed.
inline bool is_i_continuous(const SpaceMap& f, std::size_t cap = kDefaultCap) {
  return !detail::i_continuity_failure(f, cap).has_value();
}

/// Continuous as a map SI(src) -> SI(dst).
inline bool is_si_continuous(const SpaceMap& f, std::size_t cap = kDefaultCap) {
  return !detail::continuity_failure(f, si_opens(f.src(), cap), si_opens(f.dst(), cap), "SI-").has_value();
}

inline bool is_si_plus_continuous(const SpaceMap& f, std::size_t cap = kDefaultCap) {
  return is_continuous(f) && is_si_continuous(f, cap);
}

/// f(sup F) = sup f(F) for every F in Irr+(src), the right side existing.
inline bool preserves_irr_sups(const SpaceMap& f, std::size_t cap = kDefaultCap) {
  return !detail::irr_sup_failure(f, cap).has_value();
}

/// Every continuity grade with a witness for each failed one.
inline ContinuityReport classify(const SpaceMap& f, std::size_t cap = kDefaultCap) {
  ContinuityReport r;
  r.continuous_witness = detail::continuity_failure(f, f.src().opens(), f.dst().opens(), "");
  r.monotone_witness = detail::monotonicity_failure(f);
  r.i_continuous_witness = detail::i_continuity_failure(f, cap);
  r.si_continuous_witness = detail::continuity_failure(f, si_opens(f.src(), cap), si_opens(f.dst(), cap), "SI-");
  r.irr_sups_witness = detail::irr_sup_failure(f, cap);
  r.continuous = !r.continuous_witness;
  r.monotone = !r.monotone_witness;
  r.i_continuous = !r.i_continuous_witness;
  r.si_continuous = !r.si_continuous_witness;
  r.preserves_irr_sups = !r.irr_sups_witness;
  r.si_plus_continuous = r.continuous && r.si_continuous;
  if (!r.si_plus_continuous) r.si_plus_witness = r.continuous_witness ? r.continuous_witness : r.si_continuous_witness;
  return r;
}

/// g after f. Throws SpaceMismatch unless f's target is g's source.
inline SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
  if (!(f.dst() == g.src())) throw Error(ErrorKind::SpaceMismatch, "target of f is not the source of g");
  std::vector<std::size_t> t(f.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g(f(i));
  return SpaceMap(f.src(), g.dst(), std::move(t));
}

/// A bijection whose inverse is continuous as well.
inline bool is_homeomorphism(const SpaceMap& f) {
  if (f.src().size() != f.dst().size()) return false;
  std::vector<bool> hit(f.dst().size(), false);
  for (auto t : f.table()) {
    if (hit[t]) return false;
    hit[t] = true;
  }
  if (!is_continuous(f)) return false;
  for (const auto& u : f.src().opens())
    if (!f.dst().is_open(f.image(u))) return false;
  return true;
}

/// Calls fn(table) on every function {0..n_src-1} -> {0..n_dst-1}, in
/// lexicographic order of tables.
template <class Fn>
void for_each_function(std::size_t n_src, std::size_t n_dst, Fn&& fn) {
  std::vector<std::size_t> t(n_src, 0);
  if (n_src > 0 && n_dst == 0) return;
  while (true) {
    fn(static_cast<const std::vector<std::size_t>&>(t));
    std::size_t k = n_src;
    while (k > 0) {
      --k;
      if (++t[k] < n_dst) break;
      t[k] = 0;
      if (k == 0) return;
    }
    if (n_src == 0) return;
  }
}

}  // namespace sctop
