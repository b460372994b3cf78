#pragma once

// Finitely presented infinite spaces. Each entry answers order, openness,
// irreducibility and supremum questions about symbolic descriptors with a
// decision procedure specific to that entry; the comment on each procedure
// states the argument it implements. Finite truncations (truncate()) give a
// brute-force oracle for every question that can be asked of finitely many
// points.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sctop/error.hpp"
#include "sctop/order.hpp"
#include "sctop/space.hpp"

namespace sctop {

/// Integer code of a catalog point. Negative codes are reserved for limit
/// points (omega, a new top, or the omega-row of Johnstone's space).
using Point = std::int64_t;

// Irreducibility descriptors: symbolic names for (possibly infinite) subsets.
struct FiniteSet { std::vector<Point> points; };
/// Naturals n >= start.
struct ChainTail { Point start = 0; };
/// Naturals outside a finite exclusion list.
struct Cofinite { std::vector<Point> excluded; };
struct WholeSpace {};
/// Column j of Johnstone's space: {(j, n) | n in N + {omega}}.
struct Column { Point j = 0; };
using IrrDescriptor = std::variant<FiniteSet, ChainTail, Cofinite, WholeSpace, Column>;

// Open-set forms.
struct EmptyOpen {};
struct WholeOpen {};
/// {p | k <= p}: the principal filter of k.
struct UpFrom { Point k = 0; };
/// Naturals outside a finite list (plus any limit point for which the entry says so).
struct CofiniteOpen { std::vector<Point> excluded; };
struct FiniteOpen { std::vector<Point> points; };
/// (N minus excluded) + {top}, in the completion of the cofinite naturals.
struct CofinitePlusTop { std::vector<Point> excluded; };
using OpenForm = std::variant<EmptyOpen, WholeOpen, UpFrom, CofiniteOpen, FiniteOpen, CofinitePlusTop>;

// Closed-set forms.
struct EmptyClosed {};
struct WholeClosed {};
struct PrincipalIdeals { std::vector<Point> generators; };
struct FiniteClosed { std::vector<Point> points; };
using ClosedForm = std::variant<EmptyClosed, WholeClosed, PrincipalIdeals, FiniteClosed>;

namespace detail {
inline std::vector<Point> canonical(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}
inline bool has(const std::vector<Point>& v, Point p) { return std::find(v.begin(), v.end(), p) != v.end(); }
inline std::string descriptor_name(const IrrDescriptor& d) {
  static const char* names[] = {"FiniteSet", "ChainTail", "Cofinite", "WholeSpace", "Column"};
  return names[d.index()];
}
inline std::string form_name(const OpenForm& u) {
  static const char* names[] = {"EmptyOpen", "WholeOpen", "UpFrom", "CofiniteOpen", "FiniteOpen", "CofinitePlusTop"};
  return names[u.index()];
}
}  // namespace detail

/// Canonical form (sorted, deduplicated generators).
inline ClosedForm canonical(ClosedForm c) {
  if (auto* p = std::get_if<PrincipalIdeals>(&c)) p->generators = detail::canonical(p->generators);
  if (auto* f = std::get_if<FiniteClosed>(&c)) f->points = detail::canonical(f->points);
  return c;
}

class SymbolicSpace {
 public:
  virtual ~SymbolicSpace() = default;

  virtual std::string id() const = 0;
  virtual std::string describe() const = 0;
  virtual bool valid(Point p) const = 0;
  /// The i-th point of the codec's enumeration; truncate(n) keeps the first n.
  virtual Point point_at(std::size_t i) const = 0;
  virtual bool leq(Point a, Point b) const = 0;
  /// Readable rendering, e.g. "5", "ω", "(2,ω)".
  virtual std::string show(Point p) const { return std::to_string(p); }
  /// Identifier-safe rendering, used for DSL element names.
  virtual std::string name(Point p) const { return "p" + std::to_string(p); }

  virtual bool in_open(const OpenForm& u, Point p) const = 0;
  virtual bool is_open(const OpenForm& u) const = 0;
  virtual bool is_si_open(const OpenForm& u) const = 0;

  virtual bool contains(const IrrDescriptor& d, Point p) const {
    check_point(p);
    return std::visit(
        [&](const auto& v) -> bool {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, FiniteSet>) return detail::has(v.points, p);
          else if constexpr (std::is_same_v<T, ChainTail>) return p >= 0 && p >= v.start;
          else if constexpr (std::is_same_v<T, Cofinite>) return p >= 0 && !detail::has(v.excluded, p);
          else if constexpr (std::is_same_v<T, WholeSpace>) return true;
          else return column_of(p) == v.j;
        },
        d);
  }
  virtual bool is_irreducible(const IrrDescriptor& d) const = 0;
  virtual bool is_directed(const IrrDescriptor& d) const = 0;
  virtual std::optional<Point> sup(const IrrDescriptor& d) const = 0;

  virtual ClosedForm closure_of_finite(const std::vector<Point>& pts) const = 0;
  virtual bool in_closed(const ClosedForm& c, Point p) const {
    check_point(p);
    return std::visit(
        [&](const auto& v) -> bool {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, EmptyClosed>) return false;
          else if constexpr (std::is_same_v<T, WholeClosed>) return true;
          else if constexpr (std::is_same_v<T, PrincipalIdeals>)
            return std::any_of(v.generators.begin(), v.generators.end(), [&](Point g) { return leq(p, g); });
          else return detail::has(v.points, p);
        },
        c);
  }
  /// Closed forms whose generators are among the first `bound` points.
  virtual std::vector<ClosedForm> closed_forms(std::size_t bound) const = 0;

  virtual bool is_strongly_complete() const = 0;
  virtual bool supports_completion() const { return true; }
  /// Column index for Johnstone-style codes; -1 elsewhere.
  virtual Point column_of(Point) const { return -1; }

 protected:
  void check_point(Point p) const {
    if (!valid(p)) throw Error(ErrorKind::IndexOutOfRange, "point code " + std::to_string(p) + " not in " + id());
  }
  [[noreturn]] void unsupported(const IrrDescriptor& d) const {
    throw Error(ErrorKind::UnsupportedDescriptor, detail::descriptor_name(d) + " is not admissible for " + id());
  }
  [[noreturn]] void unsupported(const OpenForm& u) const {
    throw Error(ErrorKind::UnsupportedForm, detail::form_name(u) + " is not an open form of " + id());
  }
  void check_points(const std::vector<Point>& v) const {
    for (auto p : v) check_point(p);
  }
  /// Finite descriptors must be nonempty.
  void check_finite(const FiniteSet& f) const {
    if (f.points.empty()) throw Error(ErrorKind::UnsupportedDescriptor, "FiniteSet descriptors must be nonempty");
    check_points(f.points);
  }
  /// Greatest element of a finite set, by brute force over the order.
  std::optional<Point> finite_max(const std::vector<Point>& pts) const {
    for (auto m : pts)
      if (std::all_of(pts.begin(), pts.end(), [&](Point q) { return leq(q, m); })) return m;
    return std::nullopt;
  }
  /// Finite subsets of a T0 space are irreducible exactly when they have a
  /// greatest element (the subspace is finite, hence Alexandroff).
  bool finite_irreducible(const FiniteSet& f) const {
    check_finite(f);
    return finite_max(f.points).has_value();
  }
  /// Principal ideals of the maximal generators.
  ClosedForm down_of_finite(const std::vector<Point>& pts) const {
    check_points(pts);
    if (pts.empty()) return EmptyClosed{};
    std::vector<Point> gens;
    for (auto p : pts)
      if (std::none_of(pts.begin(), pts.end(), [&](Point q) { return q != p && leq(p, q); })) gens.push_back(p);
    return canonical(PrincipalIdeals{gens});
  }
};

using SymbolicHandle = std::shared_ptr<const SymbolicSpace>;

// ---------------------------------------------------------------------------
// omega_scott: the naturals as a chain, with the Scott topology.

class OmegaScott : public SymbolicSpace {
 public:
  std::string id() const override { return "omega_scott"; }
  std::string describe() const override { return "ω: the naturals as a chain with the Scott topology"; }
  bool valid(Point p) const override { return p >= 0; }
  Point point_at(std::size_t i) const override { return static_cast<Point>(i); }
  bool leq(Point a, Point b) const override {
    check_point(a);
    check_point(b);
    return a <= b;
  }
  std::string name(Point p) const override { return "n" + std::to_string(p); }

  bool in_open(const OpenForm& u, Point p) const override {
    check_point(p);
    return std::visit(
        [&](const auto& v) -> bool {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, EmptyOpen>) return false;
          else if constexpr (std::is_same_v<T, WholeOpen>) return true;
          else if constexpr (std::is_same_v<T, UpFrom>) return p >= v.k;
          else if constexpr (std::is_same_v<T, CofiniteOpen>) return !detail::has(v.excluded, p);
          else if constexpr (std::is_same_v<T, FiniteOpen>) return detail::has(v.points, p);
          else { unsupported(u); }
        },
        u);
  }
  // Every up-set of N is a principal filter or empty, and no infinite
  // directed set has a supremum, so Scott opens = up-sets.
  bool is_open(const OpenForm& u) const override {
    return std::visit(
        [&](const auto& v) -> bool {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, EmptyOpen> || std::is_same_v<T, WholeOpen>) return true;
          else if constexpr (std::is_same_v<T, UpFrom>) { check_point(v.k); return true; }
          else if constexpr (std::is_same_v<T, CofiniteOpen>) {
            // N minus E is an up-set iff E = {0, ..., m-1}.
            auto e = detail::canonical(v.excluded);
            check_points(e);
            for (std::size_t i = 0; i < e.size(); ++i)
              if (e[i] != static_cast<Point>(i)) return false;
            return true;
          } else if constexpr (std::is_same_v<T, FiniteOpen>) return detail::canonical(v.points).empty();
          else { unsupported(u); }
        },
        u);
  }
  // Irr+ consists of the nonempty finite sets (infinite ones are unbounded);
  // each contains its supremum, its maximum, so clause (ii) always holds.
  bool is_si_open(const OpenForm& u) const override { return is_open(u); }

  // Every nonempty subset of a chain is directed, hence irreducible.
  bool is_irreducible(const IrrDescriptor& d) const override { return is_directed(d); }
  bool is_directed(const IrrDescriptor& d) const override {
    if (auto* f = std::get_if<FiniteSet>(&d)) { check_finite(*f); return true; }
    if (auto* t = std::get_if<ChainTail>(&d)) { check_point(t->start); return true; }
    if (auto* c = std::get_if<Cofinite>(&d)) { check_points(c->excluded); return true; }
    if (std::holds_alternative<WholeSpace>(d)) return true;
    unsupported(d);
  }
  std::optional<Point> sup(const IrrDescriptor& d) const override {
    if (auto* f = std::get_if<FiniteSet>(&d)) { check_finite(*f); return *std::max_element(f->points.begin(), f->points.end()); }
    if (std::holds_alternative<Column>(d)) unsupported(d);
    is_directed(d);
    return std::nullopt;  // infinite subsets of N are unbounded
  }

  ClosedForm closure_of_finite(const std::vector<Point>& pts) const override { return down_of_finite(pts); }
  std::vector<ClosedForm> closed_forms(std::size_t bound) const override {
    std::vector<ClosedForm> out{EmptyClosed{}, WholeClosed{}};
    for (std::size_t i = 0; i < bound; ++i) out.push_back(PrincipalIdeals{{static_cast<Point>(i)}});
    return out;
  }
  bool is_strongly_complete() const override { return false; }
};

// ---------------------------------------------------------------------------
// omega_plus_one_scott: N + {omega} (omega coded -1) with the Scott topology.

class OmegaPlusOneScott : public SymbolicSpace {
 public:
  static constexpr Point kOmega = -1;

  std::string id() const override { return "omega_plus_one_scott"; }
  std::string describe() const override { return "ω+1: the naturals with a top ω, Scott topology"; }
  bool valid(Point p) const override { return p >= 0 || p == kOmega; }
  /// The limit point comes first: omega, 0, 1, 2, ...
  Point point_at(std::size_t i) const override { return i == 0 ? kOmega : static_cast<Point>(i - 1); }
  bool leq(Point a, Point b) const override {
    check_point(a);
    check_point(b);
    if (b == kOmega) return true;
    return a != kOmega && a <= b;
  }
  std::string show(Point p) const override { return p == kOmega ? "ω" : std::to_string(p); }
  std::string name(Point p) const override { return p == kOmega ? "w" : "n" + std::to_string(p); }

  bool in_open(const OpenForm& u, Point p) const override {
    check_point(p);
    return std::visit(
        [&](const auto& v) -> bool {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, EmptyOpen>) return false;
          else if constexpr (std::is_same_v<T, WholeOpen>) return true;
          else if constexpr (std::is_same_v<T, UpFrom>) return leq(v.k, p);
          else if constexpr (std::is_same_v<T, CofiniteOpen>) return !detail::has(v.excluded, p);
          else if constexpr (std::is_same_v<T, FiniteOpen>) return detail::has(v.points, p);
          else { unsupported(u); }
        },
        u);
  }
  // Scott opens: the empty set and the sets {k, k+1, ...} + {omega}. {omega}
  // alone is an up-set but omega is the supremum of N, which misses it.
  bool is_open(const OpenForm& u) const override {
    return std::visit(
        [&](const auto& v) -> bool {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, EmptyOpen> || std::is_same_v<T, WholeOpen>) return true;
          else if constexpr (std::is_same_v<T, UpFrom>) { check_point(v.k); return v.k != kOmega; }
          else if constexpr (std::is_same_v<T, CofiniteOpen>) {
            auto e = detail::canonical(v.excluded);
            check_points(e);
            if (detail::has(e, kOmega)) return false;
            for (std::size_t i = 0; i < e.size(); ++i)
              if (e[i] != static_cast<Point>(i)) return false;
            return true;
          } else if constexpr (std::is_same_v<T, FiniteOpen>) {
            check_points(v.points);
            return v.points.empty();
          } else { unsupported(u); }
        },
        u);
  }
  // Clause (ii). A finite-supremum Irr+ set contains its supremum. A set
  // with supremum omega either contains omega or is an infinite subset of
  // N, which meets U exactly when U contains a tail; the ChainTail(0)
  // descriptor is the witness checked here.
  bool is_si_open(const OpenForm& u) const override {
    if (!is_open(u)) return false;
    if (!in_open(u, kOmega)) return true;
    const ChainTail tail{0};
    for (Point n = 0; n < 64; ++n)
      if (contains(tail, n) && in_open(u, n)) return true;
    return false;
  }

  // A chain: every nonempty subset is directed, hence irreducible.
  bool is_irreducible(const IrrDescriptor& d) const override { return is_directed(d); }
  bool is_directed(const IrrDescriptor& d) const override {
    if (auto* f = std::get_if<FiniteSet>(&d)) { check_finite(*f); return true; }
    if (auto* t = std::get_if<ChainTail>(&d)) { check_point(t->start); return t->start >= 0; }
    if (auto* c = std::get_if<Cofinite>(&d)) { check_points(c->excluded); return true; }
    if (std::holds_alternative<WholeSpace>(d)) return true;
    unsupported(d);
  }
  std::optional<Point> sup(const IrrDescriptor& d) const override {
    if (auto* f = std::get_if<FiniteSet>(&d)) { check_finite(*f); return finite_max(f->points); }
    if (std::holds_alternative<Column>(d)) unsupported(d);
    is_directed(d);
    return kOmega;  // infinite sets of naturals, or the whole space
  }

  ClosedForm closure_of_finite(const std::vector<Point>& pts) const override {
    check_points(pts);
    if (detail::has(pts, kOmega)) return WholeClosed{};
    return down_of_finite(pts);
  }
  std::vector<ClosedForm> closed_forms(std::size_t bound) const override {
    std::vector<ClosedForm> out{EmptyClosed{}, WholeClosed{}};
    for (std::size_t i = 0; i < bound; ++i)
      if (point_at(i) != kOmega) out.push_back(PrincipalIdeals{{point_at(i)}});
    return out;
  }
  bool is_strongly_complete() const override { return true; }
};

// ---------------------------------------------------------------------------
// nat_cofinite: N with the cofinite topology (T1; discrete specialization).

class NatCofinite : public SymbolicSpace {
 public:
  std::string id() const override { return "nat_cofinite"; }
  std::string describe() const override { return "ℕ with the cofinite topology"; }
  bool valid(Point p) const override { return p >= 0; }
  Point point_at(std::size_t i) const override { return static_cast<Point>(i); }
  bool leq(Point a, Point b) const override {
    check_point(a);
    check_point(b);
    return a == b;
  }
  std::string name(Point p) const override { return "n" + std::to_string(p); }

  bool in_open(const OpenForm& u, Point p) const override {
    check_point(p);
    return std::visit(
        [&](const auto& v) -> bool {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, EmptyOpen>) return false;
          else if constexpr (std::is_same_v<T, WholeOpen>) return true;
          else if constexpr (std::is_same_v<T, UpFrom>) return p >= v.k;
          else if constexpr (std::is_same_v<T, CofiniteOpen>) return !detail::has(v.excluded, p);
          else if constexpr (std::is_same_v<T, FiniteOpen>) return detail::has(v.points, p);
          else { unsupported(u); }
        },
        u);
  }
  bool is_open(const OpenForm& u) const override {
    return std::visit(
        [&](const auto& v) -> bool {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, EmptyOpen> || std::is_same_v<T, WholeOpen>) return true;
          else if constexpr (std::is_same_v<T, UpFrom>) { check_point(v.k); return true; }
          else if constexpr (std::is_same_v<T, CofiniteOpen>) { check_points(v.excluded); return true; }
          else if constexpr (std::is_same_v<T, FiniteOpen>) { check_points(v.points); return v.points.empty(); }
          else { unsupported(u); }
        },
        u);
  }
  // Irr+ is the singletons (the order is discrete), so clause (ii) is vacuous.
  bool is_si_open(const OpenForm& u) const override { return is_open(u); }

  // Any two nonempty opens are cofinite and so is their intersection, which
  // meets every infinite set. A finite F with distinct a, b is split by the
  // opens N - (F - {a}) and N - (F - {b}).
  bool is_irreducible(const IrrDescriptor& d) const override {
    if (auto* f = std::get_if<FiniteSet>(&d)) { check_finite(*f); return detail::canonical(f->points).size() == 1; }
    if (auto* t = std::get_if<ChainTail>(&d)) { check_point(t->start); return true; }
    if (auto* c = std::get_if<Cofinite>(&d)) { check_points(c->excluded); return true; }
    if (std::holds_alternative<WholeSpace>(d)) return true;
    unsupported(d);
  }
  bool is_directed(const IrrDescriptor& d) const override {
    if (auto* f = std::get_if<FiniteSet>(&d)) { check_finite(*f); return detail::canonical(f->points).size() == 1; }
    if (std::holds_alternative<Column>(d)) unsupported(d);
    is_irreducible(d);
    return false;
  }
  std::optional<Point> sup(const IrrDescriptor& d) const override {
    if (auto* f = std::get_if<FiniteSet>(&d)) {
      check_finite(*f);
      auto pts = detail::canonical(f->points);
      if (pts.size() == 1) return pts[0];
      return std::nullopt;
    }
    is_irreducible(d);
    return std::nullopt;
  }

  ClosedForm closure_of_finite(const std::vector<Point>& pts) const override {
    check_points(pts);
    if (pts.empty()) return EmptyClosed{};
    return canonical(FiniteClosed{pts});
  }
  std::vector<ClosedForm> closed_forms(std::size_t bound) const override {
    // Every finite set is closed; list those inside the first `bound` points
    // only up to singletons and the full prefix, enough for membership probes.
    std::vector<ClosedForm> out{EmptyClosed{}, WholeClosed{}};
    std::vector<Point> prefix;
    for (std::size_t i = 0; i < bound; ++i) {
      out.push_back(FiniteClosed{{static_cast<Point>(i)}});
      prefix.push_back(static_cast<Point>(i));
    }
    if (!prefix.empty()) out.push_back(FiniteClosed{prefix});
    return out;
  }
  bool is_strongly_complete() const override { return false; }
};

// ---------------------------------------------------------------------------
// nat_cofinite_top: N + {top} (top coded -1); opens are the empty set and
// S + {top} for cofinite S. This is the strong completion of nat_cofinite.

class NatCofiniteTop : public SymbolicSpace {
 public:
  static constexpr Point kTop = -1;

  std::string id() const override { return "nat_cofinite_top"; }
  std::string describe() const override { return "ℕ ∪ {⊤}: opens ∅ and S ∪ {⊤} for cofinite S"; }
  bool valid(Point p) const override { return p >= 0 || p == kTop; }
  Point point_at(std::size_t i) const override { return i == 0 ? kTop : static_cast<Point>(i - 1); }
  bool leq(Point a, Point b) const override {
    check_point(a);
    check_point(b);
    return a == b || b == kTop;
  }
  std::string show(Point p) const override { return p == kTop ? "⊤" : std::to_string(p); }
  std::string name(Point p) const override { return p == kTop ? "top" : "n" + std::to_string(p); }

  bool in_open(const OpenForm& u, Point p) const override {
    check_point(p);
    return std::visit(
        [&](const auto& v) -> bool {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, EmptyOpen>) return false;
          else if constexpr (std::is_same_v<T, WholeOpen>) return true;
          else if constexpr (std::is_same_v<T, CofinitePlusTop>) return p == kTop || !detail::has(v.excluded, p);
          else if constexpr (std::is_same_v<T, FiniteOpen>) return detail::has(v.points, p);
          else { unsupported(u); }
        },
        u);
  }
  bool is_open(const OpenForm& u) const override {
    return std::visit(
        [&](const auto& v) -> bool {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, EmptyOpen> || std::is_same_v<T, WholeOpen>) return true;
          else if constexpr (std::is_same_v<T, CofinitePlusTop>) {
            check_points(v.excluded);
            return !detail::has(v.excluded, kTop);
          } else if constexpr (std::is_same_v<T, FiniteOpen>) { check_points(v.points); return v.points.empty(); }
          else { unsupported(u); }
        },
        u);
  }
  // Irr+ = Irr (the space is strongly complete). Finite irreducible sets
  // contain their supremum; a set with supremum top contains top or is an
  // infinite set of naturals, which meets every S + {top} with S cofinite.
  bool is_si_open(const OpenForm& u) const override { return is_open(u); }

  bool is_irreducible(const IrrDescriptor& d) const override {
    if (auto* f = std::get_if<FiniteSet>(&d)) return finite_irreducible(*f);
    // Nonempty opens pairwise intersect in (S cap S') + {top}, S cap S' cofinite.
    if (auto* t = std::get_if<ChainTail>(&d)) { check_point(t->start); return t->start >= 0; }
    if (auto* c = std::get_if<Cofinite>(&d)) { check_points(c->excluded); return true; }
    if (std::holds_alternative<WholeSpace>(d)) return true;
    unsupported(d);
  }
  bool is_directed(const IrrDescriptor& d) const override {
    if (auto* f = std::get_if<FiniteSet>(&d)) return finite_irreducible(*f);
    if (std::holds_alternative<WholeSpace>(d)) return true;  // top is the maximum
    is_irreducible(d);
    return false;  // two naturals have only top above them
  }
  std::optional<Point> sup(const IrrDescriptor& d) const override {
    if (auto* f = std::get_if<FiniteSet>(&d)) {
      check_finite(*f);
      auto pts = detail::canonical(f->points);
      return pts.size() == 1 ? pts[0] : kTop;
    }
    is_irreducible(d);
    return kTop;
  }

  ClosedForm closure_of_finite(const std::vector<Point>& pts) const override {
    check_points(pts);
    if (pts.empty()) return EmptyClosed{};
    if (detail::has(pts, kTop)) return WholeClosed{};
    return canonical(FiniteClosed{pts});
  }
  std::vector<ClosedForm> closed_forms(std::size_t bound) const override {
    std::vector<ClosedForm> out{EmptyClosed{}, WholeClosed{}};
    for (std::size_t i = 0; i < bound; ++i)
      if (point_at(i) != kTop) out.push_back(FiniteClosed{{point_at(i)}});
    return out;
  }
  bool is_strongly_complete() const override { return true; }
};

// ---------------------------------------------------------------------------
// nat_antichain: N with the discrete topology.

class NatAntichain : public SymbolicSpace {
 public:
  std::string id() const override { return "nat_antichain"; }
  std::string describe() const override { return "ℕ with the discrete topology (Alexandroff of an antichain)"; }
  bool valid(Point p) const override { return p >= 0; }
  Point point_at(std::size_t i) const override { return static_cast<Point>(i); }
  bool leq(Point a, Point b) const override {
    check_point(a);
    check_point(b);
    return a == b;
  }
  std::string name(Point p) const override { return "n" + std::to_string(p); }

  bool in_open(const OpenForm& u, Point p) const override {
    check_point(p);
    return std::visit(
        [&](const auto& v) -> bool {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, EmptyOpen>) return false;
          else if constexpr (std::is_same_v<T, WholeOpen>) return true;
          else if constexpr (std::is_same_v<T, UpFrom>) return p >= v.k;
          else if constexpr (std::is_same_v<T, CofiniteOpen>) return !detail::has(v.excluded, p);
          else if constexpr (std::is_same_v<T, FiniteOpen>) return detail::has(v.points, p);
          else { unsupported(u); }
        },
        u);
  }
  bool is_open(const OpenForm& u) const override {
    if (std::holds_alternative<CofinitePlusTop>(u)) unsupported(u);
    return true;  // every subset is open
  }
  bool is_si_open(const OpenForm& u) const override { return is_open(u); }

  // Distinct points are separated by disjoint singleton opens.
  bool is_irreducible(const IrrDescriptor& d) const override {
    if (auto* f = std::get_if<FiniteSet>(&d)) { check_finite(*f); return detail::canonical(f->points).size() == 1; }
    if (auto* t = std::get_if<ChainTail>(&d)) { check_point(t->start); return false; }
    if (auto* c = std::get_if<Cofinite>(&d)) { check_points(c->excluded); return false; }
    if (std::holds_alternative<WholeSpace>(d)) return false;
    unsupported(d);
  }
  bool is_directed(const IrrDescriptor& d) const override { return is_irreducible(d); }
  std::optional<Point> sup(const IrrDescriptor& d) const override {
    if (auto* f = std::get_if<FiniteSet>(&d)) {
      check_finite(*f);
      auto pts = detail::canonical(f->points);
      if (pts.size() == 1) return pts[0];
      return std::nullopt;
    }
    is_irreducible(d);
    return std::nullopt;
  }

  ClosedForm closure_of_finite(const std::vector<Point>& pts) const override {
    check_points(pts);
    if (pts.empty()) return EmptyClosed{};
    return canonical(FiniteClosed{pts});
  }
  std::vector<ClosedForm> closed_forms(std::size_t bound) const override {
    std::vector<ClosedForm> out{EmptyClosed{}, WholeClosed{}};
    for (std::size_t i = 0; i < bound; ++i) out.push_back(FiniteClosed{{static_cast<Point>(i)}});
    return out;
  }
  bool is_strongly_complete() const override { return true; }
};

// ---------------------------------------------------------------------------
// Johnstone's space J = N x (N + {omega}) with
//   (j,k) <= (m,n)  iff  (j = m and k <= n)  or  (n = omega and k <= m).
// Codes: (m,n) with n finite -> Cantor pair; (m,omega) -> -(m+1).

class Johnstone : public SymbolicSpace {
 public:
  static constexpr Point kOmegaRow = -1;

  explicit Johnstone(bool scott) : scott_(scott) {}

  static Point encode(Point m, Point n) {
    if (n == kOmegaRow) return -(m + 1);
    return (m + n) * (m + n + 1) / 2 + n;
  }
  /// (m, n), with n = -1 standing for omega.
  static std::pair<Point, Point> decode(Point c) {
    if (c < 0) return {-c - 1, kOmegaRow};
    auto w = static_cast<Point>((std::sqrt(8.0 * static_cast<double>(c) + 1.0) - 1.0) / 2.0);
    while ((w + 1) * (w + 2) / 2 <= c) ++w;
    while (w * (w + 1) / 2 > c) --w;
    const Point n = c - w * (w + 1) / 2;
    return {w - n, n};
  }

  std::string id() const override { return scott_ ? "johnstone_scott" : "johnstone_alex"; }
  std::string describe() const override {
    return std::string("Johnstone's poset ℕ×(ℕ∪{ω}) with the ") + (scott_ ? "Scott" : "Alexandroff") + " topology";
  }
  bool valid(Point) const override { return true; }
  /// Diagonal blocks d = 0, 1, ...: (d,ω) then (m, d-m) for m = 0..d.
  Point point_at(std::size_t i) const override {
    std::size_t d = 0;
    while (i >= d + 2) {
      i -= d + 2;
      ++d;
    }
    const auto dd = static_cast<Point>(d);
    if (i == 0) return encode(dd, kOmegaRow);
    const auto m = static_cast<Point>(i - 1);
    return encode(m, dd - m);
  }
  bool leq(Point a, Point b) const override {
    auto [j, k] = decode(a);
    auto [m, n] = decode(b);
    if (j == m && (n == kOmegaRow || (k != kOmegaRow && k <= n))) return true;
    return n == kOmegaRow && k != kOmegaRow && k <= m;
  }
  std::string show(Point p) const override {
    auto [m, n] = decode(p);
    return "(" + std::to_string(m) + "," + (n == kOmegaRow ? std::string("ω") : std::to_string(n)) + ")";
  }
  std::string name(Point p) const override {
    auto [m, n] = decode(p);
    return "p" + std::to_string(m) + "_" + (n == kOmegaRow ? std::string("w") : std::to_string(n));
  }
  Point column_of(Point p) const override { return decode(p).first; }

  bool in_open(const OpenForm& u, Point p) const override {
    if (std::holds_alternative<EmptyOpen>(u)) return false;
    if (std::holds_alternative<WholeOpen>(u)) return true;
    if (auto* f = std::get_if<FiniteOpen>(&u)) return detail::has(f->points, p);
    if (auto* up = std::get_if<UpFrom>(&u)) return leq(up->k, p);
    unsupported(u);
  }
  bool is_open(const OpenForm& u) const override {
    if (std::holds_alternative<EmptyOpen>(u) || std::holds_alternative<WholeOpen>(u)) return true;
    // Principal filters are up-sets, so Alexandroff open. In the Scott
    // topology, up (m,omega) = {(m,omega)} is not open: (m,omega) is the
    // supremum of column m below it. up (j,k) with k finite contains a tail of
    // column j, but also (m,omega) for every m >= k, which is the supremum of
    // the column-m chain that up (j,k) misses when m != j; so it is not open.
    if (std::holds_alternative<UpFrom>(u)) return !scott_;
    unsupported(u);
  }
  bool is_si_open(const OpenForm& u) const override {
    if (std::holds_alternative<EmptyOpen>(u) || std::holds_alternative<WholeOpen>(u)) return true;
    if (auto* up = std::get_if<UpFrom>(&u)) {
      if (scott_) return false;
      // Alexandroff: the finite-column chain below (m,omega) is irreducible
      // with supremum (m,omega), and misses the filter of (m,omega) and, for
      // m != j, that of (j,k).
      (void)up;
      return false;
    }
    unsupported(u);
  }

  bool is_irreducible(const IrrDescriptor& d) const override {
    if (auto* f = std::get_if<FiniteSet>(&d)) return finite_irreducible(*f);
    // A column is a chain with top (j,omega): directed, hence irreducible.
    if (std::holds_alternative<Column>(d)) return true;
    if (std::holds_alternative<WholeSpace>(d)) {
      // Alexandroff: irreducible = directed, and (0,w), (1,w) have no common
      // upper bound. Scott: a nonempty Scott open U contains some (j,k); it
      // then contains (j,n) for large n (tails of column j reach (j,w)), hence
      // (m,w) for every m >= n, hence a tail of every such column m. Two
      // nonempty Scott opens therefore share all points (m,w) with m large,
      // so J meets their intersection.
      return scott_;
    }
    unsupported(d);
  }
  bool is_directed(const IrrDescriptor& d) const override {
    if (auto* f = std::get_if<FiniteSet>(&d)) return finite_irreducible(*f);
    if (std::holds_alternative<Column>(d)) return true;
    if (std::holds_alternative<WholeSpace>(d)) return false;  // witness (0,w), (1,w)
    unsupported(d);
  }
  std::optional<Point> sup(const IrrDescriptor& d) const override {
    if (auto* f = std::get_if<FiniteSet>(&d)) {
      check_finite(*f);
      // Upper bounds of a set with points in two columns, or containing some
      // (m,omega) together with a point outside its ideal, are limit points
      // (m,omega) forming an antichain: infinite or empty, never least. A set
      // inside one column has its maximum as supremum.
      if (auto m = finite_max(f->points)) return m;
      return std::nullopt;
    }
    if (auto* c = std::get_if<Column>(&d)) return encode(c->j, kOmegaRow);
    if (std::holds_alternative<WholeSpace>(d)) return std::nullopt;  // (0,w), (1,w) have no upper bound
    unsupported(d);
  }

  // Down-sets of finite sets are Scott closed: a directed set without a
  // maximum lies in a finite part of one column, which meets the ideal of a
  // finite set only in finitely many points.
  ClosedForm closure_of_finite(const std::vector<Point>& pts) const override { return down_of_finite(pts); }
  std::vector<ClosedForm> closed_forms(std::size_t bound) const override {
    std::vector<ClosedForm> out{EmptyClosed{}, WholeClosed{}};
    for (std::size_t i = 0; i < bound; ++i) out.push_back(PrincipalIdeals{{point_at(i)}});
    return out;
  }
  // Alexandroff: irreducible = directed, and every directed set either has a
  // maximum or is an infinite part of a column, with supremum (j,omega).
  bool is_strongly_complete() const override { return !scott_; }
  bool supports_completion() const override { return false; }

 private:
  bool scott_;
};

// ---------------------------------------------------------------------------
// Catalog lookup, truncation, completion

/// Catalog atoms as spelled in the description language.
inline SymbolicHandle catalog_lookup(const std::string& name) {
  if (name == "omega" || name == "omega_scott") return std::make_shared<OmegaScott>();
  if (name == "omega_plus_one" || name == "omega_plus_one_scott") return std::make_shared<OmegaPlusOneScott>();
  if (name == "nat_cofinite") return std::make_shared<NatCofinite>();
  if (name == "nat_cofinite_top") return std::make_shared<NatCofiniteTop>();
  if (name == "nat_antichain") return std::make_shared<NatAntichain>();
  if (name == "johnstone" || name == "johnstone_scott") return std::make_shared<Johnstone>(true);
  if (name == "johnstone_alex") return std::make_shared<Johnstone>(false);
  return nullptr;
}

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"omega",        "omega_plus_one", "nat_cofinite",  "nat_cofinite_top",
                                              "nat_antichain", "johnstone",      "johnstone_alex"};
  return names;
}

inline bool sym_is_irreducible(const SymbolicSpace& s, const IrrDescriptor& d) { return s.is_irreducible(d); }
inline bool sym_is_directed(const SymbolicSpace& s, const IrrDescriptor& d) { return s.is_directed(d); }
inline std::optional<Point> sym_sup(const SymbolicSpace& s, const IrrDescriptor& d) { return s.sup(d); }
inline bool sym_is_si_open(const SymbolicSpace& s, const OpenForm& u) { return s.is_si_open(u); }

/// The first n coded points of s with the subspace topology. A finite
/// subspace of a T0 space is the Alexandroff space of the inherited order.
inline FinSpace truncate(const SymbolicSpace& s, std::size_t n) {
  check_cap(n, kDefaultCap, "truncation");
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (s.leq(s.point_at(i), s.point_at(j))) up[i].insert(j);
  return alexandroff(FinPoset::from_up_sets(std::move(up)));
}

/// The strong completion of a catalog entry, as another catalog entry.
struct SymbolicCompletion {
  SymbolicHandle space;
  /// The unit, on point codes.
  std::function<Point(Point)> eta;
  /// Points of the completion outside the image of eta.
  std::vector<Point> new_points;
  /// The hyperspace element (an SI-closed set of the source) a completion
  /// point stands for.
  std::function<ClosedForm(Point)> label;
  std::string summary;
};

inline SymbolicCompletion sym_strong_completion(const SymbolicHandle& s) {
  const std::string id = s->id();
  auto identity = [](Point p) { return p; };
  // Gamma_SI(omega) = {empty, down n, N}; the chain of point closures down n
  // is irreducible in the hyperspace with supremum N, so the I-closure of
  // the point closures adds exactly N, a new top.
  if (id == "omega_scott") {
    return {std::make_shared<OmegaPlusOneScott>(), identity, {OmegaPlusOneScott::kOmega},
            [](Point p) -> ClosedForm {
              if (p == OmegaPlusOneScott::kOmega) return WholeClosed{};
              return PrincipalIdeals{{p}};
            },
            "ω+1; one new top; η = inclusion"};
  }
  // Point closures are singletons; an infinite family of singletons meets
  // any two <>U, <>V (U, V cofinite) in their intersection and has
  // supremum N, while two singletons are separated. So the closure adds N.
  if (id == "nat_cofinite") {
    return {std::make_shared<NatCofiniteTop>(), identity, {NatCofiniteTop::kTop},
            [](Point p) -> ClosedForm {
              if (p == NatCofiniteTop::kTop) return WholeClosed{};
              return FiniteClosed{{p}};
            },
            "ℕ ∪ {⊤}; one new top; η = inclusion"};
  }
  // Strongly complete entries: the point closures are already I-closed.
  if (id == "nat_antichain" || id == "omega_plus_one_scott" || id == "nat_cofinite_top") {
    auto self = s;
    return {s, identity, {},
            [self](Point p) -> ClosedForm { return self->closure_of_finite({p}); },
            id == "nat_antichain" ? "ℕ discrete, unchanged; η = identity"
                                  : "already strongly complete; η = identity"};
  }
  throw Error(ErrorKind::Unsupported, "strong completion of " + id + " is not supported");
}

}  // namespace sctop
